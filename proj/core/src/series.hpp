#pragma once

// Truncated power series over a finite field, used for local expansions of
// monomials at curve points. Internal to the library.

#include <vector>

#include "superjac/curve.hpp"
#include "superjac/field.hpp"
#include "superjac/poly.hpp"

namespace superjac::detail {

class Series {
 public:
  Series(FieldCtx field, std::size_t prec) : c_(prec, field.zero()), field_(field) {}

  static Series constant(const FieldElement& c, std::size_t prec) {
    Series s(c.field(), prec);
    if (prec) s.c_[0] = c;
    return s;
  }
  // The local parameter itself.
  static Series param(FieldCtx field, std::size_t prec) {
    Series s(field, prec);
    if (prec > 1) s.c_[1] = field.one();
    return s;
  }

  std::size_t prec() const { return c_.size(); }
  FieldCtx field() const { return field_; }
  const FieldElement& operator[](std::size_t i) const { return c_[i]; }
  FieldElement& operator[](std::size_t i) { return c_[i]; }

  Series& operator+=(const Series& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  friend Series operator*(const Series& a, const Series& b) {
    const std::size_t n = a.c_.size();
    Series r(a.field_, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend Series operator*(Series a, const FieldElement& s) {
    for (auto& c : a.c_) c *= s;
    return a;
  }

  Series pow(unsigned e) const {
    Series r = constant(field_.one(), c_.size());
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  // Requires a unit constant term.
  Series inverse() const {
    const std::size_t n = c_.size();
    Series r(field_, n);
    if (!n) return r;
    const FieldElement inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
      FieldElement acc = field_.zero();
      for (std::size_t i = 1; i <= k; ++i) acc += c_[i] * r.c_[k - i];
      r.c_[k] = -acc * inv0;
    }
    return r;
  }

  // p(this), by Horner.
  static Series compose(const UniPoly& p, const Series& s) {
    Series r(s.field_, s.prec());
    for (int i = p.degree(); i >= 0; --i) {
      r = r * s;
      r.c_[0] += p.coeff(i);
    }
    return r;
  }

  // Index of the first nonzero coefficient, or prec() if none.
  std::size_t valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return i;
    return c_.size();
  }

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

 private:
  std::vector<FieldElement> c_;
  FieldCtx field_;
};

// Expansion (X, Y) of the curve y^n = f(x) at P to `prec` terms in a local
// parameter: x - x0 when y0 != 0, otherwise y.
std::pair<Series, Series> local_expansion(const UniPoly& f, int n, const AffinePoint& P, std::size_t prec);

}  // namespace superjac::detail
