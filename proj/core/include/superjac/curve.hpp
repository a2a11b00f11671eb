#pragma once

#include <cstdint>
#include <optional>

#include "superjac/bipoly.hpp"
#include "superjac/poly.hpp"

namespace superjac {

struct AffinePoint {
  FieldElement x, y;

  friend bool operator==(const AffinePoint& a, const AffinePoint& b) { return a.x == b.x && a.y == b.y; }
  friend std::strong_ordering operator<=>(const AffinePoint& a, const AffinePoint& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
  std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

enum class Validation {
  Strict,
  // Admits d <= n and gcd(n, d) != 1. Such curves may be point-counted but
  // are rejected by the group law.
  Relaxed,
};

inline constexpr std::uint64_t kDefaultScanBound = 1'000'000;

// Genus of y^n = f(x) with f squarefree of degree d.
int superelliptic_genus(int n, int d);
// sum_{j=1}^{n-1} b_j with b_j = s*j - 1 - floor(e*j/n), d = s*n - e.
int differential_count(int n, int d);

// y^n = f(x) over F_q with f monic and squarefree.
class SuperellipticCurve {
 public:
  SuperellipticCurve() = default;

  // A non-monic f is divided by its leading coefficient, which is kept in
  // original_leading(). Throws WildCharacteristic, DegreeTooSmall,
  // GcdViolation or Singular.
  static SuperellipticCurve make(FieldCtx field, int n, const UniPoly& f,
                                 Validation mode = Validation::Strict);

  FieldCtx field() const noexcept { return field_; }
  int n() const noexcept { return n_; }
  int d() const noexcept { return f_.degree(); }
  int genus() const noexcept { return g_; }
  const UniPoly& f() const noexcept { return f_; }
  const FieldElement& original_leading() const noexcept { return lc_; }
  bool was_normalized() const noexcept { return !lc_.is_one(); }
  bool relaxed() const noexcept { return relaxed_; }
  bool is_hyperelliptic() const noexcept { return n_ == 2; }
  bool is_picard() const noexcept { return n_ == 3 && d() == 4; }

  // y^n - f(x).
  BiPoly equation() const;
  // f with coefficients moved into `target`.
  UniPoly f_in(const FieldCtx& target) const;

  // Throws PreconditionFailed for curves built in relaxed mode.
  void require_strict(const char* stage) const;

  std::string to_string() const;

  friend bool operator==(const SuperellipticCurve& a, const SuperellipticCurve& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.f_ == b.f_;
  }

 private:
  FieldCtx field_;
  int n_ = 0;
  int g_ = 0;
  UniPoly f_;
  FieldElement lc_;
  bool relaxed_ = false;
};

// y^n == f(x); x and y must lie in a common extension of the curve field.
bool point_on_curve(const SuperellipticCurve& c, const FieldElement& x, const FieldElement& y);
inline bool point_on_curve(const SuperellipticCurve& c, const AffinePoint& P) { return point_on_curve(c, P.x, P.y); }

// Points at infinity of the smooth model over F_{q^m}.
std::uint64_t points_at_infinity(const SuperellipticCurve& c, unsigned m = 1);

// #X(F_{q^m}), q = |curve field|, including points at infinity. Throws
// ScanBoundExceeded when q^m > scan_bound.
std::uint64_t points_over(const SuperellipticCurve& c, unsigned m = 1,
                          std::uint64_t scan_bound = kDefaultScanBound);

// A primitive n-th root of unity in the curve field (the least one in
// canonical order), or nullopt when n does not divide q - 1.
std::optional<FieldElement> root_of_unity(const SuperellipticCurve& c);

// (x, y) -> (x, xi * y). Throws PreconditionFailed without a root of unity.
AffinePoint sigma(const SuperellipticCurve& c, const AffinePoint& P);

}  // namespace superjac
