#pragma once

#include <string>
#include <utility>
#include <vector>

#include "superjac/field.hpp"

namespace superjac {

// Degree of the zero polynomial. Compares below every real degree.
inline constexpr int kZeroDegree = -1;

// Dense univariate polynomial over a finite field, lowest degree first.
// The coefficient vector never has a zero leading entry; the zero polynomial
// has no coefficients. A prime-field polynomial combines with one over an
// extension of the same characteristic, the result living in the extension.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(FieldCtx field) : field_(field) {}
  UniPoly(FieldCtx field, std::vector<FieldElement> coeffs);
  // Convenience for tests: small integer coefficients, lowest degree first.
  UniPoly(FieldCtx field, std::initializer_list<std::int64_t> coeffs);

  static UniPoly constant(const FieldElement& c);
  static UniPoly x(FieldCtx field);
  // c * x^deg.
  static UniPoly monomial(const FieldElement& c, int deg);
  // x - r.
  static UniPoly linear(const FieldElement& r);
  // Product of (x - r) over the list.
  static UniPoly from_roots(FieldCtx field, const std::vector<FieldElement>& roots);

  FieldCtx field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }
  const std::vector<FieldElement>& coeffs() const noexcept { return c_; }
  // Zero beyond the degree.
  FieldElement coeff(int i) const;
  FieldElement leading() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const FieldElement& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const FieldElement& s) { return a *= s; }
  friend UniPoly operator*(const FieldElement& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  UniPoly monic() const;
  UniPoly derivative() const;
  UniPoly pow(std::uint64_t e) const;
  FieldElement eval(const FieldElement& x) const;
  // this(g(x)).
  UniPoly compose(const UniPoly& g) const;
  // Map every coefficient into `target`, see embed().
  UniPoly embed(const FieldCtx& target, const FieldCtx& over = {}) const;
  // Every coefficient of this polynomial lies in `sub` (as a subfield of the
  // coefficient field via the canonical embedding).
  bool coeffs_in(const FieldCtx& sub, const FieldCtx& over = {}) const;
  // Inverse of embed(); throws PreconditionFailed if a coefficient is outside `sub`.
  UniPoly descend(const FieldCtx& sub, const FieldCtx& over = {}) const;

  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  FieldCtx field_;
  std::vector<FieldElement> c_;
};

// Quotient and remainder; throws ZeroPolynomial for b == 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
// Throws InexactDivision when b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct XgcdResult {
  UniPoly g, s, t;  // s*a + t*b = g, g monic
};
XgcdResult xgcd(const UniPoly& a, const UniPoly& b);

UniPoly pow_mod(const UniPoly& base, const BigInt& e, const UniPoly& mod);

// Largest k with (x - r)^k | a. a must be nonzero.
int root_multiplicity(const UniPoly& a, const FieldElement& r);

// Field of a result combining two operands: the larger of the two when one
// is a prime field of the same characteristic; FieldMismatch otherwise.
FieldCtx common_field(const FieldCtx& a, const FieldCtx& b);

}  // namespace superjac
