#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "superjac/curve.hpp"

namespace superjac {

// x^i y^j with 0 <= j < n.
struct Monomial {
  int i = 0;
  int j = 0;

  int order(int n, int d) const noexcept { return n * i + d * j; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  // "1", "x", "x^2", "y", "xy", "x^3y^2", ...
  std::string to_string() const;
};

struct AdoptedBasis {
  int n = 0, d = 0;
  std::vector<Monomial> monomials;
  std::vector<int> orders;
};

// First `count` monomials ordered by pole order n*i + d*j at infinity,
// obtained by walking the numerical semigroup <n, d>.
AdoptedBasis adopted_basis(int n, int d, int count);
AdoptedBasis adopted_basis(const SuperellipticCurve& c, int count);

// Row j holds x^i y^j for 0 <= i <= floor((3g - j d)/n); unused cells are
// empty. Width is floor(3g/n) + 1.
struct BasisTable {
  int n = 0, d = 0, g = 0;
  std::vector<std::vector<std::optional<Monomial>>> rows;
  int width() const noexcept { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
};
BasisTable basis_matrix(int n, int d);
BasisTable basis_matrix(const SuperellipticCurve& c);

// Distinct pole orders of x^i y^j with 0 <= i <= d and 0 <= j < n, ascending.
std::vector<int> box_orders(int n, int d);

// Inverse of Monomial::to_string; also accepts "yx^2", "x^2 y" and the like.
// Throws ParseError.
Monomial parse_monomial(std::string_view text);

// Positive integers outside <n, d>.
std::vector<int> gap_sequence(int n, int d);
std::vector<int> gap_sequence(const SuperellipticCurve& c);
// Elements of <n, d> up to and including `limit`.
std::vector<int> semigroup_elements(int n, int d, int limit);

// The monomial of pole order exactly `order`, for 2g <= order <= 3g. Among
// several candidates the least y exponent wins, then the least x exponent.
Monomial exact_order_monomial(int n, int d, int order);
Monomial exact_order_monomial(const SuperellipticCurve& c, int order);

// Largest total degree i + j among the first 2g + 1 monomials.
int interp_degree_bound(int n, int d);
int interp_degree_bound(const SuperellipticCurve& c);

// Closed-form prefix for y^2 = f(x), deg f = 2g + 1:
// 1, x, ..., x^g, y, x^(g+1), yx, ..., x^(g+s), yx^s [, x^(g+s+1) when g even]
// with s = floor((g - 1)/2). Throws NotHyperelliptic.
std::vector<Monomial> hyperelliptic_prefix(const SuperellipticCurve& c);
std::vector<Monomial> hyperelliptic_prefix_for_genus(int g);

// Closed-form prefix for y^3 = f(x): {x^i}_{i<d}, {y x^i}_{i<s}, {y^2 x^i}_{i<q}
// where s and q count the entries of the y and y^2 rows.
struct TriagonalPrefix {
  int s = 0, q = 0;                  // counts from enumeration
  int printed_s = 0, printed_q = 0;  // counts from the congruence formulas
  bool printed_integral = true;      // printed formulas gave integers
  bool matches_printed = true;
  std::vector<Monomial> monomials;   // sorted by pole order
};
// Throws NotTriagonal unless n = 3 and gcd(3, d) = 1.
TriagonalPrefix triagonal_prefix(int n, int d);
TriagonalPrefix triagonal_prefix(const SuperellipticCurve& c);

}  // namespace superjac
