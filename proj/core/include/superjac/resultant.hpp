#pragma once

#include <vector>

#include "superjac/bipoly.hpp"
#include "superjac/poly.hpp"

namespace superjac {

// Resultants are Sylvester determinants with coefficients taken from the
// leading term down, so Res(a, b) = lc(a)^deg(b) * prod_{a(r)=0} b(r) and
// Res(b, a) = (-1)^(deg a * deg b) Res(a, b). When one argument is a nonzero
// constant c and the other has degree m the value is c^m; two constants give 1.

// Univariate, over a field.
FieldElement resultant(const UniPoly& a, const UniPoly& b);

// Polynomials in an outer variable whose coefficients lie in K[t]; entry j of
// each vector is the coefficient of the outer variable to the j-th power.
// Computed by fraction-free (Bareiss) elimination.
UniPoly resultant(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b);

// Eliminate y; the result is a polynomial in x. Throws ZeroPolynomial.
UniPoly resultant_y(const BiPoly& a, const BiPoly& b);
// Eliminate x; the result is a polynomial in y.
UniPoly resultant_x(const BiPoly& a, const BiPoly& b);

// Res_x(F(x, y), fx(x)), a polynomial in y. A constant fx gives fx^deg_x(F)
// (so 1 for fx = 1).
UniPoly conjugate_y_poly(const BiPoly& curve_equation, const UniPoly& fx);

}  // namespace superjac
