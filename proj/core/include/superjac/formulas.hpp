#pragma once

#include <vector>

#include "superjac/jacobian.hpp"

namespace superjac {

// e_0..e_top and h_0..h_top of x_1..x_m.
struct SymmetricTable {
  std::vector<FieldElement> e, h;
};

// top defaults to m. Asserts sum_{i=0}^k (-1)^i e_i h_{k-i} = 0 for
// 1 <= k <= top. `field` is used only when xs is empty.
SymmetricTable symmetric_eval(const std::vector<FieldElement>& xs, int top = -1, FieldCtx field = {});

// Quotient of the monic degree-3g polynomial with coefficients rho (rho[0] = 1
// is the leading one) by prod (x - x_i) over 2g nodes, as d_0..d_g with
// G(x) = sum d_k x^(g-k) and d_k = sum_{i<=k} rho_i h_{k-i}. Throws
// DegreeMismatch on inconsistent sizes or rho[0] != 1.
std::vector<FieldElement> reduction_coeffs(const std::vector<FieldElement>& rho, const std::vector<FieldElement>& xs);
// The same as a polynomial.
UniPoly reduction_poly(const std::vector<FieldElement>& rho, const std::vector<FieldElement>& xs);

struct LagrangeBasis {
  std::vector<FieldElement> nodes;
  UniPoly q;              // prod (x - x_i)
  std::vector<UniPoly> l; // l_i(x_j) = delta_ij

  // l_i l_j / q for i != j (0-based).
  UniPoly pair(std::size_t i, std::size_t j) const;
};

// Throws RepeatedNode. Checks the coefficient formula
// alpha_{ji} = (-1)^i e_i(x_k, k != j) / q'(x_j) for every l_j.
LagrangeBasis lagrange_basis(const std::vector<FieldElement>& xs);

// -prod_{l != i,j} (x - x_l) / ((x_l - x_i)(x_l - x_j)) / (x_i - x_j)^2, the
// closed form of l_i l_j / q.
UniPoly lagrange_pair_closed_form(const std::vector<FieldElement>& xs, std::size_t i, std::size_t j);

// y - sum y_i l_i(x) on the genus-2 basis 1, x, x^2, y, x^3, normalised so
// the last nonzero coefficient is 1. Points share one field. Throws
// RepeatedNode, or PreconditionFailed unless n = 2, g = 2 and four points.
InterpolationCurve genus2_curve_equation(const SuperellipticCurve& c, const std::vector<AffinePoint>& pts);

struct Genus2Reduction {
  LagrangeBasis basis;
  UniPoly u;      // f - sum y_j^2 l_j^2
  UniPoly h;      // u / q from the top coefficients of u and q
  UniPoly cross;  // sum_{i != j} y_i y_j l_i l_j / q
  UniPoly result; // monic (h - cross)
};

// Monic quadratic whose roots are the x-coordinates of the opposite sum of
// the four points. Throws NonGeneric when u drops degree or the result is
// not quadratic.
Genus2Reduction genus2_reduction(const SuperellipticCurve& c, const std::vector<AffinePoint>& pts);

struct ShapeReport {
  int deg_numerator = -1;   // h in y = -h(x)/g(x)
  int deg_denominator = -1; // g
  bool boundary = false;    // either degree below the maximum the basis allows
};

// For a hyperelliptic interpolation curve. Throws NotLinearInY when a y^2
// or higher term is present, PreconditionFailed for n != 2.
ShapeReport genus3_shape_check(const SuperellipticCurve& c, const InterpolationCurve& ic);

struct PicardInversion {
  LagrangeBasis basis;
  UniPoly u;      // f - sum y_j^3 l_j^3
  UniPoly h1;     // u / q
  UniPoly mixed;  // q^2 [ sum_{i != j} 3 y_i^2 y_j / (...) + 6 y_1 y_2 y_3 / (...) ]
  UniPoly result; // h1 - mixed
  ReducedDivisor inverse;
};

// -D for a Picard curve divisor with three distinct x-coordinates. Throws
// RepeatedNode, NonGeneric, or PreconditionFailed for other curves.
PicardInversion picard_invert(const ReducedDivisor& D, unsigned ext_cap = kDefaultExtensionCap);

}  // namespace superjac
