#include "superjac/formulas.hpp"

#include <algorithm>

#include "superjac/roots.hpp"

namespace superjac {

namespace {

FieldCtx common_of(const std::vector<FieldElement>& xs, FieldCtx fallback) {
  if (xs.empty()) return fallback;
  FieldCtx F = xs.front().field();
  for (const auto& x : xs) F = compositum(F, x.field());
  return F;
}

void require_distinct(const std::vector<FieldElement>& xs, const char* stage) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) fail(ErrorCode::RepeatedNode, "node " + xs[i].to_string() + " repeated", stage);
}

std::vector<FieldElement> xs_of(const std::vector<AffinePoint>& pts) {
  std::vector<FieldElement> xs;
  for (const auto& P : pts) xs.push_back(P.x);
  return xs;
}

}  // namespace

SymmetricTable symmetric_eval(const std::vector<FieldElement>& xs, int top, FieldCtx field) {
  const FieldCtx F = common_of(xs, field);
  const auto m = static_cast<int>(xs.size());
  if (top < 0) top = m;
  const auto n = static_cast<std::size_t>(top) + 1;
  SymmetricTable t{std::vector<FieldElement>(n, F.zero()), std::vector<FieldElement>(n, F.zero())};
  t.e[0] = t.h[0] = F.one();
  for (const auto& x : xs) {
    for (std::size_t k = n - 1; k >= 1; --k) t.e[k] += x * t.e[k - 1];
    for (std::size_t k = 1; k < n; ++k) t.h[k] += x * t.h[k - 1];
  }
  for (std::size_t k = 1; k < n; ++k) {
    FieldElement s = F.zero();
    for (std::size_t i = 0; i <= k; ++i) {
      const FieldElement term = t.e[i] * t.h[k - i];
      if (i % 2) s -= term; else s += term;
    }
    if (!s.is_zero()) fail(ErrorCode::PreconditionFailed, "e/h identity fails at k = " + std::to_string(k), "symmetric");
  }
  return t;
}

std::vector<FieldElement> reduction_coeffs(const std::vector<FieldElement>& rho, const std::vector<FieldElement>& xs) {
  if (xs.empty() || xs.size() % 2)
    fail(ErrorCode::DegreeMismatch, "need 2g nodes, got " + std::to_string(xs.size()), "reduction_coeffs");
  const std::size_t g = xs.size() / 2;
  if (rho.size() != 3 * g + 1)
    fail(ErrorCode::DegreeMismatch,
         "expected " + std::to_string(3 * g + 1) + " coefficients, got " + std::to_string(rho.size()), "reduction_coeffs");
  if (!rho[0].is_one()) fail(ErrorCode::DegreeMismatch, "polynomial is not monic", "reduction_coeffs");
  const auto t = symmetric_eval(xs, static_cast<int>(g));
  std::vector<FieldElement> d;
  for (std::size_t k = 0; k <= g; ++k) {
    FieldElement s = t.h[k] * rho[0];
    for (std::size_t i = 1; i <= k; ++i) s += rho[i] * t.h[k - i];
    d.push_back(s);
  }
  return d;
}

UniPoly reduction_poly(const std::vector<FieldElement>& rho, const std::vector<FieldElement>& xs) {
  auto d = reduction_coeffs(rho, xs);
  std::reverse(d.begin(), d.end());
  return UniPoly(d.front().field(), d);
}

UniPoly LagrangeBasis::pair(std::size_t i, std::size_t j) const { return exact_div(l[i] * l[j], q); }

LagrangeBasis lagrange_basis(const std::vector<FieldElement>& xs) {
  if (xs.empty()) fail(ErrorCode::PreconditionFailed, "no nodes", "lagrange");
  require_distinct(xs, "lagrange");
  const FieldCtx F = common_of(xs, {});
  LagrangeBasis b;
  b.nodes = xs;
  b.q = UniPoly::from_roots(F, xs);
  const UniPoly dq = b.q.derivative();
  const std::size_t m = xs.size();
  for (std::size_t j = 0; j < m; ++j) {
    const FieldElement w = dq.eval(xs[j]).inverse();
    UniPoly lj = exact_div(b.q, UniPoly::linear(xs[j])) * w;
    std::vector<FieldElement> others;
    for (std::size_t k = 0; k < m; ++k)
      if (k != j) others.push_back(xs[k]);
    const auto t = symmetric_eval(others, static_cast<int>(m) - 1, F);
    for (std::size_t i = 0; i < m; ++i) {
      FieldElement alpha = t.e[i] * w;
      if (i % 2) alpha = -alpha;
      if (!(lj.coeff(static_cast<int>(m - 1 - i)) == alpha))
        fail(ErrorCode::PreconditionFailed, "Lagrange coefficient formula fails", "lagrange");
    }
    b.l.push_back(std::move(lj));
  }
  return b;
}

UniPoly lagrange_pair_closed_form(const std::vector<FieldElement>& xs, std::size_t i, std::size_t j) {
  const FieldCtx F = common_of(xs, {});
  UniPoly r = UniPoly::constant(-((xs[i] - xs[j]) * (xs[i] - xs[j])).inverse());
  for (std::size_t l = 0; l < xs.size(); ++l) {
    if (l == i || l == j) continue;
    r *= UniPoly::linear(xs[l]) * ((xs[l] - xs[i]) * (xs[l] - xs[j])).inverse();
  }
  return r.field() == F ? r : r.embed(F);
}

InterpolationCurve genus2_curve_equation(const SuperellipticCurve& c, const std::vector<AffinePoint>& pts) {
  if (c.n() != 2 || c.genus() != 2 || pts.size() != 4)
    fail(ErrorCode::PreconditionFailed, "needs four points on a genus-2 hyperelliptic curve", "genus2_curve");
  const auto b = lagrange_basis(xs_of(pts));
  const FieldCtx F = b.q.field();
  UniPoly S(F);
  for (std::size_t i = 0; i < 4; ++i) S += b.l[i] * pts[i].y;
  InterpolationCurve ic;
  ic.monomials = adopted_basis(c, 5).monomials;
  for (const auto& mono : ic.monomials) ic.coeffs.push_back(mono.j == 1 ? F.one() : -S.coeff(mono.i));
  std::size_t last = ic.coeffs.size();
  while (ic.coeffs[last - 1].is_zero()) --last;
  const FieldElement inv = ic.coeffs[last - 1].inverse();
  ic.poly = BiPoly(F);
  for (std::size_t k = 0; k < ic.coeffs.size(); ++k) {
    ic.coeffs[k] *= inv;
    ic.poly.set(ic.monomials[k].i, ic.monomials[k].j, ic.coeffs[k]);
  }
  return ic;
}

Genus2Reduction genus2_reduction(const SuperellipticCurve& c, const std::vector<AffinePoint>& pts) {
  if (c.n() != 2 || c.genus() != 2 || pts.size() != 4)
    fail(ErrorCode::PreconditionFailed, "needs four points on a genus-2 hyperelliptic curve", "genus2_reduction");
  Genus2Reduction r;
  r.basis = lagrange_basis(xs_of(pts));
  const FieldCtx F = r.basis.q.field();
  const auto& q = r.basis.q;
  r.u = c.f_in(F);
  for (std::size_t j = 0; j < 4; ++j) r.u -= r.basis.l[j] * r.basis.l[j] * (pts[j].y * pts[j].y);
  if (r.u.degree() != 6) fail(ErrorCode::NonGeneric, "u has degree " + std::to_string(r.u.degree()), "genus2_reduction");
  const FieldElement lc = r.u.leading();
  const UniPoly um = r.u.monic();
  const FieldElement u1 = um.coeff(5), u2 = um.coeff(4);
  const FieldElement q1 = q.coeff(3), q2 = q.coeff(2);
  const FieldElement h1 = u1 - q1;
  const FieldElement h2 = u2 - u1 * q1 + q1 * q1 - q2;
  r.h = UniPoly(F, std::vector<FieldElement>{h2, h1, F.one()}) * lc;
  if (!(r.h * q == r.u)) fail(ErrorCode::InexactDivision, "q does not divide u", "genus2_reduction");
  r.cross = UniPoly(F);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) r.cross += r.basis.pair(i, j) * (pts[i].y * pts[j].y);
  const UniPoly R = r.h - r.cross;
  if (R.degree() != 2) fail(ErrorCode::NonGeneric, "reduction has degree " + std::to_string(R.degree()), "genus2_reduction");
  r.result = R.monic();
  return r;
}

ShapeReport genus3_shape_check(const SuperellipticCurve& c, const InterpolationCurve& ic) {
  if (c.n() != 2) fail(ErrorCode::PreconditionFailed, "shape check needs n = 2", "shape");
  int max_num = -1, max_den = -1;
  for (const auto& mono : ic.monomials) {
    if (mono.j == 0) max_num = std::max(max_num, mono.i);
    if (mono.j == 1) max_den = std::max(max_den, mono.i);
  }
  ShapeReport r;
  for (const auto& [key, coeff] : ic.poly.terms()) {
    const auto [i, j] = key;
    if (j >= 2) fail(ErrorCode::NotLinearInY, "term x^" + std::to_string(i) + "y^" + std::to_string(j), "shape");
    int& deg = j == 0 ? r.deg_numerator : r.deg_denominator;
    deg = std::max(deg, i);
  }
  r.boundary = r.deg_numerator < max_num || r.deg_denominator < max_den;
  return r;
}

PicardInversion picard_invert(const ReducedDivisor& D, unsigned ext_cap) {
  const SuperellipticCurve& c = D.curve();
  if (!c.is_picard()) fail(ErrorCode::PreconditionFailed, "picard_invert needs y^3 = quartic", "picard_invert");
  if (D.degree() != 3) fail(ErrorCode::PreconditionFailed, "divisor must have three points", "picard_invert");
  const auto& pts = D.points();
  PicardInversion r;
  r.basis = lagrange_basis(xs_of(pts));
  const FieldCtx F = r.basis.q.field();
  const auto& q = r.basis.q;
  const UniPoly dq = q.derivative();
  std::vector<FieldElement> w;
  for (const auto& P : pts) w.push_back(dq.eval(P.x).inverse());

  r.u = c.f_in(F);
  for (std::size_t j = 0; j < 3; ++j) r.u -= r.basis.l[j].pow(3) * pts[j].y.pow(3);
  r.h1 = exact_div(r.u, q);

  r.mixed = q * (pts[0].y * pts[1].y * pts[2].y * w[0] * w[1] * w[2] * F.from_int(6));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      const std::size_t k = 3 - i - j;
      const FieldElement s = F.from_int(3) * pts[i].y * pts[i].y * pts[j].y * w[i] * w[i] * w[j];
      r.mixed += UniPoly::linear(pts[j].x) * UniPoly::linear(pts[k].x).pow(2) * s;
    }
  r.result = r.h1 - r.mixed;
  if (r.result.is_zero()) fail(ErrorCode::NonGeneric, "inversion polynomial vanishes", "picard_invert");
  r.result = r.result.monic();

  UniPoly S(F);
  for (std::size_t j = 0; j < 3; ++j) S += r.basis.l[j] * pts[j].y;
  const FieldCtx K = c.field();
  const FieldCtx E = splitting_field(r.result, ext_cap);
  const UniPoly SE = S.field() == E ? S : S.embed(E, K);
  const UniPoly RE = r.result.field() == E ? r.result : r.result.embed(E, K);
  std::vector<AffinePoint> out;
  for (const auto& x0 : poly_roots(RE, E)) out.push_back({x0, SE.eval(x0)});
  r.inverse = ReducedDivisor::make(c, out);
  return r;
}

}  // namespace superjac
