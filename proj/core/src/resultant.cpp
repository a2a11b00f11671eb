#include "superjac/resultant.hpp"

#include <utility>

#include "superjac/linalg.hpp"

namespace superjac {

namespace {

template <class T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& a, const std::vector<T>& b, const T& zero) {
  // a, b lowest degree first with nonzero leading entries.
  const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
  std::vector<std::vector<T>> s(size, std::vector<T>(size, zero));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
  return s;
}

}  // namespace

FieldElement resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) fail(ErrorCode::ZeroPolynomial, "resultant with the zero polynomial");
  const FieldCtx f = common_field(a.field(), b.field());
  if (a.degree() == 0) return (f.zero() + a.coeff(0)).pow(static_cast<std::uint64_t>(b.degree()));
  if (b.degree() == 0) return (f.zero() + b.coeff(0)).pow(static_cast<std::uint64_t>(a.degree()));
  std::vector<FieldElement> ac, bc;
  for (const auto& c : a.coeffs()) ac.push_back(f.zero() + c);
  for (const auto& c : b.coeffs()) bc.push_back(f.zero() + c);
  return determinant(sylvester(ac, bc, f.zero()), f);
}

UniPoly resultant(const std::vector<UniPoly>& a_in, const std::vector<UniPoly>& b_in) {
  auto trim = [](std::vector<UniPoly> v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
  };
  const std::vector<UniPoly> a = trim(a_in), b = trim(b_in);
  if (a.empty() || b.empty()) fail(ErrorCode::ZeroPolynomial, "resultant with the zero polynomial");
  FieldCtx f;
  for (const auto& c : a) f = common_field(f, c.field());
  for (const auto& c : b) f = common_field(f, c.field());
  const UniPoly one = UniPoly::constant(f.one());
  if (a.size() == 1) return one * a[0].pow(b.size() - 1);
  if (b.size() == 1) return one * b[0].pow(a.size() - 1);

  auto s = sylvester(a, b, UniPoly(f));
  const std::size_t n = s.size();
  // Bareiss: every intermediate entry is a minor, divisions are exact.
  UniPoly prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (s[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && s[piv][k].is_zero()) ++piv;
      if (piv == n) return UniPoly(f);
      std::swap(s[piv], s[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) s[i][j] = exact_div(s[i][j] * s[k][k] - s[i][k] * s[k][j], prev);
      s[i][k] = UniPoly(f);
    }
    prev = s[k][k];
  }
  UniPoly det = s[n - 1][n - 1];
  return negate ? -det : det;
}

UniPoly resultant_y(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) fail(ErrorCode::ZeroPolynomial, "resultant with the zero polynomial");
  return resultant(a.coefficients_in_y(), b.coefficients_in_y());
}

UniPoly resultant_x(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) fail(ErrorCode::ZeroPolynomial, "resultant with the zero polynomial");
  return resultant(a.coefficients_in_x(), b.coefficients_in_x());
}

UniPoly conjugate_y_poly(const BiPoly& curve_equation, const UniPoly& fx) {
  if (fx.is_zero()) fail(ErrorCode::ZeroPolynomial, "conjugate polynomial of the zero polynomial");
  std::vector<UniPoly> b;
  for (const auto& c : fx.coeffs()) b.push_back(UniPoly::constant(c));
  return resultant(curve_equation.coefficients_in_x(), b);
}

}  // namespace superjac
