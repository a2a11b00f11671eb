#include "superjac/curve.hpp"

#include <numeric>

#include "superjac/roots.hpp"

namespace superjac {

int superelliptic_genus(int n, int d) { return (n * (d - 1) - d - std::gcd(n, d)) / 2 + 1; }

int differential_count(int n, int d) {
  const int s = (d + n - 1) / n;
  const int e = s * n - d;
  int total = 0;
  for (int j = 1; j < n; ++j) total += s * j - 1 - (e * j) / n;
  return total;
}

SuperellipticCurve SuperellipticCurve::make(FieldCtx field, int n, const UniPoly& f_in, Validation mode) {
  if (n < 2) fail(ErrorCode::DegreeTooSmall, "exponent n must be at least 2", "curve");
  if (f_in.is_zero()) fail(ErrorCode::ZeroPolynomial, "f is zero", "curve");
  const std::uint64_t p = field.characteristic();
  if (static_cast<std::uint64_t>(n) % p == 0)
    fail(ErrorCode::WildCharacteristic, "characteristic " + std::to_string(p) + " divides n = " + std::to_string(n),
         "curve");
  SuperellipticCurve c;
  c.field_ = field;
  c.n_ = n;
  c.relaxed_ = mode == Validation::Relaxed;
  const UniPoly f = (f_in.field() == field) ? f_in : f_in.embed(field);
  c.lc_ = f.leading();
  c.f_ = f.monic();
  const int d = c.f_.degree();
  if (d < 1) fail(ErrorCode::DegreeTooSmall, "f is constant", "curve");
  if (!c.relaxed_) {
    if (d <= n)
      fail(ErrorCode::DegreeTooSmall, "deg f = " + std::to_string(d) + " must exceed n = " + std::to_string(n), "curve");
    if (std::gcd(n, d) != 1)
      fail(ErrorCode::GcdViolation,
           "gcd(n, d) = gcd(" + std::to_string(n) + ", " + std::to_string(d) + ") = " + std::to_string(std::gcd(n, d)),
           "curve");
  }
  if (gcd(c.f_, c.f_.derivative()).degree() != 0)
    fail(ErrorCode::Singular, "f = " + c.f_.to_string() + " has a repeated root", "curve");
  c.g_ = superelliptic_genus(n, d);
  return c;
}

BiPoly SuperellipticCurve::equation() const {
  BiPoly e = BiPoly::term(field_.one(), 0, n_);
  for (int i = 0; i <= f_.degree(); ++i) e.set(i, 0, -f_.coeff(i));
  return e;
}

UniPoly SuperellipticCurve::f_in(const FieldCtx& target) const {
  return target == field_ ? f_ : f_.embed(target);
}

void SuperellipticCurve::require_strict(const char* stage) const {
  if (relaxed_) fail(ErrorCode::PreconditionFailed, "curve was built with relaxed validation", stage);
}

std::string SuperellipticCurve::to_string() const {
  return "y^" + std::to_string(n_) + " = " + f_.to_string() + " over " + field_.name();
}

bool point_on_curve(const SuperellipticCurve& c, const FieldElement& x, const FieldElement& y) {
  const FieldCtx f = common_field(x.field(), y.field());
  if (!f.contains(c.field())) fail(ErrorCode::FieldMismatch, f.name() + " does not contain " + c.field().name());
  const FieldElement xe = x.field() == f ? x : embed(x, f);
  const FieldElement ye = y.field() == f ? y : embed(y, f);
  return ye.pow(static_cast<std::uint64_t>(c.n())) == c.f_in(f).eval(xe);
}

std::uint64_t points_at_infinity(const SuperellipticCurve& c, unsigned m) {
  const BigInt Q = boost::multiprecision::pow(c.field().order(), m);
  const int e = std::gcd(c.n(), c.d());
  const auto r = static_cast<int>((Q - 1) % e);
  return static_cast<std::uint64_t>(std::gcd(e, r));
}

std::uint64_t points_over(const SuperellipticCurve& c, unsigned m, std::uint64_t scan_bound) {
  const FieldCtx base = c.field();
  const unsigned deg = base.degree() * m;
  const BigInt Q = boost::multiprecision::pow(BigInt(base.characteristic()), deg);
  if (Q > scan_bound)
    fail(ErrorCode::ScanBoundExceeded,
         "field of size " + Q.str() + " exceeds scan bound " + std::to_string(scan_bound), "points_over");
  const FieldCtx F = FieldCtx::make(base.characteristic(), deg);
  const UniPoly f = c.f_in(F);
  const auto q = static_cast<std::uint64_t>(Q);
  const std::uint64_t e = std::gcd(static_cast<std::uint64_t>(c.n()), q - 1);
  const std::uint64_t test_exp = (q - 1) / e;
  std::uint64_t count = 0;
  for (const auto& x : enumerate_field(F, scan_bound)) {
    const FieldElement v = f.eval(x);
    if (v.is_zero())
      count += 1;
    else if (v.pow(test_exp).is_one())
      count += e;
  }
  return count + points_at_infinity(c, m);
}

std::optional<FieldElement> root_of_unity(const SuperellipticCurve& c) {
  const FieldCtx F = c.field();
  const auto n = static_cast<std::uint64_t>(c.n());
  if ((F.order() - 1) % n != 0) return std::nullopt;
  std::vector<FieldElement> coeffs(n + 1, F.zero());
  coeffs[0] = -F.one();
  coeffs[n] = F.one();
  for (const auto& z : distinct_roots(UniPoly(F, std::move(coeffs)))) {
    bool primitive = true;
    for (std::uint64_t k = 1; k < n && primitive; ++k)
      if (n % k == 0 && z.pow(k).is_one()) primitive = false;
    if (primitive) return z;
  }
  return std::nullopt;
}

AffinePoint sigma(const SuperellipticCurve& c, const AffinePoint& P) {
  auto xi = root_of_unity(c);
  if (!xi) fail(ErrorCode::PreconditionFailed, "no primitive n-th root of unity in " + c.field().name(), "sigma");
  return {P.x, P.y * embed(*xi, P.y.field())};
}

}  // namespace superjac
