#include "superjac/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "superjac/roots.hpp"

namespace superjac {

namespace {

constexpr int kMaxTries = 10000;

// Y^n - f(x0) over x0's field.
UniPoly fibre(const SuperellipticCurve& c, const FieldElement& x0) {
  const FieldCtx F = x0.field();
  std::vector<FieldElement> cs(static_cast<std::size_t>(c.n()) + 1, F.zero());
  cs[0] = -c.f_in(F).eval(x0);
  cs.back() = F.one();
  return UniPoly(F, std::move(cs));
}

// The Frobenius orbit over the curve field of a point over S, or nothing if
// x0 is ramified or has no y over S.
std::optional<std::vector<AffinePoint>> orbit_points(const SuperellipticCurve& c, const FieldElement& x0,
                                                     unsigned size, std::mt19937_64& rng) {
  const UniPoly fib = fibre(c, x0);
  if (fib.coeff(0).is_zero()) return std::nullopt;
  const auto ys = distinct_roots(fib);
  if (ys.empty()) return std::nullopt;
  AffinePoint P{x0, ys[uniform_below(rng, ys.size())]};
  std::vector<AffinePoint> out;
  const unsigned step = c.field().degree();
  for (unsigned i = 0; i < size; ++i) {
    out.push_back(P);
    P = {frobenius(P.x, step), frobenius(P.y, step)};
  }
  return out;
}

// Drawn divisors must be the minimal representatives of their classes.
bool is_reduced(const ReducedDivisor& D) {
  try {
    return normalize(D) == D;
  } catch (const Error& e) {
    if (!e.is_non_generic()) throw;
    return false;
  }
}

bool distinct_x(const ReducedDivisor& D) {
  for (std::size_t i = 1; i < D.points().size(); ++i)
    if (D.points()[i].x == D.points()[i - 1].x) return false;
  return true;
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

AffinePoint random_point(const SuperellipticCurve& c, std::mt19937_64& rng, FieldCtx field) {
  if (!field.valid()) field = c.field();
  for (int t = 0; t < kMaxTries; ++t) {
    const FieldElement x = field.random(rng);
    const UniPoly fib = fibre(c, x);
    if (fib.coeff(0).is_zero()) continue;
    const auto ys = distinct_roots(fib);
    if (!ys.empty()) return {x, ys[uniform_below(rng, ys.size())]};
  }
  fail(ErrorCode::PreconditionFailed, "no unramified point found over " + field.name(), "sample");
}

ReducedDivisor random_divisor(const SuperellipticCurve& c, int r, std::mt19937_64& rng, unsigned ext_cap) {
  const FieldCtx K = c.field();
  const UniPoly f = c.f();
  for (int t = 0; t < kMaxTries; ++t) {
    std::vector<FieldElement> cs;
    for (int i = 0; i < r; ++i) cs.push_back(K.random(rng));
    cs.push_back(K.one());
    const UniPoly u(K, cs);
    if (gcd(u, u.derivative()).degree() > 0 || gcd(u, f).degree() > 0) continue;
    unsigned l = 1;
    for (unsigned d : factor_degrees(u)) l = std::lcm(l, d);
    if (K.degree() * l > ext_cap) continue;
    const FieldCtx E = FieldCtx::make(K.characteristic(), K.degree() * l);
    const auto roots = poly_roots(u, E, rng());
    std::vector<AffinePoint> pts;
    std::vector<FieldElement> used;
    bool ok = true;
    for (const auto& x : roots) {
      if (std::find(used.begin(), used.end(), x) != used.end()) continue;
      const unsigned orbit = std::lcm(element_degree(x), K.degree()) / K.degree();
      const FieldCtx S = FieldCtx::make(K.characteristic(), K.degree() * orbit);
      const FieldElement xs = *descend(x, S, K);
      const auto o = orbit_points(c, xs, orbit, rng);
      if (!o) {
        ok = false;
        break;
      }
      FieldElement z = x;
      for (unsigned i = 0; i < orbit; ++i) {
        used.push_back(z);
        z = frobenius(z, K.degree());
      }
      pts.insert(pts.end(), o->begin(), o->end());
    }
    if (!ok) continue;
    ReducedDivisor D = ReducedDivisor::make(c, pts);
    if (is_reduced(D)) return D;
  }
  fail(ErrorCode::PreconditionFailed, "could not sample a degree " + std::to_string(r) + " divisor", "sample");
}

ReducedDivisor random_divisor_with_orbits(const SuperellipticCurve& c, const std::vector<unsigned>& orbits,
                                          std::mt19937_64& rng) {
  const FieldCtx K = c.field();
  for (int t = 0; t < kMaxTries; ++t) {
    std::vector<AffinePoint> pts;
    bool ok = true;
    for (unsigned k : orbits) {
      const FieldCtx S = FieldCtx::make(K.characteristic(), K.degree() * k);
      const FieldElement x = S.random(rng);
      if (std::lcm(element_degree(x), K.degree()) != S.degree()) {
        ok = false;
        break;
      }
      const auto o = orbit_points(c, x, k, rng);
      if (!o) {
        ok = false;
        break;
      }
      pts.insert(pts.end(), o->begin(), o->end());
    }
    if (!ok) continue;
    const ReducedDivisor D = ReducedDivisor::make(c, pts);
    if (distinct_x(D) && is_reduced(D)) return D;
  }
  fail(ErrorCode::PreconditionFailed, "could not sample a divisor with the requested orbits", "sample");
}

}  // namespace superjac
