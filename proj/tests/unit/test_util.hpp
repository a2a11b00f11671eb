#pragma once

#include <gtest/gtest.h>

#include <random>

#include "superjac/formulas.hpp"
#include "superjac/oracle.hpp"
#include "superjac/resultant.hpp"
#include "superjac/roots.hpp"
#include "superjac/sampling.hpp"

namespace superjac::testing {

inline FieldCtx F(std::uint64_t p, unsigned k = 1) { return FieldCtx::make(p, k); }

inline FieldElement el(const FieldCtx& K, std::int64_t v) { return K.from_int(v); }

inline SuperellipticCurve curve(std::uint64_t p, int n, std::initializer_list<std::int64_t> f, unsigned k = 1) {
  const FieldCtx K = F(p, k);
  return SuperellipticCurve::make(K, n, UniPoly(K, f));
}

// y^2 = x^5 + 3x + 1
inline SuperellipticCurve genus2(std::uint64_t p) { return curve(p, 2, {1, 3, 0, 0, 0, 1}); }
// y^2 = x^7 + 3x + 1
inline SuperellipticCurve genus3(std::uint64_t p) { return curve(p, 2, {1, 3, 0, 0, 0, 0, 0, 1}); }
// y^3 = x^4 + x + 1
inline SuperellipticCurve picard(std::uint64_t p) { return curve(p, 3, {1, 1, 0, 0, 1}); }

inline ReducedDivisor pts(const SuperellipticCurve& c, std::initializer_list<std::pair<std::int64_t, std::int64_t>> xy) {
  std::vector<AffinePoint> v;
  for (auto [x, y] : xy) v.push_back({el(c.field(), x), el(c.field(), y)});
  return ReducedDivisor::make(c, v);
}

inline MumfordDivisor mumford(const ReducedDivisor& D) {
  return mumford_from_points(D).canonical(D.curve().field());
}

inline std::vector<std::string> names(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

// m random points with pairwise distinct x-coordinates.
inline std::vector<WeightedPoint> distinct_points(const SuperellipticCurve& c, std::size_t m, std::mt19937_64& rng) {
  std::vector<WeightedPoint> wp;
  while (wp.size() < m) {
    const auto P = random_point(c, rng);
    bool fresh = true;
    for (const auto& w : wp) fresh = fresh && w.point.x != P.x;
    if (fresh) wp.push_back({P, 1});
  }
  return wp;
}

// Draws until the draw avoids non-generic configurations.
template <class Fn>
auto retry(Fn&& fn, int attempts = 50) {
  for (int i = 1;; ++i) {
    try {
      return fn();
    } catch (const Error& e) {
      if (!e.is_non_generic() || i >= attempts) throw;
    }
  }
}

}  // namespace superjac::testing
