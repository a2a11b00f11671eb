#include "superjac/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "series.hpp"
#include "superjac/roots.hpp"

namespace superjac {

namespace {

void require_hyperelliptic(const SuperellipticCurve& c) {
  if (c.n() != 2) fail(ErrorCode::NotHyperelliptic, "Mumford form needs n = 2, got " + std::to_string(c.n()), "oracle");
}

UniPoly to_field(const UniPoly& a, const FieldCtx& E, const FieldCtx& over) {
  return a.field() == E ? a : a.embed(E, over);
}

}  // namespace

MumfordDivisor MumfordDivisor::canonical(const FieldCtx& base) const {
  unsigned s = base.degree();
  for (const auto* poly : {&u, &v})
    for (const auto& c : poly->coeffs()) s = std::lcm(s, element_degree(c));
  const FieldCtx sub = FieldCtx::make(base.characteristic(), s);
  if (sub == field()) return *this;
  return {u.descend(sub, base), v.descend(sub, base)};
}

MumfordDivisor mumford_identity(const SuperellipticCurve& c) {
  require_hyperelliptic(c);
  return {UniPoly::constant(c.field().one()), UniPoly(c.field())};
}

MumfordDivisor mumford_from_points(const ReducedDivisor& D) {
  const SuperellipticCurve& c = D.curve();
  require_hyperelliptic(c);
  const FieldCtx F = D.field();
  const UniPoly f = c.f_in(F);
  const auto grouped = group_points(D.points());
  for (std::size_t a = 0; a < grouped.size(); ++a) {
    const auto& P = grouped[a].point;
    if (P.y.is_zero() && grouped[a].mult > 1)
      fail(ErrorCode::NotReduced, "ramification point " + P.to_string() + " repeated", "mumford");
    for (std::size_t b = a + 1; b < grouped.size(); ++b)
      if (grouped[b].point.x == P.x)
        fail(ErrorCode::ConjugatePair, P.to_string() + " appears with its conjugate", "mumford");
  }
  // v agrees with the local branch y(x) to the right order at each point;
  // glue the pieces by CRT.
  UniPoly u = UniPoly::constant(F.one());
  UniPoly v(F);
  for (const auto& w : grouped) {
    const auto k = static_cast<std::size_t>(w.mult);
    const UniPoly piece_mod = UniPoly::linear(w.point.x).pow(k);
    UniPoly piece(F);
    if (w.point.y.is_zero()) {
      piece = UniPoly(F);
    } else {
      auto [X, Y] = detail::local_expansion(f, 2, w.point, k);
      const UniPoly shift = UniPoly::linear(w.point.x);
      UniPoly power = UniPoly::constant(F.one());
      for (std::size_t r = 0; r < k; ++r) {
        piece += power * Y[r];
        power *= shift;
      }
    }
    // v_new = v + u * ((piece - v) * u^{-1} mod piece_mod).
    const auto inv = xgcd(u % piece_mod, piece_mod);
    const UniPoly t = ((piece - v) * inv.s) % piece_mod;
    v = (v + u * t);
    u *= piece_mod;
    v = v % u;
  }
  return {u, v};
}

bool is_valid_mumford(const SuperellipticCurve& c, const MumfordDivisor& A) {
  if (c.n() != 2 || A.u.is_zero() || !A.u.is_monic()) return false;
  if (A.u.degree() > c.genus() || A.v.degree() >= A.u.degree()) return false;
  const FieldCtx F = A.field();
  return ((A.v * A.v - c.f_in(F)) % A.u).is_zero();
}

ReducedDivisor points_from_mumford(const SuperellipticCurve& c, const MumfordDivisor& A, unsigned ext_cap) {
  require_hyperelliptic(c);
  if (A.is_identity()) return ReducedDivisor::identity(c);
  const FieldCtx E = splitting_field(A.u, ext_cap);
  const UniPoly u = to_field(A.u, E, c.field());
  const UniPoly v = to_field(A.v, E, c.field());
  std::vector<AffinePoint> pts;
  for (const auto& x : poly_roots(u, E)) pts.push_back({x, v.eval(x)});
  return ReducedDivisor::make(c, pts);
}

MumfordDivisor mumford_negate(const MumfordDivisor& A) { return {A.u, -A.v}; }

MumfordDivisor cantor_add(const SuperellipticCurve& c, const MumfordDivisor& A, const MumfordDivisor& B) {
  require_hyperelliptic(c);
  const FieldCtx K = c.field();
  FieldCtx E = compositum(A.field(), B.field());
  E = compositum(E, K);
  const UniPoly u1 = to_field(A.u, E, K), v1 = to_field(A.v, E, K);
  const UniPoly u2 = to_field(B.u, E, K), v2 = to_field(B.v, E, K);
  const UniPoly f = c.f_in(E);

  const auto [d1, e1, e2] = xgcd(u1, u2);
  const auto [d, c1, c2] = xgcd(d1, v1 + v2);
  const UniPoly s1 = c1 * e1, s2 = c1 * e2, s3 = c2;
  UniPoly u = exact_div(u1 * u2, d * d);
  UniPoly v = exact_div(s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f), d) % u;
  while (u.degree() > c.genus()) {
    const UniPoly un = exact_div(f - v * v, u).monic();
    v = (-v) % un;
    u = un;
  }
  u = u.monic();
  return {u, v % u};
}

MumfordDivisor cantor_scalar_mul(const SuperellipticCurve& c, const MumfordDivisor& A, const BigInt& n) {
  if (n < 0) return cantor_scalar_mul(c, mumford_negate(A), -n);
  MumfordDivisor acc = mumford_identity(c);
  if (n == 0) return acc;
  const auto bits = boost::multiprecision::msb(n);
  for (auto i = static_cast<std::int64_t>(bits); i >= 0; --i) {
    acc = cantor_add(c, acc, acc);
    if (boost::multiprecision::bit_test(n, static_cast<unsigned>(i))) acc = cantor_add(c, acc, A);
  }
  return acc;
}

BigInt LPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& x : a) s += x;
  return s;
}

LPolynomial l_polynomial(const SuperellipticCurve& c, std::uint64_t scan_bound) {
  const int g = c.genus();
  const BigInt q = c.field().order();
  LPolynomial L;
  std::vector<BigInt> S(static_cast<std::size_t>(g) + 2);
  for (int i = 1; i <= g; ++i) {
    L.counts.push_back(points_over(c, static_cast<unsigned>(i), scan_bound));
    S[static_cast<std::size_t>(i)] = boost::multiprecision::pow(q, static_cast<unsigned>(i)) + 1 - L.counts.back();
  }
  L.a.assign(static_cast<std::size_t>(2 * g) + 1, 0);
  L.a[0] = 1;
  // k a_k = -sum_{i=1}^k S_i a_{k-i}.
  for (int k = 1; k <= g; ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) acc += S[static_cast<std::size_t>(i)] * L.a[static_cast<std::size_t>(k - i)];
    if (acc % k != 0) fail(ErrorCode::PreconditionFailed, "Newton identity is not integral at k = " + std::to_string(k), "zeta");
    L.a[static_cast<std::size_t>(k)] = -acc / k;
  }
  for (int i = 0; i < g; ++i)
    L.a[static_cast<std::size_t>(2 * g - i)] = boost::multiprecision::pow(q, static_cast<unsigned>(g - i)) * L.a[static_cast<std::size_t>(i)];
  // Recompute S_1..S_g from the full polynomial as a consistency check, then
  // predict the next count when it is cheap to verify.
  for (int k = 1; k <= g + 1; ++k) {
    BigInt acc = k * L.a[static_cast<std::size_t>(k)];
    for (int i = 1; i < k; ++i) acc += S[static_cast<std::size_t>(i)] * L.a[static_cast<std::size_t>(k - i)];
    const BigInt Sk = -acc;
    if (k <= g && Sk != S[static_cast<std::size_t>(k)])
      fail(ErrorCode::PreconditionFailed, "power sums disagree at k = " + std::to_string(k), "zeta");
    if (k == g + 1) {
      const BigInt Q = boost::multiprecision::pow(q, static_cast<unsigned>(k));
      if (Q <= scan_bound) {
        const BigInt predicted = Q + 1 - Sk;
        const std::uint64_t actual = points_over(c, static_cast<unsigned>(k), scan_bound);
        if (predicted != actual)
          fail(ErrorCode::PreconditionFailed,
               "predicted " + predicted.str() + " points over degree " + std::to_string(k) + ", counted " +
                   std::to_string(actual), "zeta");
      }
    }
  }
  if (L.at_one() <= 0) fail(ErrorCode::PreconditionFailed, "L(1) is not positive", "zeta");
  return L;
}

BigInt jacobian_order(const SuperellipticCurve& c, std::uint64_t scan_bound) {
  return l_polynomial(c, scan_bound).at_one();
}

std::vector<MumfordDivisor> enumerate_jacobian(const SuperellipticCurve& c, std::uint64_t bound) {
  require_hyperelliptic(c);
  const FieldCtx K = c.field();
  const int g = c.genus();
  if (boost::multiprecision::pow(K.order(), static_cast<unsigned>(g)) > bound)
    fail(ErrorCode::ScanBoundExceeded, "q^g exceeds " + std::to_string(bound), "enumerate");
  const auto elems = enumerate_field(K, bound);
  const std::size_t q = elems.size();
  const UniPoly f = c.f();
  std::vector<MumfordDivisor> out;
  // Iterate over coefficient tuples of length k as base-q counters.
  auto for_each_tuple = [&](int k, auto&& fn) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    while (true) {
      std::vector<FieldElement> cs;
      for (auto i : idx) cs.push_back(elems[i]);
      fn(cs);
      int pos = 0;
      while (pos < k && ++idx[static_cast<std::size_t>(pos)] == q) idx[static_cast<std::size_t>(pos++)] = 0;
      if (pos == k) break;
    }
  };
  for (int k = 0; k <= g; ++k) {
    for_each_tuple(k, [&](const std::vector<FieldElement>& ucs) {
      std::vector<FieldElement> uc = ucs;
      uc.push_back(K.one());
      const UniPoly u(K, uc);
      const UniPoly rem = f % u;
      for_each_tuple(k, [&](const std::vector<FieldElement>& vcs) {
        const UniPoly v(K, vcs);
        if (((v * v - rem) % u).is_zero()) out.push_back({u, v});
      });
    });
  }
  std::sort(out.begin(), out.end(), [](const MumfordDivisor& a, const MumfordDivisor& b) {
    if (a.u.degree() != b.u.degree()) return a.u.degree() < b.u.degree();
    if (a.u.coeffs() != b.u.coeffs())
      return std::lexicographical_compare(a.u.coeffs().begin(), a.u.coeffs().end(), b.u.coeffs().begin(), b.u.coeffs().end());
    if (a.v.degree() != b.v.degree()) return a.v.degree() < b.v.degree();
    return std::lexicographical_compare(a.v.coeffs().begin(), a.v.coeffs().end(), b.v.coeffs().begin(), b.v.coeffs().end());
  });
  return out;
}

}  // namespace superjac
