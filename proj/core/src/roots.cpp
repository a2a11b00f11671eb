#include "superjac/roots.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace superjac {

namespace {

// x^q - x restricted to the squarefree product of linear factors of a.
UniPoly linear_part(const UniPoly& a) {
  const FieldCtx f = a.field();
  const UniPoly x = UniPoly::x(f);
  const UniPoly xq = pow_mod(x, f.order(), a);
  return gcd(xq - x, a);
}

// g is monic, squarefree and splits into distinct linear factors.
void split_linear(const UniPoly& g, std::mt19937_64& rng, std::vector<FieldElement>& out) {
  if (g.degree() <= 0) return;
  const FieldCtx f = g.field();
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0));
    return;
  }
  const bool even = f.characteristic() == 2;
  const BigInt half = (f.order() - 1) / 2;
  while (true) {
    UniPoly t = UniPoly::x(f) + UniPoly::constant(f.random(rng));
    UniPoly w(f);
    if (even) {
      // Absolute trace t + t^2 + ... + t^(2^(k-1)) mod g.
      UniPoly cur = t % g;
      for (unsigned i = 0; i < f.degree(); ++i) {
        w += cur;
        cur = (cur * cur) % g;
      }
    } else {
      w = pow_mod(t, half, g) - UniPoly::constant(f.one());
    }
    UniPoly d = gcd(w, g);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, rng, out);
      split_linear(exact_div(g, d), rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FieldElement> distinct_roots(const UniPoly& a, const FieldCtx& field_in, std::uint64_t seed) {
  if (a.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  const FieldCtx field = field_in.valid() ? field_in : a.field();
  if (!field.contains(a.field()))
    fail(ErrorCode::FieldMismatch, field.name() + " does not contain " + a.field().name());
  const UniPoly p = (a.field() == field) ? a : a.embed(field);
  std::vector<FieldElement> out;
  if (p.degree() <= 0) return out;
  if (field.order() <= kExhaustiveRootBound) {
    for (const auto& z : enumerate_field(field, kExhaustiveRootBound))
      if (p.eval(z).is_zero()) out.push_back(z);
    return out;
  }
  std::mt19937_64 rng(seed);
  UniPoly g = linear_part(p.monic());
  split_linear(g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FieldElement> poly_roots(const UniPoly& a, const FieldCtx& field_in, std::uint64_t seed) {
  const FieldCtx field = field_in.valid() ? field_in : a.field();
  std::vector<FieldElement> distinct = distinct_roots(a, field, seed);
  const UniPoly p = (a.field() == field) ? a : a.embed(field);
  std::vector<FieldElement> out;
  for (const auto& r : distinct) {
    const int k = root_multiplicity(p, r);
    for (int i = 0; i < k; ++i) out.push_back(r);
  }
  return out;
}

std::vector<unsigned> factor_degrees(const UniPoly& a) {
  if (a.is_zero()) fail(ErrorCode::ZeroPolynomial, "factoring the zero polynomial");
  const FieldCtx f = a.field();
  std::vector<unsigned> out;
  UniPoly r = a.monic();
  const UniPoly x = UniPoly::x(f);
  UniPoly h = x % r;
  for (unsigned i = 1; 2 * static_cast<int>(i) <= r.degree(); ++i) {
    h = pow_mod(h, f.order(), r);
    UniPoly g = gcd(h - x, r);
    if (g.degree() > 0) {
      for (int c = 0; c < g.degree() / static_cast<int>(i); ++c) out.push_back(i);
      // Strip every power of these factors.
      while (true) {
        UniPoly common = gcd(r, g);
        if (common.degree() <= 0) break;
        r = exact_div(r, common);
      }
      if (r.degree() <= 0) break;
      h = h % r;
    }
  }
  if (r.degree() > 0) out.push_back(static_cast<unsigned>(r.degree()));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_irreducible(const UniPoly& a) {
  if (a.degree() <= 0) return false;
  auto d = factor_degrees(a);
  return d.size() == 1 && static_cast<int>(d[0]) == a.degree() && gcd(a, a.derivative()).degree() == 0;
}

FieldCtx splitting_field(const UniPoly& a, unsigned cap) {
  const FieldCtx f = a.field();
  unsigned m = 1;
  if (a.degree() > 0)
    for (unsigned d : factor_degrees(a)) m = std::lcm(m, d);
  const unsigned total = f.degree() * m;
  if (total > cap || total > kMaxExtensionDegree)
    fail(ErrorCode::DegreeOverflow, "splitting field of degree " + std::to_string(total) +
                                        " over F_" + std::to_string(f.characteristic()) +
                                        " exceeds the cap " + std::to_string(cap));
  return FieldCtx::make(f.characteristic(), total);
}

}  // namespace superjac
