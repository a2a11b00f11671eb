#include "test_util.hpp"

#include <algorithm>

namespace superjac::testing {
namespace {

// Truncated power series in t, independent of the library's own expansion
// code, used as the oracle for derivative rows.
struct Trunc {
  std::vector<FieldElement> c;
  Trunc operator*(const Trunc& o) const {
    Trunc r{std::vector<FieldElement>(c.size(), c[0].field().zero())};
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; i + j < c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    return r;
  }
  Trunc pow(int e) const {
    Trunc r{std::vector<FieldElement>(c.size(), c[0].field().zero())};
    r.c[0] = c[0].field().one();
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }
};

// (x0 + t, y(t)) on y^n = f(x) modulo t^k, solved coefficient by coefficient.
std::pair<Trunc, Trunc> branch(const SuperellipticCurve& c, const AffinePoint& P, std::size_t k) {
  const auto K = P.x.field();
  Trunc X{std::vector<FieldElement>(k, K.zero())};
  X.c[0] = P.x;
  if (k > 1) X.c[1] = K.one();
  Trunc fX{std::vector<FieldElement>(k, K.zero())};
  const auto f = c.f_in(K);
  for (int i = f.degree(); i >= 0; --i) {
    fX = fX * X;
    fX.c[0] += f.coeff(i);
  }
  Trunc Y{std::vector<FieldElement>(k, K.zero())};
  Y.c[0] = P.y;
  const auto scale = (K.from_int(c.n()) * P.y.pow(static_cast<std::uint64_t>(c.n() - 1))).inverse();
  for (std::size_t r = 1; r < k; ++r) Y.c[r] = (fX.c[r] - Y.pow(c.n()).c[r]) * scale;
  return {X, Y};
}

void expect_rows_match_oracle(const SuperellipticCurve& c, std::size_t mult, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto K = c.field();
  const int m = 2 * c.genus();
  std::vector<WeightedPoint> wp{{random_point(c, rng), static_cast<int>(mult)}};
  while (static_cast<int>(wp.size()) < m - static_cast<int>(mult) + 1) {
    const auto Q = random_point(c, rng);
    if (std::none_of(wp.begin(), wp.end(), [&](const WeightedPoint& w) { return w.point.x == Q.x; })) wp.push_back({Q, 1});
  }
  const auto rows = interpolation_rows(c, wp, K);
  const auto monos = adopted_basis(c, m + 1).monomials;
  const auto [X, Y] = branch(c, wp[0].point, mult);
  for (std::size_t r = 0; r < mult; ++r)
    for (std::size_t col = 0; col < monos.size(); ++col) {
      const auto v = (X.pow(monos[col].i) * Y.pow(monos[col].j)).c[r];
      EXPECT_EQ(rows[r][col], v) << c.to_string() << " order " << r << " column " << monos[col].to_string();
    }
}

TEST(Interpolation, DerivativeRowsMatchDualNumbers) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    expect_rows_match_oracle(genus2(11), 2, s);
    expect_rows_match_oracle(picard(31), 2, s);
  }
}

TEST(Interpolation, HigherOrderRowsMatchTruncatedSeries) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    expect_rows_match_oracle(genus2(101), 3, s);
    expect_rows_match_oracle(picard(101), 3, s);
    expect_rows_match_oracle(genus3(101), 4, s);
  }
}

TEST(Interpolation, RamifiedRowsUseY) {
  const auto c = curve(7, 2, {0, 3, 0, 0, 0, 1});  // y^2 = x^5 + 3x, ramified at x = 0
  const auto K = c.field();
  std::vector<WeightedPoint> wp{{{K.zero(), K.zero()}, 2}, {{el(K, 1), el(K, 2)}, 1}, {{el(K, 1), el(K, 5)}, 1}};
  const auto rows = interpolation_rows(c, wp, K);
  // Order-1 coefficients in the parameter y: only y itself contributes.
  EXPECT_EQ(rows[1], (std::vector<FieldElement>{K.zero(), K.zero(), K.zero(), K.one(), K.zero()}));
}

TEST(Interpolation, CofactorsAlternate) {
  std::mt19937_64 rng(5);
  const auto c = genus2(101);
  for (int t = 0; t < 20; ++t) {
    const auto wp = distinct_points(c, 4, rng);
    auto swapped = wp;
    std::swap(swapped[0], swapped[2]);
    const auto a = interpolation_matrix(c, wp, c.field());
    const auto b = interpolation_matrix(c, swapped, c.field());
    for (std::size_t j = 0; j < a.size(); ++j) EXPECT_EQ(b[j], -a[j]);
  }
}

TEST(Interpolation, OrderIndependentAndVanishing) {
  std::mt19937_64 rng(6);
  for (const auto& c : {genus2(101), picard(101), genus3(101)}) {
    const auto wp = distinct_points(c, static_cast<std::size_t>(2 * c.genus()), rng);
    const auto ic = interpolation_curve(c, wp, c.field());
    EXPECT_EQ(ic.coeffs.back(), c.field().one());
    EXPECT_LE(ic.poly.total_degree(), interp_degree_bound(c));
    for (const auto& w : wp) EXPECT_TRUE(ic.poly.eval(w.point.x, w.point.y).is_zero());
    auto perm = wp;
    std::reverse(perm.begin(), perm.end());
    std::rotate(perm.begin(), perm.begin() + 1, perm.end());
    EXPECT_EQ(interpolation_curve(c, perm, c.field()).coeffs, ic.coeffs);
  }
}

TEST(Interpolation, SupportShapes) {
  std::mt19937_64 rng(7);
  const auto c = genus2(101);
  const auto two = distinct_points(c, 2, rng);
  const auto ic = interpolation_curve(c, two, c.field());
  // Through two points on 1, x, x^2: the product of the two x-factors.
  EXPECT_EQ(ic.poly.eval_y(c.field().zero()),
            UniPoly::linear(two[0].point.x) * UniPoly::linear(two[1].point.x));
  const auto p = picard(101);
  const auto six = distinct_points(p, 6, rng);
  EXPECT_EQ(names(interpolation_curve(p, six, p.field()).monomials),
            (std::vector<std::string>{"1", "x", "y", "x^2", "xy", "y^2", "x^3"}));
}

TEST(Intersection, VanishesAtInputsAndHasFullDegree) {
  std::mt19937_64 rng(8);
  const auto c = genus2(101);
  int full = 0;
  for (int t = 0; t < 30; ++t) {
    const auto wp = distinct_points(c, 4, rng);
    const auto ic = interpolation_curve(c, wp, c.field());
    const auto Fx = intersect_x(c, ic);
    EXPECT_LE(Fx.degree(), 3 * c.genus());
    full += Fx.degree() == 3 * c.genus();
    for (const auto& w : wp) EXPECT_TRUE(Fx.eval(w.point.x).is_zero());
    // Linear in y: F = B^2 - A^2 f up to a unit, with ic = A y + B.
    const auto cy = ic.poly.coefficients_in_y();
    ASSERT_EQ(cy.size(), 2u);
    EXPECT_EQ(Fx.monic(), (cy[0] * cy[0] - cy[1] * cy[1] * c.f()).monic());
  }
  EXPECT_GE(full, 25);
}

TEST(Divisor, Construction) {
  const auto c = genus2(7);
  EXPECT_TRUE(ReducedDivisor::identity(c).is_identity());
  try {
    pts(c, {{0, 1}, {0, 6}, {2, 5}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotReduced);
  }
  try {
    pts(c, {{0, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOnCurve);
  }
  EXPECT_EQ(pts(c, {{2, 5}, {0, 1}}), pts(c, {{0, 1}, {2, 5}}));
}

TEST(GroupLaw, EmptyAndIdentity) {
  const auto c = genus2(7);
  const auto O = ReducedDivisor::identity(c);
  EXPECT_TRUE(reduce_opposite(c, {}).is_identity());
  EXPECT_EQ(invert(O), O);
  EXPECT_EQ(double_divisor(O), O);
  const auto D = pts(c, {{0, 1}, {2, 5}});
  EXPECT_EQ(add(D, O), D);
  EXPECT_EQ(add(O, D), D);
  EXPECT_EQ(scalar_mul(D, 0), O);
  EXPECT_EQ(scalar_mul(D, 1), D);
}

TEST(GroupLaw, HyperellipticInverseNegatesY) {
  std::mt19937_64 rng(9);
  const auto c = genus2(101);
  for (int t = 0; t < 20; ++t) {
    const auto D = random_divisor(c, 2, rng);
    std::vector<AffinePoint> neg;
    for (const auto& P : D.points()) neg.push_back({P.x, -P.y});
    EXPECT_EQ(invert(D), ReducedDivisor::make(c, neg));
    EXPECT_TRUE(add(D, invert(D)).is_identity());
  }
}

TEST(GroupLaw, MatchesCantor) {
  std::mt19937_64 rng(10);
  for (const auto& c : {genus2(1009), genus3(101)}) {
    for (int t = 0; t < 15; ++t) {
      const auto D1 = random_divisor(c, c.genus(), rng);
      const auto D2 = random_divisor(c, c.genus(), rng);
      const auto S = retry([&] { return add(D1, D2); });
      EXPECT_EQ(mumford(S), cantor_add(c, mumford(D1), mumford(D2)).canonical(c.field()));
      EXPECT_EQ(add(D2, D1), S);
      const auto T = double_divisor(D1);
      EXPECT_EQ(mumford(T), cantor_add(c, mumford(D1), mumford(D1)).canonical(c.field()));
    }
  }
}

TEST(GroupLaw, CertificateStructure) {
  std::mt19937_64 rng(12);
  const auto c = picard(101);
  const auto D1 = random_divisor(c, 3, rng), D2 = random_divisor(c, 3, rng);
  AddCertificate cert;
  add(D1, D2, &cert);
  EXPECT_EQ(cert.chord.m, 6);
  EXPECT_TRUE((cert.chord.F % cert.chord.known).is_zero());
  EXPECT_EQ(cert.chord.known, cert.f1.embed(cert.chord.known.field(), c.field()) * cert.f2.embed(cert.chord.known.field(), c.field()));
  EXPECT_LE(cert.f3().degree(), 3);
  EXPECT_LE(cert.f4().degree(), 3);
  EXPECT_LE(cert.chord.F.degree(), 9);
}

TEST(GroupLaw, ScalarMultipleByGroupOrder) {
  std::mt19937_64 rng(13);
  const auto c = genus2(7);
  for (int t = 0; t < 5; ++t) {
    const auto D = random_divisor(c, 2, rng);
    EXPECT_TRUE(scalar_mul(D, 81).is_identity());
    EXPECT_EQ(scalar_mul(D, 82), D);
  }
}

TEST(GroupLaw, NormalizeCollinearPicardTriple) {
  // Three points on the line y = 4 are equivalent to the two points above x = 3.
  const auto c = picard(7);
  const auto D = pts(c, {{0, 4}, {5, 4}, {6, 4}});
  EXPECT_EQ(normalize(D), pts(c, {{3, 1}, {3, 2}}));
  const auto E = pts(c, {{3, 1}, {3, 2}});
  EXPECT_EQ(normalize(E), E);
}

TEST(FieldOfDefinition, GaloisStableInputs) {
  std::mt19937_64 rng(14);
  const auto c = genus2(101);
  for (int t = 0; t < 10; ++t) {
    const auto D1 = random_divisor_with_orbits(c, {1, 1}, rng);
    const auto D2 = random_divisor_with_orbits(c, {2}, rng);
    EXPECT_EQ(D2.field(), F(101, 2));
    AddCertificate cert;
    EXPECT_TRUE(retry([&] { return field_of_definition_check(D1, D2, c.field(), &cert); }));
    EXPECT_TRUE(cert.f3().coeffs_in(c.field(), c.field()));
  }
}

TEST(FieldOfDefinition, RejectsUnstableSupport) {
  std::mt19937_64 rng(15);
  const auto c = genus2(7);
  const auto P = random_point(c, rng, F(7, 2));
  AffinePoint Q = P;
  while (Q.x.is_prime_field_value()) Q = random_point(c, rng, F(7, 2));
  const auto D1 = ReducedDivisor::make(c, {Q});
  try {
    field_of_definition_check(D1, D1, c.field());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
  }
}

}  // namespace
}  // namespace superjac::testing
