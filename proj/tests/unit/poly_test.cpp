#include "test_util.hpp"

namespace superjac::testing {
namespace {

TEST(Poly, CanonicalForm) {
  const auto K = F(7);
  const UniPoly a(K, {1, 2, 0, 0});
  EXPECT_EQ(a.degree(), 1);
  EXPECT_EQ(UniPoly(K).degree(), kZeroDegree);
  EXPECT_TRUE(UniPoly(K, {0, 0}).is_zero());
  EXPECT_EQ(a.to_string(), "2*x + 1");
}

TEST(Poly, DivisionAndGcd) {
  const auto K = F(11);
  const UniPoly a(K, {3, 1, 4, 1, 5}), b(K, {9, 2, 6});
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  const auto g = xgcd(a * b, b * UniPoly(K, {1, 1}));
  EXPECT_EQ(g.s * (a * b) + g.t * (b * UniPoly(K, {1, 1})), g.g);
  EXPECT_EQ(g.g, b.monic() * gcd(a, UniPoly(K, {1, 1})));
  EXPECT_THROW(exact_div(a, b), Error);
  EXPECT_EQ(exact_div(a * b, b), a);
  EXPECT_THROW(divmod(a, UniPoly(K)), Error);
}

TEST(Poly, EvalComposeDerivative) {
  const auto K = F(13);
  const UniPoly a(K, {1, 0, 2, 5});
  const UniPoly g(K, {2, 1});
  EXPECT_EQ(a.compose(g).eval(el(K, 3)), a.eval(el(K, 5)));
  EXPECT_EQ(a.derivative(), UniPoly(K, {0, 4, 15}));
  EXPECT_EQ(root_multiplicity(UniPoly::linear(el(K, 4)).pow(3) * a, el(K, 4)), 3);
}

TEST(Roots, SmallExamples) {
  const auto K7 = F(7), K5 = F(5);
  EXPECT_EQ(poly_roots(UniPoly(K7, {-1, 0, 1})), (std::vector<FieldElement>{el(K7, 1), el(K7, 6)}));
  EXPECT_TRUE(poly_roots(UniPoly(K7, {1, 0, 1})).empty());
  EXPECT_EQ(poly_roots(UniPoly(K5, {4, -4, 1})), (std::vector<FieldElement>{el(K5, 2), el(K5, 2)}));
  EXPECT_EQ(distinct_roots(UniPoly(K5, {4, -4, 1})).size(), 1u);
}

TEST(Roots, SplittingFields) {
  EXPECT_EQ(splitting_field(UniPoly(F(7), {1, 0, 1})), F(7, 2));
  EXPECT_EQ(splitting_field(UniPoly(F(7), {-1, 0, 1})), F(7));
  // x^3 + x + 1 is irreducible mod 5.
  const UniPoly cubic(F(5), {1, 1, 0, 1});
  EXPECT_TRUE(is_irreducible(cubic));
  EXPECT_EQ(splitting_field(cubic), F(5, 3));
  EXPECT_EQ(factor_degrees(cubic * UniPoly(F(5), {2, 0, 1})), (std::vector<unsigned>{2, 3}));
  EXPECT_EQ(splitting_field(cubic * UniPoly(F(5), {2, 0, 1})), F(5, 6));
  EXPECT_THROW(splitting_field(cubic * UniPoly(F(5), {2, 0, 1}), 4), Error);
}

TEST(Roots, LargeFieldUsesSplitting) {
  const auto K = F(1000003);
  const std::vector<FieldElement> rs{el(K, 5), el(K, 17), el(K, 999999)};
  const UniPoly a = UniPoly::from_roots(K, rs) * UniPoly(K, {1, 0, 1, 0, 1});
  auto got = poly_roots(a, {}, 7);
  EXPECT_EQ(got, poly_roots(a, {}, 99));
  for (const auto& r : rs) EXPECT_NE(std::find(got.begin(), got.end(), r), got.end());
}

TEST(Linalg, DeterminantRankKernel) {
  const auto K = F(11);
  Matrix m{{el(K, 1), el(K, 2), el(K, 3)}, {el(K, 4), el(K, 5), el(K, 6)}, {el(K, 7), el(K, 8), el(K, 10)}};
  EXPECT_EQ(determinant(m, K), el(K, -3));
  EXPECT_EQ(rank(m), 3);
  m[2][2] = el(K, 9);
  EXPECT_EQ(determinant(m, K), K.zero());
  EXPECT_EQ(rank(m), 2);
  const auto ker = kernel(m, K);
  ASSERT_EQ(ker.size(), 1u);
  for (const auto& row : m) {
    FieldElement s = K.zero();
    for (std::size_t j = 0; j < 3; ++j) s += row[j] * ker[0][j];
    EXPECT_TRUE(s.is_zero());
  }
  EXPECT_EQ(determinant({}, K), K.one());
}

}  // namespace
}  // namespace superjac::testing
