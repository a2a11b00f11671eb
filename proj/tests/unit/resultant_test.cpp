#include "test_util.hpp"

namespace superjac::testing {
namespace {

BiPoly t(const FieldCtx& K, std::int64_t c, int i, int j) { return BiPoly::term(el(K, c), i, j); }

TEST(Resultant, UnivariateProductFormula) {
  const auto K = F(13);
  const UniPoly a = UniPoly::from_roots(K, {el(K, 2), el(K, 5)}) * el(K, 3);
  const UniPoly b(K, {1, 4, 0, 1});
  // lc(a)^deg(b) * b(2) * b(5)
  EXPECT_EQ(resultant(a, b), el(K, 27) * b.eval(el(K, 2)) * b.eval(el(K, 5)));
  // Res(b, a) = (-1)^(2*3) Res(a, b)
  EXPECT_EQ(resultant(b, a), resultant(a, b));
  EXPECT_EQ(resultant(UniPoly(K, {1, 1}), UniPoly(K, {0, 0, 1})), resultant(UniPoly(K, {0, 0, 1}), UniPoly(K, {1, 1})));
  EXPECT_EQ(resultant(UniPoly::constant(el(K, 2)), b), el(K, 8));
  EXPECT_EQ(resultant(UniPoly::constant(el(K, 2)), UniPoly::constant(el(K, 3))), K.one());
}

TEST(Resultant, LinearEliminationSubstitutes) {
  const auto K = F(11);
  // Res_y(y - c(x), g) = g(x, c(x)) up to the sign (-1)^deg_y(g).
  const BiPoly lin = t(K, 1, 0, 1) - t(K, 3, 2, 0) - t(K, 1, 0, 0);  // y - (3x^2 + 1)
  const BiPoly g = t(K, 1, 0, 2) - t(K, 1, 5, 0) - t(K, 3, 1, 0) - t(K, 1, 0, 0);  // y^2 - f
  const UniPoly c(K, {1, 0, 3});
  const UniPoly f(K, {1, 3, 0, 0, 0, 1});
  EXPECT_EQ(resultant_y(lin, g), c * c - f);
  EXPECT_EQ(resultant_y(g, lin), c * c - f);
}

TEST(Resultant, SylvesterSignOverF5) {
  // Res_y(y^3 - (x + 1), y - x): the Sylvester determinant gives
  // -(x^3 - x - 1); swapping the arguments gives x^3 - x - 1.
  const auto K = F(5);
  const BiPoly a = t(K, 1, 0, 3) - t(K, 1, 1, 0) - t(K, 1, 0, 0);
  const BiPoly b = t(K, 1, 0, 1) - t(K, 1, 1, 0);
  const UniPoly want(K, {-1, -1, 0, 1});
  EXPECT_EQ(resultant_y(b, a), want);
  EXPECT_EQ(resultant_y(a, b), -want);
}

TEST(Resultant, EliminateX) {
  const auto K = F(7);
  const BiPoly a = t(K, 1, 1, 0) - t(K, 2, 0, 1);  // x - 2y
  const BiPoly b = t(K, 1, 2, 0) + t(K, 1, 0, 0) - t(K, 1, 0, 1);
  // x = 2y: 4y^2 - y + 1
  EXPECT_EQ(resultant_x(a, b).monic(), UniPoly(K, {1, -1, 4}).monic());
}

TEST(Resultant, ZeroPolynomialThrows) {
  const auto K = F(7);
  try {
    resultant_y(BiPoly(K), t(K, 1, 0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroPolynomial);
  }
}

TEST(ConjugateY, Examples) {
  const auto K = F(7);
  const BiPoly E = t(K, 1, 0, 2) - t(K, 1, 3, 0) - t(K, 1, 0, 0);  // y^2 - (x^3 + 1)
  // 2^3 + 1 = 9 = 2 mod 7.
  EXPECT_EQ(conjugate_y_poly(E, UniPoly(K, {-2, 1})).monic(), UniPoly(K, {-2, 0, 1}));
  EXPECT_EQ(conjugate_y_poly(E, UniPoly::constant(K.one())), UniPoly::constant(K.one()));
}

TEST(ConjugateY, DegreeLawAndSubfield) {
  const auto c = picard(101);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<FieldElement> cs;
    for (int i = 0; i < 3; ++i) cs.push_back(c.field().random(rng));
    cs.push_back(c.field().one());
    const UniPoly fx(c.field(), cs);
    const auto gy = conjugate_y_poly(c.equation(), fx);
    EXPECT_EQ(gy.degree(), 9);
    EXPECT_TRUE(gy.coeffs_in(c.field()));
    // Roots of g(y) are the y-coordinates above the roots of fx.
    const FieldCtx E = splitting_field(fx);
    for (const auto& x0 : poly_roots(fx.embed(E), E))
      for (const auto& y0 : poly_roots(UniPoly(E, {0, 0, 0, 1}) - UniPoly::constant(c.f_in(E).eval(x0)), splitting_field(UniPoly(E, {0, 0, 0, 1}) - UniPoly::constant(c.f_in(E).eval(x0)))))
        EXPECT_TRUE(gy.embed(y0.field()).eval(y0).is_zero());
  }
}

}  // namespace
}  // namespace superjac::testing
