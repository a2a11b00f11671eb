#include "test_util.hpp"

#include <numeric>

namespace superjac::testing {
namespace {

ErrorCode make_error(std::uint64_t p, int n, std::initializer_list<std::int64_t> f) {
  try {
    curve(p, n, f);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::PreconditionFailed;
}

TEST(Curve, Genus) {
  EXPECT_EQ(genus2(11).genus(), 2);
  EXPECT_EQ(genus3(11).genus(), 3);
  EXPECT_EQ(picard(7).genus(), 3);
  EXPECT_TRUE(picard(7).is_picard());
  EXPECT_EQ(superelliptic_genus(4, 13), 18);
  // A monic squarefree degree-13 polynomial over F_13 for n = 4.
  const auto K = F(13);
  UniPoly f = UniPoly::monomial(K.one(), 13) + UniPoly(K, {1, 1});
  ASSERT_EQ(gcd(f, f.derivative()).degree(), 0);
  EXPECT_EQ(SuperellipticCurve::make(K, 4, f).genus(), 18);
}

TEST(Curve, GenusMatchesDifferentialCount) {
  for (int n = 2; n <= 5; ++n)
    for (int d = n + 1; d <= 13; ++d)
      if (std::gcd(n, d) == 1) EXPECT_EQ(superelliptic_genus(n, d), differential_count(n, d)) << n << "," << d;
}

TEST(Curve, Validation) {
  EXPECT_EQ(make_error(7, 2, {0, 0, 1, 0, 0, 1}), ErrorCode::Singular);     // x^2 (x^3 + 1)
  EXPECT_EQ(make_error(7, 2, {1, 0, 0, 0, 1}), ErrorCode::GcdViolation);    // d = 4
  EXPECT_EQ(make_error(7, 3, {1, 1, 1}), ErrorCode::DegreeTooSmall);        // d = 2 <= 3
  EXPECT_EQ(make_error(3, 3, {1, 1, 0, 0, 1}), ErrorCode::WildCharacteristic);
  // x^5 + x + 1 = (x^2 + x + 1)(x^3 - x^2 + 1) is singular mod 7.
  EXPECT_EQ(make_error(7, 2, {1, 1, 0, 0, 0, 1}), ErrorCode::Singular);
}

TEST(Curve, NormalizesLeadingCoefficient) {
  const auto K = F(11);
  const auto c = SuperellipticCurve::make(K, 2, UniPoly(K, {2, 6, 0, 0, 0, 2}));
  EXPECT_TRUE(c.f().is_monic());
  EXPECT_TRUE(c.was_normalized());
  EXPECT_EQ(c.original_leading(), el(K, 2));
  EXPECT_EQ(c.f(), genus2(11).f());
}

TEST(Curve, PointMembership) {
  const auto c = genus2(7);
  for (const auto& x : enumerate_field(c.field(), 100))
    if (c.f().eval(x).is_zero()) EXPECT_TRUE(point_on_curve(c, x, c.field().zero()));
  EXPECT_TRUE(point_on_curve(c, el(c.field(), 0), el(c.field(), 1)));
  EXPECT_FALSE(point_on_curve(c, el(c.field(), 0), el(c.field(), 2)));
}

TEST(Curve, FibreSizes) {
  for (const auto& c : {genus2(7), picard(7), picard(11), picard(13)}) {
    const auto elems = enumerate_field(c.field(), 100);
    const auto q = static_cast<int>(elems.size());
    for (const auto& x : elems) {
      int count = 0;
      for (const auto& y : elems) count += point_on_curve(c, x, y);
      const bool ramified = c.f().eval(x).is_zero();
      if (ramified)
        EXPECT_EQ(count, 1);
      else
        EXPECT_TRUE(count == 0 || count == std::gcd(c.n(), q - 1)) << c.to_string() << " x=" << x.to_string();
    }
  }
}

TEST(Curve, PointCounts) {
  // Elliptic sanity case y^2 = x^3 + x over F_5: affine points (0,0), (2,0),
  // (3,0) and none with y != 0, plus infinity.
  const auto K = F(5);
  const auto E = SuperellipticCurve::make(K, 2, UniPoly(K, {0, 1, 0, 1}), Validation::Relaxed);
  EXPECT_TRUE(E.relaxed());
  EXPECT_EQ(points_over(E, 1), 4u);
  EXPECT_THROW(E.require_strict("test"), Error);
  EXPECT_EQ(points_over(genus2(7), 1), 11u);
  EXPECT_EQ(points_over(picard(7), 1), 13u);
  EXPECT_GE(points_over(picard(7), 2), points_over(picard(7), 1));
  EXPECT_THROW(points_over(genus2(101), 4, 1000), Error);
}

TEST(Curve, CountMatchesResidueFormula) {
  // Over F_p with gcd(n, p - 1) = g: each x with f(x) an n-th power residue
  // contributes gcd(n, p - 1) points, roots contribute one, plus infinity.
  for (const auto& c : {genus2(11), picard(7), picard(13)}) {
    const auto elems = enumerate_field(c.field(), 100);
    const std::uint64_t q = elems.size();
    const std::uint64_t w = std::gcd<std::uint64_t>(static_cast<std::uint64_t>(c.n()), q - 1);
    std::uint64_t total = 1;
    for (const auto& x : elems) {
      const auto fx = c.f().eval(x);
      if (fx.is_zero())
        total += 1;
      else if (fx.pow((q - 1) / w).is_one())
        total += w;
    }
    EXPECT_EQ(points_over(c, 1), total) << c.to_string();
  }
}

TEST(Curve, Automorphism) {
  const auto c = picard(7);  // 3 | 6
  ASSERT_TRUE(root_of_unity(c).has_value());
  const auto xi = *root_of_unity(c);
  EXPECT_EQ(xi.pow(3), c.field().one());
  EXPECT_FALSE(xi.is_one());
  const auto elems = enumerate_field(c.field(), 100);
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (point_on_curve(c, x, y)) EXPECT_TRUE(point_on_curve(c, sigma(c, {x, y})));
  EXPECT_FALSE(root_of_unity(picard(11)).has_value());  // 3 does not divide 10
  EXPECT_THROW(sigma(picard(11), {el(F(11), 0), el(F(11), 1)}), Error);
}

}  // namespace
}  // namespace superjac::testing
