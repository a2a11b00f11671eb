#include "test_util.hpp"

namespace superjac::testing {
namespace {

TEST(Sampling, RandomPointOnCurve) {
  std::mt19937_64 rng(1);
  for (const auto& c : {genus2(7), picard(13)}) {
    for (int t = 0; t < 50; ++t) {
      const auto P = random_point(c, rng);
      EXPECT_TRUE(point_on_curve(c, P));
      EXPECT_FALSE(P.y.is_zero());
    }
    const auto Q = random_point(c, rng, F(c.field().characteristic(), 3));
    EXPECT_TRUE(point_on_curve(c, Q));
  }
}

TEST(Sampling, RandomDivisorIsGaloisStable) {
  std::mt19937_64 rng(2);
  for (const auto& c : {genus2(101), picard(13), genus3(11)}) {
    for (int r = 0; r <= c.genus(); ++r)
      for (int t = 0; t < 10; ++t) {
        const auto D = random_divisor(c, r, rng);
        EXPECT_EQ(D.degree(), r);
        EXPECT_TRUE(D.support_poly().coeffs_in(c.field(), c.field()));
        EXPECT_TRUE(D.field().contains(c.field()));
        EXPECT_EQ(normalize(D), D);
        for (const auto& P : D.points()) EXPECT_TRUE(point_on_curve(c, P));
      }
  }
}

TEST(Sampling, Deterministic) {
  const auto c = picard(101);
  std::mt19937_64 a(77), b(77);
  for (int t = 0; t < 5; ++t) EXPECT_EQ(random_divisor(c, 3, a), random_divisor(c, 3, b));
}

TEST(Sampling, OrbitShapes) {
  std::mt19937_64 rng(3);
  const auto c = genus3(101);
  const auto D = random_divisor_with_orbits(c, {1, 2}, rng);
  EXPECT_EQ(D.degree(), 3);
  EXPECT_EQ(D.field(), F(101, 2));
  EXPECT_EQ(factor_degrees(D.support_poly().descend(c.field(), c.field())), (std::vector<unsigned>{1, 2}));
  const auto R = random_divisor_with_orbits(c, {1, 1, 1}, rng);
  EXPECT_EQ(R.field(), c.field());
}

TEST(Sampling, UniformBelow) {
  std::mt19937_64 rng(4);
  std::vector<int> hist(5);
  for (int t = 0; t < 5000; ++t) ++hist[uniform_below(rng, 5)];
  for (int h : hist) EXPECT_GT(h, 850);
}

}  // namespace
}  // namespace superjac::testing
