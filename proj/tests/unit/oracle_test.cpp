#include "test_util.hpp"

namespace superjac::testing {
namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Frozen from an independent point-counting script (brute-force counts over
// F_{p^i} and Newton's identities in exact integer arithmetic).
TEST(LPolynomial, FrozenValues) {
  struct Case {
    SuperellipticCurve c;
    std::vector<BigInt> a;
    std::uint64_t n1;
    long order;
  };
  const std::vector<Case> cases{
      {genus2(7), ints({1, 3, 7, 21, 49}), 11, 81},
      {genus2(5), ints({1, 0, 0, 0, 25}), 6, 26},
      {genus2(11), ints({1, -4, 14, -44, 121}), 8, 88},
      {picard(7), ints({1, 5, 21, 70, 147, 245, 343}), 13, 832},
      {picard(11), ints({1, 0, 6, 0, 66, 0, 1331}), 12, 1404},
      {picard(13), ints({1, -1, -6, 67, -78, -169, 2197}), 13, 2011},
      {genus3(11), ints({1, -1, -5, 33, -55, -121, 1331}), 11, 1183},
  };
  for (const auto& t : cases) {
    const auto L = l_polynomial(t.c);
    EXPECT_EQ(L.a, t.a) << t.c.to_string();
    EXPECT_EQ(L.counts.at(0), t.n1) << t.c.to_string();
    EXPECT_EQ(L.at_one(), t.order) << t.c.to_string();
    EXPECT_EQ(jacobian_order(t.c), t.order);
  }
}

TEST(LPolynomial, FunctionalEquation) {
  for (const auto& c : {genus2(13), picard(7), genus3(7)}) {
    const auto L = l_polynomial(c);
    const int g = L.genus();
    const BigInt q = c.field().order();
    for (int i = 0; i <= g; ++i)
      EXPECT_EQ(L.a[static_cast<std::size_t>(2 * g - i)], boost::multiprecision::pow(q, static_cast<unsigned>(g - i)) * L.a[static_cast<std::size_t>(i)]);
  }
}

TEST(LPolynomial, ScanBound) {
  try {
    l_polynomial(genus2(101), 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ScanBoundExceeded);
  }
}

TEST(Mumford, FromPoints) {
  const auto c = genus2(7);
  const auto K = c.field();
  const auto one = mumford_from_points(pts(c, {{2, 5}}));
  EXPECT_EQ(one.u, UniPoly(K, {-2, 1}));
  EXPECT_EQ(one.v, UniPoly(K, {5}));
  const auto id = mumford_from_points(ReducedDivisor::identity(c));
  EXPECT_TRUE(id.is_identity());
  EXPECT_TRUE(id.v.is_zero());
  // (0, 1) and (2, 5): the line 2x + 1.
  const auto two = mumford_from_points(pts(c, {{0, 1}, {2, 5}}));
  EXPECT_EQ(two.u, UniPoly(K, {0, -2, 1}));
  EXPECT_EQ(two.v, UniPoly(K, {1, 2}));
  EXPECT_TRUE(is_valid_mumford(c, two));
}

TEST(Mumford, Errors) {
  const auto c = genus2(7);
  try {
    mumford_from_points(pts(c, {{0, 1}, {0, 6}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConjugatePair);
  }
  try {
    mumford_from_points(pts(picard(7), {{0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHyperelliptic);
  }
}

TEST(Mumford, RoundTripWithRepeatedPoints) {
  std::mt19937_64 rng(3);
  const auto c = genus3(101);
  for (int t = 0; t < 30; ++t) {
    const auto P = random_point(c, rng);
    const auto Q = random_point(c, rng);
    const auto D = ReducedDivisor::make(c, {P, P, Q});
    const auto A = mumford_from_points(D);
    EXPECT_TRUE(is_valid_mumford(c, A));
    EXPECT_EQ(points_from_mumford(c, A), D);
  }
}

TEST(Cantor, BasicLaws) {
  std::mt19937_64 rng(4);
  const auto c = genus2(101);
  const auto O = mumford_identity(c);
  for (int t = 0; t < 50; ++t) {
    const auto A = mumford(random_divisor(c, 2, rng));
    EXPECT_EQ(cantor_add(c, A, O), A);
    EXPECT_TRUE(cantor_add(c, A, mumford_negate(A)).is_identity());
    EXPECT_TRUE(is_valid_mumford(c, cantor_add(c, A, A)));
  }
}

TEST(Cantor, ExhaustiveGroupOverF5) {
  const auto c = genus2(5);
  const auto all = enumerate_jacobian(c);
  ASSERT_EQ(all.size(), 26u);
  for (const auto& A : all) {
    EXPECT_TRUE(is_valid_mumford(c, A));
    for (const auto& B : all) {
      const auto AB = cantor_add(c, A, B);
      EXPECT_EQ(AB, cantor_add(c, B, A));
      EXPECT_NE(std::find(all.begin(), all.end(), AB), all.end());
      for (const auto& C : all) ASSERT_EQ(cantor_add(c, AB, C), cantor_add(c, A, cantor_add(c, B, C)));
    }
  }
}

TEST(Cantor, EnumerationMatchesOrder) {
  EXPECT_EQ(enumerate_jacobian(genus2(7)).size(), 81u);
  EXPECT_THROW(enumerate_jacobian(genus2(101), 1000), Error);
  for (const auto& A : enumerate_jacobian(genus2(7)))
    EXPECT_TRUE(cantor_scalar_mul(genus2(7), A, 81).is_identity());
}

}  // namespace
}  // namespace superjac::testing
