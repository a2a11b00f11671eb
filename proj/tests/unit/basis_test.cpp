#include "test_util.hpp"

#include <numeric>
#include <set>

namespace superjac::testing {
namespace {

using Names = std::vector<std::string>;

Names row(const BasisTable& t, std::size_t j) {
  Names out;
  for (const auto& cell : t.rows.at(j))
    if (cell) out.push_back(cell->to_string());
  return out;
}

TEST(Basis, FirstMonomials) {
  const auto b = adopted_basis(4, 13, 8);
  EXPECT_EQ(names(b.monomials), (Names{"1", "x", "x^2", "x^3", "y", "x^4", "xy", "x^5"}));
  EXPECT_EQ(b.orders, (std::vector<int>{0, 4, 8, 12, 13, 16, 17, 20}));
  EXPECT_EQ(names(adopted_basis(2, 7, 7).monomials), (Names{"1", "x", "x^2", "x^3", "y", "x^4", "xy"}));
  EXPECT_EQ(names(adopted_basis(3, 4, 7).monomials), (Names{"1", "x", "y", "x^2", "xy", "y^2", "x^3"}));
  EXPECT_EQ(names(adopted_basis(genus2(7), 5).monomials), (Names{"1", "x", "x^2", "y", "x^3"}));
}

TEST(Basis, Tables) {
  const auto t27 = basis_matrix(2, 7);
  ASSERT_EQ(t27.rows.size(), 2u);
  EXPECT_EQ(row(t27, 0), (Names{"1", "x", "x^2", "x^3", "x^4"}));
  EXPECT_EQ(row(t27, 1), (Names{"y", "xy"}));
  const auto t34 = basis_matrix(3, 4);
  ASSERT_EQ(t34.rows.size(), 3u);
  EXPECT_EQ(row(t34, 0), (Names{"1", "x", "x^2", "x^3"}));
  EXPECT_EQ(row(t34, 1), (Names{"y", "xy"}));
  EXPECT_EQ(row(t34, 2), (Names{"y^2"}));
  EXPECT_EQ(t34.rows[0].size(), 4u);
}

TEST(Basis, TableEntriesRespectOrderBound) {
  for (int n = 2; n <= 5; ++n)
    for (int d = n + 1; d <= 13; ++d) {
      if (std::gcd(n, d) != 1) continue;
      const auto t = basis_matrix(n, d);
      for (const auto& r : t.rows)
        for (const auto& cell : r)
          if (cell) EXPECT_LE(cell->order(n, d), 3 * t.g);
    }
}

TEST(Basis, Gaps) {
  EXPECT_EQ(gap_sequence(3, 4), (std::vector<int>{1, 2, 5}));
  EXPECT_EQ(gap_sequence(2, 7), (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(gap_sequence(2, 11), (std::vector<int>{1, 3, 5, 7, 9}));
  const auto g413 = gap_sequence(4, 13);
  EXPECT_EQ(g413.size(), 18u);
  EXPECT_LE(g413.back(), 35);
  EXPECT_EQ(semigroup_elements(3, 4, 10), (std::vector<int>{0, 3, 4, 6, 7, 8, 9, 10}));
}

TEST(Basis, GapTheoremRange) {
  for (int n = 2; n <= 5; ++n)
    for (int d = n + 1; d <= 13; ++d) {
      if (std::gcd(n, d) != 1) continue;
      const int g = superelliptic_genus(n, d);
      const auto gaps = gap_sequence(n, d);
      EXPECT_EQ(static_cast<int>(gaps.size()), g);
      if (g > 0) EXPECT_LE(gaps.back(), 2 * g - 1);
      // The first 2g+1 monomials are the ones allowed by the row bound.
      std::set<Monomial> want;
      for (int j = 0; j < n; ++j)
        for (int i = 0; n * i + d * j <= 3 * g; ++i) want.insert({i, j});
      const auto b = adopted_basis(n, d, 2 * g + 1);
      EXPECT_EQ(std::set<Monomial>(b.monomials.begin(), b.monomials.end()), want) << n << "," << d;
      EXPECT_TRUE(std::is_sorted(b.orders.begin(), b.orders.end()));
      EXPECT_EQ(std::adjacent_find(b.orders.begin(), b.orders.end()), b.orders.end());
      for (int j = 2 * g; j <= 3 * g; ++j) EXPECT_EQ(exact_order_monomial(n, d, j).order(n, d), j);
    }
}

TEST(Basis, ExactOrderTieBreak) {
  EXPECT_EQ(exact_order_monomial(2, 5, 6), (Monomial{3, 0}));
  EXPECT_EQ(exact_order_monomial(3, 4, 9), (Monomial{3, 0}));
}

TEST(Basis, InterpolationDegreeBound) {
  EXPECT_EQ(interp_degree_bound(2, 5), 3);
  EXPECT_EQ(interp_degree_bound(2, 7), 4);
  EXPECT_EQ(interp_degree_bound(3, 4), 3);
}

TEST(Basis, HyperellipticPrefix) {
  EXPECT_EQ(names(hyperelliptic_prefix_for_genus(2)), (Names{"1", "x", "x^2", "y", "x^3"}));
  EXPECT_EQ(names(hyperelliptic_prefix_for_genus(3)), (Names{"1", "x", "x^2", "x^3", "y", "x^4", "xy"}));
  EXPECT_EQ(hyperelliptic_prefix_for_genus(4).back(), (Monomial{6, 0}));
  for (int g = 1; g <= 8; ++g)
    EXPECT_EQ(hyperelliptic_prefix_for_genus(g), adopted_basis(2, 2 * g + 1, 2 * g + 1).monomials) << g;
  EXPECT_THROW(hyperelliptic_prefix(picard(7)), Error);
}

TEST(Basis, TriagonalPrefix) {
  const auto t4 = triagonal_prefix(3, 4);
  EXPECT_EQ(t4.monomials, adopted_basis(3, 4, 7).monomials);
  const auto t7 = triagonal_prefix(3, 7);
  EXPECT_EQ(t7.s, 4);
  EXPECT_EQ(t7.q, 2);
  EXPECT_EQ(t7.s + t7.q, 7 - 1);
  EXPECT_TRUE(t7.matches_printed);
  // d = 2 mod 3: the congruence formula for s disagrees with enumeration,
  // which gives (2d - 1)/3.
  for (int d : {5, 8, 11, 14}) {
    const auto t = triagonal_prefix(3, d);
    EXPECT_EQ(t.s, (2 * d - 1) / 3) << d;
    EXPECT_EQ(t.q, (d - 2) / 3) << d;
    EXPECT_FALSE(t.matches_printed) << d;
  }
  for (int d = 4; d <= 40; ++d) {
    if (d % 3 == 0) continue;
    const auto t = triagonal_prefix(3, d);
    const int g = superelliptic_genus(3, d);
    EXPECT_EQ(t.monomials, adopted_basis(3, d, 2 * g + 1).monomials) << d;
  }
  EXPECT_THROW(triagonal_prefix(2, 5), Error);
  EXPECT_THROW(triagonal_prefix(3, 6), Error);
}

TEST(Basis, BoxOrders) {
  const auto o = box_orders(4, 13);
  EXPECT_EQ(o.size(), 56u);
  EXPECT_TRUE(std::is_sorted(o.begin(), o.end()));
  const auto b = adopted_basis(4, 13, 37);
  EXPECT_TRUE(std::equal(b.orders.begin(), b.orders.end(), o.begin()));
}

TEST(Basis, ParseMonomial) {
  EXPECT_EQ(parse_monomial("1"), (Monomial{0, 0}));
  EXPECT_EQ(parse_monomial("x^{10} y"), (Monomial{10, 1}));
  EXPECT_EQ(parse_monomial("yx"), (Monomial{1, 1}));
  EXPECT_EQ(parse_monomial("x^3y^2"), (Monomial{3, 2}));
  EXPECT_THROW(parse_monomial("z"), Error);
}

}  // namespace
}  // namespace superjac::testing
