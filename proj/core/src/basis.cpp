#include "superjac/basis.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace superjac {

namespace {

void require_coprime(int n, int d) {
  if (n < 2 || d < 1) fail(ErrorCode::DegreeTooSmall, "need n >= 2 and d >= 1", "basis");
  if (std::gcd(n, d) != 1)
    fail(ErrorCode::GcdViolation, "gcd(" + std::to_string(n) + ", " + std::to_string(d) + ") != 1", "basis");
}

// The unique (i, j) with j < n and n i + d j = m, if any.
std::optional<Monomial> representation(int n, int d, int m) {
  for (int j = 0; j < n && d * j <= m; ++j)
    if ((m - d * j) % n == 0) return Monomial{(m - d * j) / n, j};
  return std::nullopt;
}

}  // namespace

std::string Monomial::to_string() const {
  std::string s;
  if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
  if (j > 0) s += j == 1 ? "y" : "y^" + std::to_string(j);
  return s.empty() ? "1" : s;
}

AdoptedBasis adopted_basis(int n, int d, int count) {
  require_coprime(n, d);
  AdoptedBasis b{n, d, {}, {}};
  for (int m = 0; static_cast<int>(b.monomials.size()) < count; ++m) {
    if (auto mono = representation(n, d, m)) {
      b.monomials.push_back(*mono);
      b.orders.push_back(m);
    }
  }
  return b;
}

AdoptedBasis adopted_basis(const SuperellipticCurve& c, int count) { return adopted_basis(c.n(), c.d(), count); }

BasisTable basis_matrix(int n, int d) {
  require_coprime(n, d);
  const int g = superelliptic_genus(n, d);
  BasisTable t{n, d, g, {}};
  const int width = 3 * g / n + 1;
  for (int j = 0; j < n; ++j) {
    std::vector<std::optional<Monomial>> row(static_cast<std::size_t>(width));
    for (int i = 0; n * i + d * j <= 3 * g; ++i) row[static_cast<std::size_t>(i)] = Monomial{i, j};
    t.rows.push_back(std::move(row));
  }
  return t;
}

BasisTable basis_matrix(const SuperellipticCurve& c) { return basis_matrix(c.n(), c.d()); }

std::vector<int> semigroup_elements(int n, int d, int limit) {
  std::vector<int> out;
  for (int m = 0; m <= limit; ++m)
    if (representation(n, d, m)) out.push_back(m);
  return out;
}

std::vector<int> gap_sequence(int n, int d) {
  require_coprime(n, d);
  // Every integer from (n-1)(d-1) on is representable.
  const int conductor = (n - 1) * (d - 1);
  std::vector<int> gaps;
  for (int m = 1; m < conductor; ++m)
    if (!representation(n, d, m)) gaps.push_back(m);
  return gaps;
}

std::vector<int> gap_sequence(const SuperellipticCurve& c) { return gap_sequence(c.n(), c.d()); }

Monomial exact_order_monomial(int n, int d, int order) {
  require_coprime(n, d);
  const int g = superelliptic_genus(n, d);
  if (order < 2 * g || order > 3 * g)
    fail(ErrorCode::PreconditionFailed,
         "order " + std::to_string(order) + " outside [" + std::to_string(2 * g) + ", " + std::to_string(3 * g) + "]",
         "basis");
  // representation() already scans j upward, so the first hit is canonical.
  auto m = representation(n, d, order);
  if (!m) fail(ErrorCode::PreconditionFailed, "no monomial of order " + std::to_string(order), "basis");
  return *m;
}

Monomial exact_order_monomial(const SuperellipticCurve& c, int order) {
  return exact_order_monomial(c.n(), c.d(), order);
}

int interp_degree_bound(int n, int d) {
  const int g = superelliptic_genus(n, d);
  int best = 0;
  for (const auto& m : adopted_basis(n, d, 2 * g + 1).monomials) best = std::max(best, m.i + m.j);
  return best;
}

int interp_degree_bound(const SuperellipticCurve& c) { return interp_degree_bound(c.n(), c.d()); }

std::vector<Monomial> hyperelliptic_prefix_for_genus(int g) {
  if (g < 1) fail(ErrorCode::PreconditionFailed, "genus must be positive", "basis");
  const int s = (g - 1) / 2;
  std::vector<Monomial> out;
  for (int i = 0; i <= g; ++i) out.push_back({i, 0});
  out.push_back({0, 1});
  for (int k = 1; k <= s; ++k) {
    out.push_back({g + k, 0});
    out.push_back({k, 1});
  }
  if (g % 2 == 0) out.push_back({g + s + 1, 0});
  return out;
}

std::vector<Monomial> hyperelliptic_prefix(const SuperellipticCurve& c) {
  if (c.n() != 2) fail(ErrorCode::NotHyperelliptic, "n = " + std::to_string(c.n()), "basis");
  return hyperelliptic_prefix_for_genus(c.genus());
}

TriagonalPrefix triagonal_prefix(int n, int d) {
  if (n != 3 || d % 3 == 0)
    fail(ErrorCode::NotTriagonal, "need n = 3 and gcd(3, d) = 1, got n = " + std::to_string(n) +
                                      ", d = " + std::to_string(d), "basis");
  const int g = superelliptic_genus(n, d);
  TriagonalPrefix t;
  t.monomials = adopted_basis(n, d, 2 * g + 1).monomials;
  for (const auto& m : t.monomials) {
    if (m.j == 1) ++t.s;
    if (m.j == 2) ++t.q;
  }
  if (d % 3 == 1) {
    t.printed_q = (d - 1) / 3;
    t.printed_s = 2 * (d - 1) / 3;
  } else {
    t.printed_q = (d - 2) / 3;
    t.printed_integral = (d - 5) % 6 == 0;
    t.printed_s = (d - 5) / 6;
  }
  t.matches_printed = t.printed_integral && t.s == t.printed_s && t.q == t.printed_q;
  return t;
}

TriagonalPrefix triagonal_prefix(const SuperellipticCurve& c) { return triagonal_prefix(c.n(), c.d()); }

std::vector<int> box_orders(int n, int d) {
  std::set<int> s;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j < n; ++j) s.insert(n * i + d * j);
  return {s.begin(), s.end()};
}

Monomial parse_monomial(std::string_view text) {
  Monomial m;
  bool seen_x = false, seen_y = false, any = false;
  std::size_t k = 0;
  auto bad = [&]() { fail(ErrorCode::ParseError, "bad monomial '" + std::string(text) + "'", "basis"); };
  while (k < text.size()) {
    const char ch = text[k];
    if (ch == ' ' || ch == '*') {
      ++k;
      continue;
    }
    if (ch == '1' && !any && text.find_first_not_of(' ', k + 1) == std::string_view::npos) return m;
    if (ch != 'x' && ch != 'y') bad();
    bool& seen = ch == 'x' ? seen_x : seen_y;
    if (seen) bad();
    seen = any = true;
    ++k;
    int e = 1;
    if (k < text.size() && text[k] == '^') {
      ++k;
      if (k < text.size() && text[k] == '{') ++k;
      const std::size_t start = k;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      if (k == start) bad();
      e = std::stoi(std::string(text.substr(start, k - start)));
      if (k < text.size() && text[k] == '}') ++k;
    }
    (ch == 'x' ? m.i : m.j) = e;
  }
  if (!any) bad();
  return m;
}

}  // namespace superjac
