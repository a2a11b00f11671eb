#include <map>
#include <mutex>
#include <tuple>

#include "superjac/field.hpp"
#include "superjac/poly.hpp"
#include "superjac/roots.hpp"

namespace superjac {

namespace {

// Images of 1, gamma, ..., gamma^(a-1) in the target, where gamma is the
// chosen image of the source generator.
struct EmbeddingData {
  std::vector<FieldElement> powers;
};

using Key = std::tuple<std::uint64_t, unsigned, unsigned, unsigned>;  // p, over, a, c

struct EmbeddingCache {
  std::mutex mutex;
  std::map<Key, EmbeddingData> maps;
};

EmbeddingCache& cache() {
  static EmbeddingCache c;
  return c;
}

FieldElement apply(const EmbeddingData& e, const FieldElement& x, const FieldCtx& target) {
  FieldElement acc = target.zero();
  const unsigned a = x.field().degree();
  for (unsigned i = 0; i < a; ++i) {
    const std::uint32_t c = x.coeff(i);
    if (c) acc += e.powers[i] * target.from_int(c);
  }
  return acc;
}

const EmbeddingData& embedding(const FieldCtx& source, const FieldCtx& target, const FieldCtx& over) {
  const Key key{source.characteristic(), over.degree(), source.degree(), target.degree()};
  {
    std::lock_guard lock(cache().mutex);
    if (auto it = cache().maps.find(key); it != cache().maps.end()) return it->second;
  }
  // Computed outside the lock: candidate checks recurse into embed().
  std::vector<FieldElement> mod;
  for (auto c : source.modulus()) mod.push_back(target.from_int(c));
  const UniPoly m(target, std::move(mod));
  const auto roots = distinct_roots(m, target);
  FieldElement over_gen, over_in_source, over_in_target;
  const bool check = !over.is_prime_field();
  if (check) {
    over_gen = over.generator();
    over_in_source = embed(over_gen, source);
    over_in_target = embed(over_gen, target);
  }
  for (const auto& gamma : roots) {
    EmbeddingData data;
    FieldElement pw = target.one();
    for (unsigned i = 0; i < source.degree(); ++i) {
      data.powers.push_back(pw);
      pw *= gamma;
    }
    if (check && !(apply(data, over_in_source, target) == over_in_target)) continue;
    std::lock_guard lock(cache().mutex);
    return cache().maps.emplace(key, std::move(data)).first->second;
  }
  fail(ErrorCode::FieldMismatch,
       "no embedding of " + source.name() + " into " + target.name() + " over " + over.name());
}

}  // namespace

FieldElement embed(const FieldElement& x, const FieldCtx& target, const FieldCtx& over_in) {
  const FieldCtx source = x.field();
  if (source == target) return x;
  if (!target.contains(source))
    fail(ErrorCode::FieldMismatch, "cannot embed " + source.name() + " into " + target.name());
  if (source.is_prime_field()) return target.zero() + x;
  const FieldCtx over = over_in.valid() ? over_in : source.prime_field();
  if (!source.contains(over))
    fail(ErrorCode::FieldMismatch, over.name() + " is not a subfield of " + source.name());
  return apply(embedding(source, target, over), x, target);
}

std::optional<FieldElement> descend(const FieldElement& z, const FieldCtx& sub, const FieldCtx& over_in) {
  const FieldCtx big = z.field();
  if (big == sub) return z;
  if (sub.characteristic() != big.characteristic()) return std::nullopt;
  if (!big.contains(sub)) {
    // Allow the trivial direction: z already in a subfield of sub.
    if (sub.contains(big)) return embed(z, sub, over_in);
    return std::nullopt;
  }
  const std::uint64_t p = big.characteristic();
  if (sub.is_prime_field()) {
    if (!z.is_prime_field_value()) return std::nullopt;
    return sub.from_int(z.coeff(0));
  }
  const FieldCtx over = over_in.valid() ? over_in : sub.prime_field();
  const auto& e = embedding(sub, big, over);
  // Solve sum_i c_i powers[i] = z over F_p by Gaussian elimination.
  const unsigned rows = big.degree(), cols = sub.degree();
  std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols + 1));
  for (unsigned r = 0; r < rows; ++r) {
    for (unsigned c = 0; c < cols; ++c) m[r][c] = e.powers[c].coeff(r);
    m[r][cols] = z.coeff(r);
  }
  auto inv = [p](std::uint64_t a) { return FieldCtx::make(p).from_int(static_cast<std::int64_t>(a)).inverse().coeff(0); };
  std::vector<int> pivot_col_row(cols, -1);
  unsigned row = 0;
  for (unsigned c = 0; c < cols && row < rows; ++c) {
    unsigned piv = row;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    const std::uint64_t iv = inv(m[row][c]);
    for (auto& v : m[row]) v = v * iv % p;
    for (unsigned r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const std::uint64_t factor = m[r][c];
      for (unsigned k = 0; k <= cols; ++k) m[r][k] = (m[r][k] + (p - factor) * m[row][k]) % p;
    }
    pivot_col_row[c] = static_cast<int>(row);
    ++row;
  }
  for (unsigned r = row; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;
  std::vector<std::uint64_t> coeffs(cols, 0);
  for (unsigned c = 0; c < cols; ++c)
    if (pivot_col_row[c] >= 0) coeffs[c] = m[static_cast<unsigned>(pivot_col_row[c])][cols];
  return sub.from_coeffs(coeffs);
}

}  // namespace superjac
