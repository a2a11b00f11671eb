#include "superjac/linalg.hpp"

#include <utility>

namespace superjac {

FieldElement determinant(Matrix m, const FieldCtx& field) {
  const std::size_t n = m.size();
  FieldElement det = field.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return field.zero();
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const FieldElement inv = m[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const FieldElement factor = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return det;
}

Rref rref(Matrix m) {
  Rref out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    const FieldElement inv = m[row][c].inverse();
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      const FieldElement factor = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[row][k];
    }
    out.pivot_cols.push_back(static_cast<int>(c));
    ++row;
  }
  out.m = std::move(m);
  return out;
}

int rank(Matrix m) { return static_cast<int>(rref(std::move(m)).pivot_cols.size()); }

std::vector<std::vector<FieldElement>> kernel(const Matrix& m, const FieldCtx& field) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  Rref r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(cols, field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[static_cast<std::size_t>(r.pivot_cols[i])] = -r.m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace superjac
