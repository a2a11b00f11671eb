#pragma once

#include <vector>

#include "superjac/field.hpp"

namespace superjac {

using Matrix = std::vector<std::vector<FieldElement>>;

// Dense Gaussian elimination over a finite field. All entries must share one
// field (prime-field entries are lifted).

// The empty matrix has determinant 1.
FieldElement determinant(Matrix m, const FieldCtx& field);
int rank(Matrix m);

struct Rref {
  Matrix m;
  std::vector<int> pivot_cols;
};
Rref rref(Matrix m);

// Basis of the right kernel, one vector per free column in increasing column
// order; each vector has a 1 in its free column.
std::vector<std::vector<FieldElement>> kernel(const Matrix& m, const FieldCtx& field);

}  // namespace superjac
