#pragma once

#include <optional>
#include <vector>

#include "bihom/matrix.hpp"

namespace bihom {

// Reduced row echelon form via Gauss-Jordan elimination.  Pivots are
// normalized to 1 and cleared above and below, so the result is the unique
// RREF of the input.  Row updates within one elimination step are independent
// and run under OpenMP.
Matrix rref(const Matrix& m);

// Serial reference implementation: textbook two-phase elimination (forward
// sweep to echelon form, then back-substitution).  Kept as an independent
// check on the parallel kernel; the two must agree exactly on every input.
Matrix rref_serial(const Matrix& m);

// Number of nonzero rows of rref(m).
std::size_t rank(const Matrix& m);

// Basis of { v : m v = 0 }, one vector per free column of rref(m), ordered by
// free column index.  Entries are exact; the basis is the standard one with a
// unit in the free coordinate.
std::vector<Vec> nullspace_basis(const Matrix& m);

// Exact inverse, or std::nullopt when the matrix is singular or non-square.
std::optional<Matrix> inverse(const Matrix& m);

bool is_invertible(const Matrix& m);

}  // namespace bihom
