#include "bihom/linalg.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace bihom {

namespace {

// Indices of pivot columns of a matrix already in RREF.
std::vector<std::size_t> pivot_columns(const Matrix& r) {
  std::vector<std::size_t> pivots;
  std::size_t c = 0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    while (c < r.cols() && r(i, c) == 0) ++c;
    if (c == r.cols()) break;
    pivots.push_back(c);
    ++c;
  }
  return pivots;
}

}  // namespace

Matrix rref(const Matrix& in) {
  Matrix m = in;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  std::size_t lead = 0;
  for (std::size_t pr = 0; pr < rows && lead < cols; ++pr) {
    // Find the next pivot at or below row pr.
    std::size_t prow = rows;
    for (; lead < cols; ++lead) {
      for (std::size_t i = pr; i < rows; ++i) {
        if (m(i, lead) != 0) {
          prow = i;
          break;
        }
      }
      if (prow != rows) break;
    }
    if (lead == cols) break;

    if (prow != pr) {
      for (std::size_t c = lead; c < cols; ++c) std::swap(m(pr, c), m(prow, c));
    }

    const Rational piv = m(pr, lead);
    if (piv != 1) {
      for (std::size_t c = lead; c < cols; ++c) m(pr, c) /= piv;
    }

    // Clear the pivot column in every other row.  The updates are
    // row-independent, so this is the parallel hot loop.
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(rows); ++i) {
      if (static_cast<std::size_t>(i) == pr) continue;
      const Rational f = m(static_cast<std::size_t>(i), lead);
      if (f == 0) continue;
      for (std::size_t c = lead; c < cols; ++c) {
        m(static_cast<std::size_t>(i), c) -= f * m(pr, c);
      }
    }

    ++lead;
  }
  return m;
}

Matrix rref_serial(const Matrix& in) {
  Matrix m = in;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  // Phase 1: forward elimination to row echelon form with unit pivots.
  std::vector<std::size_t> pivots;  // pivot column of row k
  std::size_t lead = 0;
  for (std::size_t pr = 0; pr < rows && lead < cols; ++pr) {
    std::size_t prow = rows;
    for (; lead < cols; ++lead) {
      for (std::size_t i = pr; i < rows; ++i) {
        if (m(i, lead) != 0) {
          prow = i;
          break;
        }
      }
      if (prow != rows) break;
    }
    if (lead == cols) break;
    if (prow != pr) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(pr, c), m(prow, c));
    }
    const Rational piv = m(pr, lead);
    for (std::size_t c = lead; c < cols; ++c) m(pr, c) /= piv;
    for (std::size_t i = pr + 1; i < rows; ++i) {
      const Rational f = m(i, lead);
      if (f == 0) continue;
      for (std::size_t c = lead; c < cols; ++c) m(i, c) -= f * m(pr, c);
    }
    pivots.push_back(lead);
    ++lead;
  }

  // Phase 2: back-substitution clears entries above each pivot.
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t pc = pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      const Rational f = m(i, pc);
      if (f == 0) continue;
      for (std::size_t c = pc; c < cols; ++c) m(i, c) -= f * m(k, c);
    }
  }
  return m;
}

std::size_t rank(const Matrix& m) {
  const Matrix r = rref(m);
  std::size_t rk = 0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < r.cols(); ++j) {
      if (r(i, j) != 0) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) ++rk;
  }
  return rk;
}

std::vector<Vec> nullspace_basis(const Matrix& m) {
  const Matrix r = rref(m);
  const std::vector<std::size_t> pivots = pivot_columns(r);

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v(m.cols());
    v[j] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      v[pivots[k]] = -r(k, j);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Matrix r = rref(aug);
  // Invertible iff the left block reduced to the identity.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (r(i, j) != (i == j ? 1 : 0)) return std::nullopt;
    }
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  }
  return inv;
}

bool is_invertible(const Matrix& m) { return inverse(m).has_value(); }

}  // namespace bihom
