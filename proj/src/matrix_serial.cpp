/* SPDX-License-Identifier: Apache-2.0 */

// Reference elimination kept deliberately plain: forward sweep to echelon
// form, then backward reduction. The RREF of a matrix is unique, so this
// must agree entry-for-entry with the parallel kernel.

#include "apolar/matrix.hpp"

namespace apolar::serial {

RrefResult rref(const RationalMatrix& a) {
  RationalMatrix m = a;
  const int nrows = m.rows();
  const int ncols = m.cols();
  std::vector<int> pivots;

  int row = 0;
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int pivot = -1;
    for (int i = row; i < nrows; ++i) {
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int j = col; j < ncols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
    }
    for (int i = row + 1; i < nrows; ++i) {
      if (m.at(i, col) == 0) continue;
      const Rational factor = m.at(i, col) / m.at(row, col);
      for (int j = col; j < ncols; ++j) {
        m.at(i, j) -= factor * m.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }

  for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
    const int col = pivots[k];
    const Rational inv = 1 / m.at(k, col);
    for (int j = col; j < ncols; ++j) m.at(k, j) *= inv;
    for (int i = 0; i < k; ++i) {
      const Rational factor = m.at(i, col);
      if (factor == 0) continue;
      for (int j = col; j < ncols; ++j) {
        m.at(i, j) -= factor * m.at(k, j);
      }
    }
  }
  return {std::move(m), std::move(pivots)};
}

int rank(const RationalMatrix& a) {
  return static_cast<int>(serial::rref(a).pivot_columns.size());
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a) {
  return detail::kernel_basis(serial::rref(a), a.cols());
}

}  // namespace apolar::serial
