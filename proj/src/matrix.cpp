/* SPDX-License-Identifier: Apache-2.0 */
#include "apolar/matrix.hpp"

#include <cassert>

namespace apolar {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::row(int r) const {
  std::vector<Rational> out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

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
    const Rational inv = 1 / m.at(row, col);
    for (int j = col; j < ncols; ++j) m.at(row, j) *= inv;

    // Each row's elimination is independent exact arithmetic, so the result
    // does not depend on the schedule.
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < nrows; ++i) {
      if (i == row) continue;
      const Rational factor = m.at(i, col);
      if (factor == 0) continue;
      for (int j = col; j < ncols; ++j) {
        m.at(i, j) -= factor * m.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

int rank(const RationalMatrix& a) {
  return static_cast<int>(rref(a).pivot_columns.size());
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a) {
  return detail::kernel_basis(rref(a), a.cols());
}

RationalMatrix transpose(const RationalMatrix& a) {
  RationalMatrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  }
  return t;
}

RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b) {
  assert(a.cols() == b.cols() || a.rows() == 0 || b.rows() == 0);
  const int cols = a.rows() > 0 ? a.cols() : b.cols();
  RationalMatrix m(a.rows() + b.rows(), cols);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < cols; ++j) m.at(i, j) = a.at(i, j);
  }
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < cols; ++j) m.at(a.rows() + i, j) = b.at(i, j);
  }
  return m;
}

RationalMatrix drop_row(const RationalMatrix& a, int row) {
  assert(row >= 0 && row < a.rows());
  RationalMatrix m(a.rows() - 1, a.cols());
  for (int i = 0, out = 0; i < a.rows(); ++i) {
    if (i == row) continue;
    for (int j = 0; j < a.cols(); ++j) m.at(out, j) = a.at(i, j);
    ++out;
  }
  return m;
}

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows, int cols) {
  RationalMatrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    assert(static_cast<int>(rows[i].size()) == cols);
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rational> apply(const RationalMatrix& a, const std::vector<Rational>& v) {
  assert(static_cast<int>(v.size()) == a.cols());
  std::vector<Rational> out(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    Rational acc = 0;
    for (int j = 0; j < a.cols(); ++j) acc += a.at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

int span_dimension(const std::vector<std::vector<Rational>>& rows, int cols) {
  if (rows.empty()) return 0;
  return rank(from_rows(rows, cols));
}

bool spans_equal(const std::vector<std::vector<Rational>>& a,
                 const std::vector<std::vector<Rational>>& b, int cols) {
  const int ra = span_dimension(a, cols);
  const int rb = span_dimension(b, cols);
  if (ra != rb) return false;
  std::vector<std::vector<Rational>> joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  return span_dimension(joint, cols) == ra;
}

namespace detail {

std::vector<std::vector<Rational>> kernel_basis(const RrefResult& r, int cols) {
  const auto& pivots = r.pivot_columns;
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free_col] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      v[pivots[k]] = -r.matrix.at(static_cast<int>(k), free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

}  // namespace apolar
