/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

// Dense row-major matrix over Q. Small by design (desk scale keeps every
// dimension in the hundreds); values are immutable once handed to the
// elimination routines, which work on private copies.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }

  std::vector<Rational> row(int r) const;

  bool operator==(const RationalMatrix& other) const = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  RationalMatrix matrix;
  std::vector<int> pivot_columns;
};

// Reduced row echelon form. Row eliminations at each pivot step run in
// parallel; the result is exact and identical for any thread count.
RrefResult rref(const RationalMatrix& a);

int rank(const RationalMatrix& a);

// Basis of {v : Av = 0}, one vector per free column in ascending column
// order, with the free variable pinned to 1.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a);

RationalMatrix transpose(const RationalMatrix& a);
RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix drop_row(const RationalMatrix& a, int row);
RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows, int cols);
std::vector<Rational> apply(const RationalMatrix& a, const std::vector<Rational>& v);

// Dimension of the span of the given row vectors (each of length cols).
int span_dimension(const std::vector<std::vector<Rational>>& rows, int cols);

// Mutual containment via ranks: rank(A) == rank(B) == rank(A over B).
bool spans_equal(const std::vector<std::vector<Rational>>& a,
                 const std::vector<std::vector<Rational>>& b, int cols);

// Serial reference implementations, kept alongside the parallel kernels so
// tests and the benchmark can cross-check them. Classic two-phase shape:
// forward elimination, then a backward reduction pass.
namespace serial {

RrefResult rref(const RationalMatrix& a);
int rank(const RationalMatrix& a);
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a);

}  // namespace serial

namespace detail {

// Canonical kernel basis read off an RREF (free variable set to 1).
std::vector<std::vector<Rational>> kernel_basis(const RrefResult& r, int cols);

}  // namespace detail

}  // namespace apolar
