/* SPDX-License-Identifier: Apache-2.0 */
// Benchmark: parallel elimination kernels against the serial references.
// Exact arithmetic means both sides must produce identical results; the
// comparison is asserted, not just timed.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <vector>

#include "apolar/gorenstein.hpp"
#include "apolar/matrix.hpp"
#include "apolar/points.hpp"
#include "apolar/rational.hpp"

using apolar::PointConfiguration;
using apolar::ProjectivePoint;
using apolar::Rational;
using apolar::RationalMatrix;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

RationalMatrix random_matrix(int rows, int cols, unsigned seed) {
  std::mt19937 engine(seed);
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int num = static_cast<int>(engine() % 19) - 9;
      const int den = static_cast<int>(engine() % 4) + 1;
      m.at(i, j) = apolar::make_rational(num, den);
    }
  }
  return m;
}

// A 5x5 grid in the plane: 25 points, socle degree 8.
PointConfiguration grid_config() {
  std::vector<ProjectivePoint> pts;
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      pts.push_back(ProjectivePoint::from_coords(
          {Rational(a), Rational(b), Rational(1)}));
    }
  }
  return PointConfiguration(2, std::move(pts));
}

}  // namespace

int main() {
  std::cout << "elimination benchmark (exact rational arithmetic)\n\n";

  {
    const RationalMatrix m = random_matrix(140, 140, 20260818);
    auto start = std::chrono::steady_clock::now();
    const auto serial = apolar::serial::rref(m);
    const double serial_time = seconds_since(start);

    start = std::chrono::steady_clock::now();
    const auto parallel = apolar::rref(m);
    const double parallel_time = seconds_since(start);

    if (!(serial.matrix == parallel.matrix &&
          serial.pivot_columns == parallel.pivot_columns)) {
      std::cerr << "FATAL: serial and parallel RREF disagree\n";
      return 1;
    }
    std::cout << "rref 140x140 dense rational\n"
              << "  serial:   " << serial_time << " s\n"
              << "  parallel: " << parallel_time << " s\n"
              << "  speedup:  " << serial_time / parallel_time << "x\n\n";
  }

  {
    const PointConfiguration z = grid_config();
    const auto h = apolar::hilbert_data(z);
    const int probe = h.socle_degree - 1;
    const RationalMatrix full = apolar::evaluation_matrix(z, probe);

    // Serial sweep: rank of each drop-one submatrix via the reference
    // implementation.
    auto start = std::chrono::steady_clock::now();
    std::vector<int> serial_ranks(static_cast<std::size_t>(z.size()));
    for (int i = 0; i < z.size(); ++i) {
      serial_ranks[static_cast<std::size_t>(i)] =
          apolar::serial::rank(apolar::drop_row(full, i));
    }
    const double serial_time = seconds_since(start);

    // Parallel sweep: the library's Cayley-Bacharach check runs the same
    // subset ranks with OpenMP.
    start = std::chrono::steady_clock::now();
    const auto cb = apolar::cayley_bacharach(z);
    const double parallel_time = seconds_since(start);

    const int want = apolar::hilbert_function(z, probe);
    bool all_match = true;
    for (int r : serial_ranks) {
      if (r != want) all_match = false;
    }
    if (!all_match || !cb.holds) {
      std::cerr << "FATAL: serial sweep and parallel check disagree\n";
      return 1;
    }
    std::cout << "Cayley-Bacharach sweep, 25-point grid, degree " << probe
              << "\n"
              << "  serial:   " << serial_time << " s\n"
              << "  parallel: " << parallel_time << " s\n"
              << "  speedup:  " << serial_time / parallel_time << "x\n";
  }

  return 0;
}
