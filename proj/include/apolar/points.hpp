/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <vector>

#include "apolar/matrix.hpp"
#include "apolar/polyring.hpp"

namespace apolar {

// A point of P^n with a canonical representative: the first nonzero
// coordinate is scaled to 1. Equality and serialization are exact on the
// representative.
struct ProjectivePoint {
  std::vector<Rational> coords;

  // Normalizes; throws InputError if every coordinate is zero.
  static ProjectivePoint from_coords(std::vector<Rational> raw);

  bool operator==(const ProjectivePoint& other) const = default;
};

// A reduced configuration: m >= 1 pairwise distinct points of P^n.
class PointConfiguration {
public:
  PointConfiguration(int n, std::vector<ProjectivePoint> points);

  int n() const { return n_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  const ProjectivePoint& point(int i) const { return points_[i]; }

private:
  int n_;
  std::vector<ProjectivePoint> points_;
};

struct HilbertData {
  std::vector<int> hf;       // HF(R/I_Z, j) for j = 0..regularity
  int regularity = 0;        // first degree where HF reaches m
  std::vector<int> h_vector; // first differences of hf
  int socle_degree = 0;      // last nonzero index of the h-vector (= regularity)
  bool degenerate = false;   // contained in a hyperplane
};

// m x C(n+d, n) matrix of monomial values at the points; its kernel is the
// degree-d piece of the vanishing ideal.
RationalMatrix evaluation_matrix(const PointConfiguration& z, int degree);

// Basis of (I_Z)_d as R-side polynomials.
std::vector<GradedPoly> vanishing_ideal_piece(const PointConfiguration& z, int degree);

// HF(R/I_Z, j) = rank of the evaluation matrix.
int hilbert_function(const PointConfiguration& z, int degree);

// Hilbert function values up to stabilization at m, h-vector, regularity.
// Terminates by degree m-1.
HilbertData hilbert_data(const PointConfiguration& z);

}  // namespace apolar
