/* SPDX-License-Identifier: Apache-2.0 */
#include "apolar/points.hpp"

#include <cassert>

#include "apolar/errors.hpp"
#include "apolar/trace.hpp"

namespace apolar {

ProjectivePoint ProjectivePoint::from_coords(std::vector<Rational> raw) {
  int lead = -1;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] != 0) {
      lead = static_cast<int>(i);
      break;
    }
  }
  if (lead < 0) {
    throw InputError("projective point with all coordinates zero");
  }
  const Rational scale = raw[lead];
  for (auto& c : raw) c /= scale;
  return ProjectivePoint{std::move(raw)};
}

PointConfiguration::PointConfiguration(int n, std::vector<ProjectivePoint> points)
    : n_(n), points_(std::move(points)) {
  if (n_ < 0) throw InputError("negative ambient dimension");
  if (points_.empty()) throw InputError("empty point configuration");
  for (const auto& p : points_) {
    if (static_cast<int>(p.coords.size()) != n_ + 1) {
      throw InputError("point has wrong number of coordinates");
    }
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i] == points_[j]) {
        throw InputError("points not distinct");
      }
    }
  }
}

RationalMatrix evaluation_matrix(const PointConfiguration& z, int degree) {
  assert(degree >= 0);
  const int n = z.n();
  const auto basis = monomial_basis(n, degree);
  const int cols = static_cast<int>(basis.size());
  RationalMatrix m(z.size(), cols);

#pragma omp parallel for schedule(static)
  for (int i = 0; i < z.size(); ++i) {
    const auto& coords = z.point(i).coords;
    // power table: powers[v][e] = coords[v]^e
    std::vector<std::vector<Rational>> powers(n + 1);
    for (int v = 0; v <= n; ++v) {
      powers[v].resize(degree + 1);
      powers[v][0] = 1;
      for (int e = 1; e <= degree; ++e) powers[v][e] = powers[v][e - 1] * coords[v];
    }
    for (int k = 0; k < cols; ++k) {
      Rational value = 1;
      const auto& exps = basis[k].exponents;
      for (int v = 0; v <= n; ++v) {
        if (exps[v] > 0) value *= powers[v][exps[v]];
      }
      m.at(i, k) = value;
    }
  }
  if (trace::enabled()) {
    trace::matrix("evaluation matrix, degree " + std::to_string(degree), m);
  }
  return m;
}

std::vector<GradedPoly> vanishing_ideal_piece(const PointConfiguration& z, int degree) {
  const auto kernel = nullspace(evaluation_matrix(z, degree));
  std::vector<GradedPoly> out;
  out.reserve(kernel.size());
  for (const auto& v : kernel) {
    GradedPoly p = GradedPoly::zero(Ring::R, z.n(), degree);
    p.coeffs = v;
    out.push_back(std::move(p));
  }
  return out;
}

int hilbert_function(const PointConfiguration& z, int degree) {
  return rank(evaluation_matrix(z, degree));
}

HilbertData hilbert_data(const PointConfiguration& z) {
  HilbertData data;
  const int m = z.size();
  int j = 0;
  while (true) {
    const int value = hilbert_function(z, j);
    data.hf.push_back(value);
    if (value == m) break;
    ++j;
  }
  data.regularity = j;
  data.socle_degree = j;
  data.h_vector.resize(j + 1);
  for (int k = 0; k <= j; ++k) {
    data.h_vector[k] = data.hf[k] - (k > 0 ? data.hf[k - 1] : 0);
  }
  const int hf1 = data.hf.size() > 1 ? data.hf[1] : hilbert_function(z, 1);
  data.degenerate = hf1 < z.n() + 1;
  return data;
}

}  // namespace apolar
