/* SPDX-License-Identifier: Apache-2.0 */
#include "apolar/gorenstein.hpp"

#include <cassert>

#include "apolar/errors.hpp"

namespace apolar {

bool is_symmetric(const std::vector<int>& h_vector) {
  assert(!h_vector.empty() && h_vector.back() != 0);
  const std::size_t s = h_vector.size() - 1;
  for (std::size_t j = 0; j <= s / 2; ++j) {
    if (h_vector[j] != h_vector[s - j]) return false;
  }
  return true;
}

namespace {

CayleyBacharachResult cayley_bacharach_at(const PointConfiguration& z, int socle_degree) {
  const int m = z.size();
  // Subsets reuse the full evaluation matrix with one row deleted; ranks
  // are recomputed from scratch, one independent job per point.
  const RationalMatrix full = evaluation_matrix(z, socle_degree - 1);
  const int hf_z = rank(full);

  std::vector<int> hf_subset(m);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < m; ++i) {
    hf_subset[i] = rank(drop_row(full, i));
  }

  for (int i = 0; i < m; ++i) {
    if (hf_subset[i] != hf_z) {
      return {false, i};
    }
  }
  return {true, std::nullopt};
}

}  // namespace

CayleyBacharachResult cayley_bacharach(const PointConfiguration& z) {
  if (z.size() < 2) {
    throw InputError("Cayley-Bacharach check needs at least two points");
  }
  return cayley_bacharach_at(z, hilbert_data(z).socle_degree);
}

GorensteinReport gorenstein_report(const PointConfiguration& z) {
  GorensteinReport report;
  report.hilbert = hilbert_data(z);
  report.symmetric = is_symmetric(report.hilbert.h_vector);
  if (z.size() == 1) {
    // A single point: no proper subsets to test.
    report.cayley_bacharach = true;
  } else {
    const auto cb = cayley_bacharach_at(z, report.hilbert.socle_degree);
    report.cayley_bacharach = cb.holds;
    report.failing_subset = cb.witness;
  }
  report.arithmetically_gorenstein = report.symmetric && report.cayley_bacharach;
  return report;
}

}  // namespace apolar
