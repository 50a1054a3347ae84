/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <optional>
#include <vector>

#include "apolar/points.hpp"

namespace apolar {

// Verdict for the arithmetically Gorenstein test: symmetric h-vector
// together with the Cayley-Bacharach property.
struct GorensteinReport {
  HilbertData hilbert;
  bool symmetric = false;
  bool cayley_bacharach = false;
  bool arithmetically_gorenstein = false;
  // Set when CB fails: a point whose removal drops the Hilbert function in
  // degree s-1 (first such index in input order).
  std::optional<int> failing_subset;
};

bool is_symmetric(const std::vector<int>& h_vector);

struct CayleyBacharachResult {
  bool holds = false;
  std::optional<int> witness;
};

// Every (m-1)-point subset must match the full configuration's Hilbert
// function in degree s-1. The m subset ranks run in parallel.
CayleyBacharachResult cayley_bacharach(const PointConfiguration& z);

GorensteinReport gorenstein_report(const PointConfiguration& z);

}  // namespace apolar
