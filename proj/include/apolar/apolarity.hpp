/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "apolar/gorenstein.hpp"
#include "apolar/points.hpp"
#include "apolar/polyring.hpp"

namespace apolar {

// One row of the graded comparison between <I_Z, ell> and Ann(F).
struct DegreeComparison {
  int degree = 0;
  int ideal_dim = 0;
  int annihilator_dim = 0;
  bool equal = false;
};

// Output of the direct construction: F = sum c_i L_i^r with the dependence
// witnesses d_i = c_i * ell(P_i) and the per-degree verification table.
struct ApolarityResult {
  std::vector<Rational> c;  // normalized: c[0] = 1
  std::vector<Rational> d;  // d_i = c_i * ell(P_i); sum d_i L_i^{r-1} = 0
  std::vector<LinearFormS> duals;
  int regularity = 0;
  GradedPoly dual_socle_generator;  // F, expanded
  bool verified = false;
  std::vector<DegreeComparison> per_degree;
};

struct RecoveryResult {
  std::optional<LinearFormR> ell;  // normalized: first nonzero coefficient 1
  int matrix_rank = 0;
  bool consistent = false;
  std::vector<Rational> d;  // re-derived dependence coefficients
  HilbertData hilbert;
};

struct VerificationResult {
  std::vector<DegreeComparison> per_degree;  // degrees 1 .. r+1
  bool verified = false;
};

// The linear form a_0 y_0 + ... + a_n y_n attached to P = [a_0 : ... : a_n]
// (normalized representative).
LinearFormS dual_form(const ProjectivePoint& p);

// dim Span(L_1^j, ..., L_m^j); equals the Hilbert function of the dual
// points in degree j.
int power_span_dimension(const std::vector<LinearFormS>& forms, int degree);

struct DependenceCoefficients {
  std::vector<Rational> c;
  std::vector<Rational> d;
};

// The unique (up to scale) nonzero constants with
// sum_i c_i ell(P_i) L_i^{r-1} = 0, normalized so c[0] = 1.
// Throws NonvanishingError / KernelDimensionError / ZeroCoefficientError.
DependenceCoefficients dependence_coefficients(const PointConfiguration& z,
                                               const LinearFormR& ell, int r);

// Full direct construction: checks the Gorenstein precondition (unless
// bypassed), derives r and the c_i, expands F, and verifies
// <I_Z, ell> = Ann(F) degree by degree.
ApolarityResult inverse_system_generator(const PointConfiguration& z, const LinearFormR& ell,
                                         bool allow_non_gorenstein = false);

// Ann(F) in one degree: kernel of the catalecticant map f -> f o F for
// degree <= deg F, all of R_degree beyond.
std::vector<GradedPoly> annihilator_piece(const GradedPoly& f, int degree);

// Per-degree span comparison of <I_Z, ell> and Ann(F) for degrees 1..r,
// plus the socle conditions: both quotients are one-dimensional in degree r
// and vanish in degree r+1. A false verdict is a result, not an error.
VerificationResult verify(const PointConfiguration& z, const LinearFormR& ell,
                          const GradedPoly& f, int r);

// Converse direction: from F presented as terms (c_i, L_i) of degree r,
// re-derive the dependence, validate the span conditions, and recover the
// linear form interpolating d_i / c_i at the points dual to the L_i.
RecoveryResult recover_linear_form(const std::vector<std::pair<Rational, LinearFormS>>& terms,
                                   int r);

// dim of the span of the order (deg F - j) partial derivatives of F.
int derivative_span_dimension(const GradedPoly& f, int j);

}  // namespace apolar
