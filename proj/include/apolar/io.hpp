/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apolar/polyring.hpp"
#include "apolar/rational.hpp"

namespace apolar {

struct TermInput {
  Rational c;
  std::vector<Rational> form;  // coefficients of L
};

// The one input schema shared by all commands; per-command required fields
// are validated by the command drivers. Rationals are "p/q" strings or JSON
// integers; floating numbers are rejected.
struct InputDocument {
  int n = -1;
  std::optional<std::vector<std::vector<Rational>>> points;
  std::optional<std::vector<Rational>> ell;
  std::optional<std::vector<TermInput>> terms;
  std::optional<int> r;
  std::optional<GradedPoly> dual_generator;  // "F": structured or text form
};

InputDocument parse_input(const std::string& json_text);

// Monomial-sum text form, graded-lex term order, e.g. "y0^2 + 2*y0*y1".
std::string format_poly(const GradedPoly& p);

// Inverse of format_poly; accepts any monomial sum in x- or y-variables
// with rational coefficients. Must be homogeneous.
GradedPoly parse_poly_text(const std::string& text, int n);

}  // namespace apolar
