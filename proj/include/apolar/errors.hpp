/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace apolar {

// Every failure carries a stable machine-readable code; the CLI maps codes
// to exit status (input errors -> 2, mathematical failures -> 1).
class ApolarError : public std::runtime_error {
public:
  ApolarError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// Malformed or inconsistent input (bad JSON, duplicate points, zero forms).
struct InputError : ApolarError {
  explicit InputError(const std::string& message)
      : ApolarError("input", message) {}
};

// The chosen linear form vanishes at one of the points.
struct NonvanishingError : ApolarError {
  explicit NonvanishingError(const std::string& message)
      : ApolarError("nonvanishing", message) {}
};

// The dependence kernel is not one-dimensional.
struct KernelDimensionError : ApolarError {
  explicit KernelDimensionError(const std::string& message)
      : ApolarError("kernel_dimension", message) {}
};

// A dependence coefficient vanished, so some point drops out of the sum.
struct ZeroCoefficientError : ApolarError {
  explicit ZeroCoefficientError(const std::string& message)
      : ApolarError("zero_coefficient", message) {}
};

struct NotGorensteinError : ApolarError {
  explicit NotGorensteinError(const std::string& message)
      : ApolarError("not_gorenstein", message) {}
};

// Recovery condition (1): the r-th powers of the dual forms are dependent.
struct ConditionOneError : ApolarError {
  explicit ConditionOneError(const std::string& message)
      : ApolarError("condition_one", message) {}
};

// Recovery condition (2): the (r-1)-st powers admit no unique dependence
// with all coefficients nonzero.
struct ConditionTwoError : ApolarError {
  explicit ConditionTwoError(const std::string& message)
      : ApolarError("condition_two", message) {}
};

struct AsymmetricHVectorError : ApolarError {
  explicit AsymmetricHVectorError(const std::string& message)
      : ApolarError("asymmetric_h_vector", message) {}
};

// The point set lies in a hyperplane; interpolation of the target values
// is not well posed.
struct DegenerateError : ApolarError {
  explicit DegenerateError(const std::string& message)
      : ApolarError("degenerate", message) {}
};

// No linear form interpolates the target values d_i / c_i.
struct NoRecoveryError : ApolarError {
  explicit NoRecoveryError(const std::string& message)
      : ApolarError("no_recovery", message) {}
};

}  // namespace apolar
