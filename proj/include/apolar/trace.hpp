/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <iosfwd>
#include <string>

#include "apolar/matrix.hpp"

namespace apolar::trace {

// Diagnostic sink for intermediate matrices (evaluation, dependence,
// interpolation, catalecticant). Off by default; the CLI points it at
// stderr under --trace. Emission is mutex-guarded.
void set_sink(std::ostream* sink);
bool enabled();
void matrix(const std::string& label, const RationalMatrix& m);

}  // namespace apolar::trace
