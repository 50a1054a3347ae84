/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "apolar/io.hpp"

namespace apolar::cli {

// Exit codes: 0 = positive verdict, 1 = mathematically negative (not
// Gorenstein, verification failed, no recovery), 2 = malformed input.
struct CommandResult {
  nlohmann::ordered_json report;
  int exit_code = 0;
};

CommandResult run_check(const InputDocument& doc);
CommandResult run_inverse_system(const InputDocument& doc,
                                 bool allow_non_gorenstein);
CommandResult run_recover(const InputDocument& doc);
CommandResult run_annihilator(const InputDocument& doc,
                              std::optional<int> max_degree);

}  // namespace apolar::cli
