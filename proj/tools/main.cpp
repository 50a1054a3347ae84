/* SPDX-License-Identifier: Apache-2.0 */
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "apolar/commands.hpp"
#include "apolar/errors.hpp"
#include "apolar/io.hpp"
#include "apolar/trace.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty()) {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) {
    throw apolar::InputError("cannot open input file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int emit(const apolar::cli::CommandResult& result, const std::string& path) {
  const std::string text = result.report.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(path);
    if (!out) {
      std::cerr << "error: cannot open output file: " << path << "\n";
      return 2;
    }
    out << text;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Macaulay inverse systems of Artinian reductions of arithmetically "
      "Gorenstein point sets"};
  app.require_subcommand(1);

  std::string input_path;
  std::string output_path;
  bool trace = false;
  app.add_option("--input", input_path,
                 "Input JSON file (default: read stdin)");
  app.add_option("--output", output_path,
                 "Output JSON file (default: write stdout)");
  app.add_flag("--trace", trace,
               "Dump intermediate matrices to stderr");

  CLI::App* check = app.add_subcommand(
      "check", "Decide whether the points are arithmetically Gorenstein");

  bool allow_non_gorenstein = false;
  CLI::App* inverse = app.add_subcommand(
      "inverse-system",
      "Construct the dual socle generator F for the reduction by ell");
  inverse->add_flag("--allow-non-gorenstein", allow_non_gorenstein,
                    "Attempt the construction even if the check fails");

  CLI::App* recover = app.add_subcommand(
      "recover", "Recover the reducing linear form from F = sum c_i L_i^r");

  std::optional<int> max_degree;
  CLI::App* annihilator = app.add_subcommand(
      "annihilator", "Per-degree bases of Ann(F) up to a degree bound");
  annihilator->add_option("--max-degree", max_degree,
                          "Largest degree to report (default: deg F + 1)");

  // The shared flags may appear before or after the subcommand name.
  for (CLI::App* sub : {check, inverse, recover, annihilator}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  if (trace) {
    apolar::trace::set_sink(&std::cerr);
  }

  apolar::InputDocument doc;
  try {
    doc = apolar::parse_input(read_input(input_path));
  } catch (const apolar::ApolarError& e) {
    nlohmann::ordered_json report;
    report["error"] = {{"code", e.code()}, {"message", e.what()}};
    report["verdict"] = false;
    apolar::cli::CommandResult failed{std::move(report), 2};
    return emit(failed, output_path);
  }

  apolar::cli::CommandResult result;
  if (check->parsed()) {
    result = apolar::cli::run_check(doc);
  } else if (inverse->parsed()) {
    result = apolar::cli::run_inverse_system(doc, allow_non_gorenstein);
  } else if (recover->parsed()) {
    result = apolar::cli::run_recover(doc);
  } else {
    result = apolar::cli::run_annihilator(doc, max_degree);
  }
  return emit(result, output_path);
}
