/* SPDX-License-Identifier: Apache-2.0 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "apolar/commands.hpp"
#include "apolar/io.hpp"

#include "apolar/errors.hpp"

#include "support.hpp"

using apolar::GradedPoly;
using apolar::InputDocument;
using apolar::Rational;
using apolar::Ring;

namespace {

const char* square_json = R"({
  "n": 2,
  "points": [[0, 0, 1], [1, 1, 1], [1, 0, 1], [0, 1, 1]],
  "ell": [0, 0, 1]
})";

}  // namespace

TEST_CASE("documents parse with integer and string rationals") {
  const InputDocument doc = apolar::parse_input(R"({
    "n": 1,
    "points": [["1/2", 1], [-2, "3"]],
    "ell": ["-4/6", 1],
    "r": 3
  })");
  CHECK(doc.n == 1);
  REQUIRE(doc.points.has_value());
  CHECK((*doc.points)[0] == std::vector<Rational>{Rational(1, 2), 1});
  CHECK((*doc.points)[1] == std::vector<Rational>{-2, 3});
  REQUIRE(doc.ell.has_value());
  CHECK((*doc.ell)[0] == Rational(-2, 3));
  CHECK(doc.r == 3);
  CHECK_FALSE(doc.terms.has_value());
  CHECK_FALSE(doc.dual_generator.has_value());
}

TEST_CASE("documents reject malformed input") {
  CHECK_THROWS_AS(apolar::parse_input("not json"), apolar::InputError);
  CHECK_THROWS_AS(apolar::parse_input("[1,2]"), apolar::InputError);
  CHECK_THROWS_AS(apolar::parse_input(R"({"points": []})"), apolar::InputError);
  CHECK_THROWS_AS(apolar::parse_input(R"({"n": 0})"), apolar::InputError);
  // Wrong row width.
  CHECK_THROWS_AS(apolar::parse_input(R"({"n": 2, "points": [[1, 2]]})"),
                  apolar::InputError);
  // Floats are not rationals.
  CHECK_THROWS_AS(apolar::parse_input(R"({"n": 1, "ell": [0.5, 1]})"),
                  apolar::InputError);
  // Zero denominator.
  CHECK_THROWS_AS(apolar::parse_input(R"({"n": 1, "ell": ["1/0", 1]})"),
                  apolar::InputError);
  // Terms must carry both fields.
  CHECK_THROWS_AS(apolar::parse_input(R"({"n": 1, "terms": [{"c": 1}]})"),
                  apolar::InputError);
  CHECK_THROWS_AS(apolar::parse_input(R"({"n": 1, "r": -1})"),
                  apolar::InputError);
}

TEST_CASE("F accepts text and structured forms") {
  const InputDocument text = apolar::parse_input(R"({"n": 2, "F": "2*y0*y1"})");
  REQUIRE(text.dual_generator.has_value());
  CHECK(text.dual_generator->degree == 2);
  CHECK(text.dual_generator->coeffs ==
        std::vector<Rational>{0, 2, 0, 0, 0, 0});

  const InputDocument structured = apolar::parse_input(
      R"({"n": 2, "F": {"degree": 2, "coeffs": [0, 2, 0, 0, 0, 0]}})");
  CHECK(structured.dual_generator == text.dual_generator);

  // x-side text is not a dual generator.
  CHECK_THROWS_AS(apolar::parse_input(R"({"n": 2, "F": "x0*x1"})"),
                  apolar::InputError);
  // Wrong coefficient count.
  CHECK_THROWS_AS(
      apolar::parse_input(R"({"n": 2, "F": {"degree": 2, "coeffs": [1]}})"),
      apolar::InputError);
}

TEST_CASE("polynomial formatting") {
  GradedPoly f = GradedPoly::zero(Ring::S, 2, 2);
  f.coeffs[1] = 2;
  CHECK(apolar::format_poly(f) == "2*y0*y1");

  GradedPoly g = GradedPoly::zero(Ring::S, 2, 2);
  g.coeffs[0] = -1;
  g.coeffs[4] = Rational(1, 2);
  g.coeffs[5] = 1;
  CHECK(apolar::format_poly(g) == "-y0^2 + 1/2*y1*y2 + y2^2");

  CHECK(apolar::format_poly(GradedPoly::zero(Ring::R, 2, 3)) == "0");

  GradedPoly constant = GradedPoly::zero(Ring::S, 1, 0);
  constant.coeffs[0] = -3;
  CHECK(apolar::format_poly(constant) == "-3");

  CHECK(apolar::format_poly(GradedPoly::variable(Ring::R, 2, 2)) == "x2");
}

TEST_CASE("polynomial parsing") {
  const GradedPoly f = apolar::parse_poly_text("2*y0*y1", 2);
  CHECK(f.ring == Ring::S);
  CHECK(f.degree == 2);
  CHECK(f.coeffs == std::vector<Rational>{0, 2, 0, 0, 0, 0});

  const GradedPoly g = apolar::parse_poly_text("-x0^2 + 3/2*x1*x2 - x2^2", 2);
  CHECK(g.ring == Ring::R);
  CHECK(g.coeffs ==
        std::vector<Rational>{-1, 0, 0, 0, Rational(3, 2), -1});

  // Repeated monomials accumulate; cancelling terms are allowed.
  CHECK(apolar::parse_poly_text("y0 + y0 - y1", 1).coeffs ==
        std::vector<Rational>{2, -1});

  CHECK_THROWS_AS(apolar::parse_poly_text("y0 + y1^2", 1), apolar::InputError);
  CHECK_THROWS_AS(apolar::parse_poly_text("x0*y1", 1), apolar::InputError);
  CHECK_THROWS_AS(apolar::parse_poly_text("y5", 1), apolar::InputError);
  CHECK_THROWS_AS(apolar::parse_poly_text("", 1), apolar::InputError);
  CHECK_THROWS_AS(apolar::parse_poly_text("y0 +", 1), apolar::InputError);
  CHECK_THROWS_AS(apolar::parse_poly_text("2 ** y0", 1), apolar::InputError);
}

TEST_CASE("constants parse as dual-side polynomials") {
  // Without a variable letter the text form cannot name a ring; the dual
  // side is the convention since F is the only text-form consumer.
  const GradedPoly c = apolar::parse_poly_text("7/2", 2);
  CHECK(c.ring == Ring::S);
  CHECK(c.degree == 0);
  CHECK(c.coeffs == std::vector<Rational>{Rational(7, 2)});
}

TEST_CASE("formatting and parsing are mutually inverse") {
  // Degree >= 1: every printed term names its variables, so the text form
  // round-trips including the ring.
  support::Rng rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = rng.uniform(1, 3);
    const int d = rng.uniform(1, 4);
    GradedPoly f = GradedPoly::zero(trial % 2 == 0 ? Ring::R : Ring::S, n, d);
    for (auto& q : f.coeffs) {
      q = apolar::make_rational(apolar::Integer(rng.uniform(-6, 6)),
                                apolar::Integer(rng.uniform(1, 4)));
    }
    if (f.is_zero()) continue;  // "0" does not carry degree information
    const GradedPoly back = apolar::parse_poly_text(apolar::format_poly(f), n);
    CHECK(back == f);
  }
}

TEST_CASE("check command reports verdicts and exit codes") {
  const auto good = apolar::cli::run_check(apolar::parse_input(square_json));
  CHECK(good.exit_code == 0);
  CHECK(good.report["verdict"] == true);
  CHECK(good.report["gorenstein"]["arithmetically_gorenstein"] == true);
  CHECK(good.report["hilbert"]["h_vector"] == std::vector<int>{1, 2, 1});

  const auto bad = apolar::cli::run_check(apolar::parse_input(
      R"({"n": 2, "points": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.report["verdict"] == false);
  CHECK(bad.report["reason"] == "h-vector is not symmetric");

  const auto malformed = apolar::cli::run_check(apolar::parse_input(
      R"({"n": 2, "points": [[1, 0, 0], [1, 0, 0]]})"));
  CHECK(malformed.exit_code == 2);
  CHECK(malformed.report["error"]["code"] == "input");
}

TEST_CASE("inverse-system command emits the decomposition and the expansion") {
  const auto result =
      apolar::cli::run_inverse_system(apolar::parse_input(square_json), false);
  CHECK(result.exit_code == 0);
  const auto& report = result.report;
  CHECK(report["verdict"] == true);
  CHECK(report["apolarity"]["r"] == 2);
  CHECK(report["apolarity"]["c"] ==
        std::vector<std::string>{"1", "1", "-1", "-1"});
  CHECK(report["apolarity"]["F"]["pretty"] == "2*y0*y1");
  CHECK(report["verification"]["verified"] == true);

  // The emitted terms feed the recover command directly.
  nlohmann::ordered_json recover_input;
  recover_input["n"] = report["n"];
  recover_input["terms"] = report["apolarity"]["terms"];
  recover_input["r"] = report["apolarity"]["r"];
  const auto recovered =
      apolar::cli::run_recover(apolar::parse_input(recover_input.dump()));
  CHECK(recovered.exit_code == 0);
  CHECK(recovered.report["recovery"]["ell"]["pretty"] == "x2");
  CHECK(recovered.report["recovery"]["consistent"] == true);
}

TEST_CASE("inverse-system surfaces the Gorenstein failure") {
  const auto result = apolar::cli::run_inverse_system(
      apolar::parse_input(
          R"({"n": 2,
              "points": [[1, 0, 1], [0, 0, 1], [-1, 0, 1], [0, 1, 1]],
              "ell": [0, 0, 1]})"),
      false);
  CHECK(result.exit_code == 1);
  CHECK(result.report["error"]["code"] == "not_gorenstein");
  // The Hilbert and Gorenstein sections are retained alongside the error.
  CHECK(result.report["gorenstein"]["cayley_bacharach"] == false);
  CHECK(result.report["gorenstein"]["failing_point"] == 3);
}

TEST_CASE("recover command validates its inputs") {
  const auto dup = apolar::cli::run_recover(apolar::parse_input(
      R"({"n": 1, "r": 1,
          "terms": [{"c": 1, "L": [1, 1]}, {"c": 1, "L": [2, 2]}]})"));
  CHECK(dup.exit_code == 2);
  CHECK(dup.report["error"]["code"] == "input");
  CHECK(dup.report["error"]["message"] == "dual points not distinct");

  const auto missing = apolar::cli::run_recover(
      apolar::parse_input(R"({"n": 1, "r": 1})"));
  CHECK(missing.exit_code == 2);

  const auto no_recovery = apolar::cli::run_recover(apolar::parse_input(
      R"({"n": 2, "r": 2,
          "terms": [{"c": 1, "L": [0, 0, 1]}, {"c": 1, "L": [1, 1, 1]},
                    {"c": -1, "L": [1, 0, 1]}, {"c": -3, "L": [0, 1, 1]}]})"));
  CHECK(no_recovery.exit_code == 1);
  CHECK(no_recovery.report["error"]["code"] == "no_recovery");
}

TEST_CASE("annihilator command accepts F text, terms, or structured form") {
  const auto from_text = apolar::cli::run_annihilator(
      apolar::parse_input(R"({"n": 2, "F": "2*y0*y1"})"), std::nullopt);
  CHECK(from_text.exit_code == 0);
  REQUIRE(from_text.report["annihilator"].size() == 4);
  CHECK(from_text.report["annihilator"][0]["dimension"] == 0);
  CHECK(from_text.report["annihilator"][1]["dimension"] == 1);
  CHECK(from_text.report["annihilator"][1]["basis"][0]["pretty"] == "x2");
  CHECK(from_text.report["annihilator"][2]["dimension"] == 5);
  CHECK(from_text.report["annihilator"][3]["dimension"] == 10);

  const auto from_terms = apolar::cli::run_annihilator(
      apolar::parse_input(
          R"({"n": 2, "r": 2,
              "terms": [{"c": 1, "L": [0, 0, 1]}, {"c": 1, "L": [1, 1, 1]},
                        {"c": -1, "L": [1, 0, 1]}, {"c": -1, "L": [0, 1, 1]}]})"),
      std::nullopt);
  CHECK(from_terms.exit_code == 0);
  CHECK(from_terms.report["F"]["pretty"] == "2*y0*y1");

  const auto bounded = apolar::cli::run_annihilator(
      apolar::parse_input(R"({"n": 2, "F": "2*y0*y1"})"), 1);
  CHECK(bounded.report["annihilator"].size() == 2);

  const auto both = apolar::cli::run_annihilator(
      apolar::parse_input(
          R"({"n": 1, "F": "y0", "r": 1, "terms": [{"c": 1, "L": [1, 0]}]})"),
      std::nullopt);
  CHECK(both.exit_code == 2);

  const auto zero = apolar::cli::run_annihilator(
      apolar::parse_input(R"({"n": 1, "F": "y0 - y0"})"), std::nullopt);
  CHECK(zero.exit_code == 2);
}

TEST_CASE("reports are deterministic") {
  const auto doc = apolar::parse_input(square_json);
  const auto a = apolar::cli::run_inverse_system(doc, false);
  const auto b = apolar::cli::run_inverse_system(doc, false);
  CHECK(a.report.dump(2) == b.report.dump(2));
}
