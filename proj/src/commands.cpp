/* SPDX-License-Identifier: Apache-2.0 */
#include "apolar/commands.hpp"

#include <utility>

#include "apolar/apolarity.hpp"
#include "apolar/errors.hpp"
#include "apolar/gorenstein.hpp"
#include "apolar/points.hpp"

namespace apolar::cli {

namespace {

using ojson = nlohmann::ordered_json;

ojson rat_array(const std::vector<Rational>& v) {
  ojson out = ojson::array();
  for (const Rational& q : v) {
    out.push_back(to_string(q));
  }
  return out;
}

ojson point_array(const PointConfiguration& z) {
  ojson out = ojson::array();
  for (const ProjectivePoint& p : z.points()) {
    out.push_back(rat_array(p.coords));
  }
  return out;
}

ojson poly_json(const GradedPoly& p) {
  ojson out;
  out["degree"] = p.degree;
  out["coeffs"] = rat_array(p.coeffs);
  out["pretty"] = format_poly(p);
  return out;
}

ojson hilbert_json(const HilbertData& h) {
  ojson out;
  out["hf"] = h.hf;
  out["h_vector"] = h.h_vector;
  out["regularity"] = h.regularity;
  out["socle_degree"] = h.socle_degree;
  out["degenerate"] = h.degenerate;
  return out;
}

ojson gorenstein_json(const GorensteinReport& g) {
  ojson out;
  out["symmetric"] = g.symmetric;
  out["cayley_bacharach"] = g.cayley_bacharach;
  out["arithmetically_gorenstein"] = g.arithmetically_gorenstein;
  if (g.failing_subset) {
    out["failing_point"] = *g.failing_subset;
  }
  return out;
}

ojson per_degree_json(const std::vector<DegreeComparison>& rows) {
  ojson out = ojson::array();
  for (const DegreeComparison& row : rows) {
    ojson entry;
    entry["degree"] = row.degree;
    entry["ideal_dim"] = row.ideal_dim;
    entry["annihilator_dim"] = row.annihilator_dim;
    entry["equal"] = row.equal;
    out.push_back(std::move(entry));
  }
  return out;
}

ojson error_json(const ApolarError& e) {
  ojson out;
  out["code"] = e.code();
  out["message"] = e.what();
  return out;
}

int exit_for(const ApolarError& e) {
  return e.code() == "input" ? 2 : 1;
}

PointConfiguration config_from(const InputDocument& doc) {
  if (!doc.points) {
    throw InputError("this command requires \"points\"");
  }
  std::vector<ProjectivePoint> pts;
  pts.reserve(doc.points->size());
  for (const auto& coords : *doc.points) {
    pts.push_back(ProjectivePoint::from_coords(coords));
  }
  return PointConfiguration(doc.n, std::move(pts));
}

LinearFormR ell_from(const InputDocument& doc) {
  if (!doc.ell) {
    throw InputError("this command requires \"ell\"");
  }
  bool nonzero = false;
  for (const Rational& q : *doc.ell) {
    if (q != 0) {
      nonzero = true;
      break;
    }
  }
  if (!nonzero) {
    throw InputError("ell: must be a nonzero linear form");
  }
  return LinearFormR{*doc.ell};
}

std::vector<std::pair<Rational, LinearFormS>> terms_from(
    const InputDocument& doc) {
  if (!doc.terms || !doc.r) {
    throw InputError("this command requires \"terms\" and \"r\"");
  }
  std::vector<std::pair<Rational, LinearFormS>> terms;
  terms.reserve(doc.terms->size());
  for (const TermInput& t : *doc.terms) {
    terms.emplace_back(t.c, LinearFormS{t.form});
  }
  return terms;
}

ojson terms_json(const std::vector<Rational>& c,
                 const std::vector<LinearFormS>& forms) {
  ojson out = ojson::array();
  for (std::size_t i = 0; i < forms.size(); ++i) {
    ojson entry;
    entry["c"] = to_string(c[i]);
    entry["L"] = rat_array(forms[i].coeffs);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

CommandResult run_check(const InputDocument& doc) {
  ojson report;
  report["command"] = "check";
  report["n"] = doc.n;
  try {
    const PointConfiguration z = config_from(doc);
    report["m"] = z.size();
    report["points"] = point_array(z);
    const GorensteinReport g = gorenstein_report(z);
    report["hilbert"] = hilbert_json(g.hilbert);
    report["gorenstein"] = gorenstein_json(g);
    report["verdict"] = g.arithmetically_gorenstein;
    if (!g.arithmetically_gorenstein) {
      report["reason"] = g.symmetric
                             ? "configuration fails the Cayley-Bacharach "
                               "property"
                             : "h-vector is not symmetric";
    }
    return {std::move(report), g.arithmetically_gorenstein ? 0 : 1};
  } catch (const ApolarError& e) {
    report["error"] = error_json(e);
    report["verdict"] = false;
    return {std::move(report), exit_for(e)};
  }
}

CommandResult run_inverse_system(const InputDocument& doc,
                                 bool allow_non_gorenstein) {
  ojson report;
  report["command"] = "inverse-system";
  report["n"] = doc.n;
  try {
    const PointConfiguration z = config_from(doc);
    const LinearFormR ell = ell_from(doc);
    report["m"] = z.size();
    report["points"] = point_array(z);
    report["ell"] = rat_array(ell.coeffs);

    const GorensteinReport g = gorenstein_report(z);
    report["hilbert"] = hilbert_json(g.hilbert);
    report["gorenstein"] = gorenstein_json(g);

    const ApolarityResult result =
        inverse_system_generator(z, ell, allow_non_gorenstein);

    ojson apolarity;
    apolarity["r"] = result.regularity;
    apolarity["c"] = rat_array(result.c);
    apolarity["d"] = rat_array(result.d);
    apolarity["terms"] = terms_json(result.c, result.duals);
    apolarity["F"] = poly_json(result.dual_socle_generator);
    report["apolarity"] = std::move(apolarity);

    ojson verification;
    verification["verified"] = result.verified;
    verification["per_degree"] = per_degree_json(result.per_degree);
    report["verification"] = std::move(verification);

    report["verdict"] = result.verified;
    return {std::move(report), result.verified ? 0 : 1};
  } catch (const ApolarError& e) {
    report["error"] = error_json(e);
    report["verdict"] = false;
    return {std::move(report), exit_for(e)};
  }
}

CommandResult run_recover(const InputDocument& doc) {
  ojson report;
  report["command"] = "recover";
  report["n"] = doc.n;
  try {
    const auto terms = terms_from(doc);
    report["m"] = terms.size();
    report["r"] = *doc.r;
    {
      ojson echo = ojson::array();
      for (const auto& [c, form] : terms) {
        ojson entry;
        entry["c"] = to_string(c);
        entry["L"] = rat_array(form.coeffs);
        echo.push_back(std::move(entry));
      }
      report["terms"] = std::move(echo);
    }

    const RecoveryResult result = recover_linear_form(terms, *doc.r);
    report["hilbert"] = hilbert_json(result.hilbert);

    ojson recovery;
    recovery["matrix_rank"] = result.matrix_rank;
    recovery["d"] = rat_array(result.d);
    if (result.ell) {
      ojson ell;
      ell["coeffs"] = rat_array(result.ell->coeffs);
      ell["pretty"] = format_poly(as_poly(*result.ell));
      recovery["ell"] = std::move(ell);
    }
    recovery["consistent"] = result.consistent;
    report["recovery"] = std::move(recovery);

    report["verdict"] = result.consistent;
    return {std::move(report), result.consistent ? 0 : 1};
  } catch (const ApolarError& e) {
    report["error"] = error_json(e);
    report["verdict"] = false;
    return {std::move(report), exit_for(e)};
  }
}

CommandResult run_annihilator(const InputDocument& doc,
                              std::optional<int> max_degree) {
  ojson report;
  report["command"] = "annihilator";
  report["n"] = doc.n;
  try {
    if (doc.dual_generator && doc.terms) {
      throw InputError("provide either \"F\" or \"terms\", not both");
    }
    GradedPoly f = GradedPoly::zero(Ring::S, doc.n, 0);
    if (doc.dual_generator) {
      f = *doc.dual_generator;
    } else if (doc.terms) {
      if (!doc.r) {
        throw InputError("\"terms\" requires \"r\"");
      }
      const auto terms = terms_from(doc);
      f = GradedPoly::zero(Ring::S, doc.n, *doc.r);
      ojson echo = ojson::array();
      for (const auto& [c, form] : terms) {
        f = add(f, scale(linear_power(form, *doc.r), c));
        ojson entry;
        entry["c"] = to_string(c);
        entry["L"] = rat_array(form.coeffs);
        echo.push_back(std::move(entry));
      }
      report["terms"] = std::move(echo);
    } else {
      throw InputError("this command requires \"F\" or \"terms\" with \"r\"");
    }
    if (f.is_zero()) {
      throw InputError("F: must be nonzero");
    }
    report["F"] = poly_json(f);

    const int top = max_degree.value_or(f.degree + 1);
    if (top < 0) {
      throw InputError("max-degree: must be non-negative");
    }
    report["max_degree"] = top;

    ojson pieces = ojson::array();
    for (int degree = 0; degree <= top; ++degree) {
      const std::vector<GradedPoly> basis = annihilator_piece(f, degree);
      ojson entry;
      entry["degree"] = degree;
      entry["dimension"] = basis.size();
      ojson elems = ojson::array();
      for (const GradedPoly& b : basis) {
        elems.push_back(poly_json(b));
      }
      entry["basis"] = std::move(elems);
      pieces.push_back(std::move(entry));
    }
    report["annihilator"] = std::move(pieces);

    report["verdict"] = true;
    return {std::move(report), 0};
  } catch (const ApolarError& e) {
    report["error"] = error_json(e);
    report["verdict"] = false;
    return {std::move(report), exit_for(e)};
  }
}

}  // namespace apolar::cli
