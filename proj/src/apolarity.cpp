/* SPDX-License-Identifier: Apache-2.0 */
#include "apolar/apolarity.hpp"

#include <cassert>
#include <string>

#include "apolar/errors.hpp"
#include "apolar/trace.hpp"

namespace apolar {

LinearFormS dual_form(const ProjectivePoint& p) {
  return LinearFormS{p.coords};
}

namespace {

// Rows = coefficient vectors of L_i^degree.
RationalMatrix power_matrix(const std::vector<LinearFormS>& forms, int degree) {
  assert(!forms.empty());
  const int n = static_cast<int>(forms[0].coeffs.size()) - 1;
  const int cols = basis_size(n, degree);
  RationalMatrix m(static_cast<int>(forms.size()), cols);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < static_cast<int>(forms.size()); ++i) {
    const GradedPoly p = linear_power(forms[i], degree);
    for (int j = 0; j < cols; ++j) m.at(i, j) = p.coeffs[j];
  }
  return m;
}

std::vector<Rational> scaled_kernel_vector(const RationalMatrix& columns_matrix,
                                           const char* context) {
  const auto kernel = nullspace(columns_matrix);
  if (kernel.size() != 1) {
    throw KernelDimensionError(std::string(context) + ": kernel dimension is " +
                               std::to_string(kernel.size()) + ", expected 1");
  }
  return kernel[0];
}

LinearFormR normalize_linear_form(std::vector<Rational> coeffs) {
  int lead = -1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) {
      lead = static_cast<int>(i);
      break;
    }
  }
  assert(lead >= 0);
  const Rational scale = coeffs[lead];
  for (auto& c : coeffs) c /= scale;
  return LinearFormR{std::move(coeffs)};
}

}  // namespace

int power_span_dimension(const std::vector<LinearFormS>& forms, int degree) {
  return rank(power_matrix(forms, degree));
}

DependenceCoefficients dependence_coefficients(const PointConfiguration& z,
                                               const LinearFormR& ell, int r) {
  const int m = z.size();
  std::vector<Rational> values(m);
  for (int i = 0; i < m; ++i) {
    values[i] = evaluate(ell, z.point(i).coords);
    if (values[i] == 0) {
      throw NonvanishingError("linear form vanishes at point " + std::to_string(i));
    }
  }

  if (r == 0) {
    // Single point: the dependence among zero-degree data is trivial.
    assert(m == 1);
    return {{Rational(1)}, {values[0]}};
  }

  // Columns are the coefficient vectors of ell(P_i) * L_i^{r-1}; a kernel
  // vector is exactly a choice of the c_i.
  std::vector<LinearFormS> duals;
  duals.reserve(m);
  for (const auto& p : z.points()) duals.push_back(dual_form(p));
  RationalMatrix columns = transpose(power_matrix(duals, r - 1));
  for (int i = 0; i < m; ++i) {
    for (int row = 0; row < columns.rows(); ++row) columns.at(row, i) *= values[i];
  }
  if (trace::enabled()) trace::matrix("dependence matrix", columns);

  std::vector<Rational> c = scaled_kernel_vector(columns, "dependence of scaled powers");
  for (int i = 0; i < m; ++i) {
    if (c[i] == 0) {
      throw ZeroCoefficientError("dependence coefficient " + std::to_string(i) +
                                 " is zero");
    }
  }
  const Rational lead = c[0];
  std::vector<Rational> d(m);
  for (int i = 0; i < m; ++i) {
    c[i] /= lead;
    d[i] = c[i] * values[i];
  }
  return {std::move(c), std::move(d)};
}

ApolarityResult inverse_system_generator(const PointConfiguration& z, const LinearFormR& ell,
                                         bool allow_non_gorenstein) {
  const GorensteinReport report = gorenstein_report(z);
  if (!report.arithmetically_gorenstein && !allow_non_gorenstein) {
    throw NotGorensteinError(report.symmetric
                                 ? "configuration fails the Cayley-Bacharach property"
                                 : "h-vector is not symmetric");
  }
  const int r = report.hilbert.regularity;

  auto dep = dependence_coefficients(z, ell, r);

  ApolarityResult result;
  result.c = std::move(dep.c);
  result.d = std::move(dep.d);
  result.regularity = r;
  result.duals.reserve(z.size());
  for (const auto& p : z.points()) result.duals.push_back(dual_form(p));

  GradedPoly f = GradedPoly::zero(Ring::S, z.n(), r);
  for (int i = 0; i < z.size(); ++i) {
    f = add(f, scale(linear_power(result.duals[i], r), result.c[i]));
  }
  result.dual_socle_generator = std::move(f);

  const VerificationResult ver = verify(z, ell, result.dual_socle_generator, r);
  result.verified = ver.verified;
  result.per_degree = ver.per_degree;
  return result;
}

std::vector<GradedPoly> annihilator_piece(const GradedPoly& f, int degree) {
  assert(f.ring == Ring::S && degree >= 0);
  const int n = f.n;
  const auto domain = monomial_basis(n, degree);
  const int dim_domain = static_cast<int>(domain.size());

  if (degree > f.degree) {
    // Everything of higher degree annihilates.
    std::vector<GradedPoly> out;
    out.reserve(dim_domain);
    for (const auto& mono : domain) {
      out.push_back(GradedPoly::monomial_term(Ring::R, n, mono, 1));
    }
    return out;
  }

  // Catalecticant of F at this degree: column k is x^alpha_k o F.
  const int dim_target = basis_size(n, f.degree - degree);
  RationalMatrix cat(dim_target, dim_domain);
#pragma omp parallel for schedule(static)
  for (int k = 0; k < dim_domain; ++k) {
    const GradedPoly image = contract(GradedPoly::monomial_term(Ring::R, n, domain[k], 1), f);
    for (int row = 0; row < dim_target; ++row) cat.at(row, k) = image.coeffs[row];
  }
  if (trace::enabled()) {
    trace::matrix("catalecticant matrix, degree " + std::to_string(degree), cat);
  }

  std::vector<GradedPoly> out;
  for (auto& v : nullspace(cat)) {
    GradedPoly p = GradedPoly::zero(Ring::R, n, degree);
    p.coeffs = std::move(v);
    out.push_back(std::move(p));
  }
  return out;
}

VerificationResult verify(const PointConfiguration& z, const LinearFormR& ell,
                          const GradedPoly& f, int r) {
  const int n = z.n();
  VerificationResult result;
  result.verified = true;

  for (int degree = 1; degree <= r + 1; ++degree) {
    // <I_Z, ell> in this degree: vanishing ideal piece plus ell times the
    // monomials one degree down.
    std::vector<std::vector<Rational>> ideal_rows;
    for (const auto& p : vanishing_ideal_piece(z, degree)) ideal_rows.push_back(p.coeffs);
    const GradedPoly ell_poly = as_poly(ell);
    for (const auto& mono : monomial_basis(n, degree - 1)) {
      ideal_rows.push_back(multiply_monomial(ell_poly, mono).coeffs);
    }

    std::vector<std::vector<Rational>> ann_rows;
    for (const auto& p : annihilator_piece(f, degree)) ann_rows.push_back(p.coeffs);

    const int cols = basis_size(n, degree);
    DegreeComparison row;
    row.degree = degree;
    row.ideal_dim = span_dimension(ideal_rows, cols);
    row.annihilator_dim = span_dimension(ann_rows, cols);
    row.equal = spans_equal(ideal_rows, ann_rows, cols);
    result.per_degree.push_back(row);
    if (!row.equal) result.verified = false;
  }

  // Socle conditions: both quotients one-dimensional in degree r, vanishing
  // in degree r+1.
  if (r >= 1) {
    const auto& at_r = result.per_degree[r - 1];
    const int full_r = basis_size(n, r);
    if (full_r - at_r.ideal_dim != 1 || full_r - at_r.annihilator_dim != 1) {
      result.verified = false;
    }
  }
  const auto& at_top = result.per_degree.back();
  const int full_top = basis_size(n, r + 1);
  if (at_top.ideal_dim != full_top || at_top.annihilator_dim != full_top) {
    result.verified = false;
  }
  return result;
}

RecoveryResult recover_linear_form(const std::vector<std::pair<Rational, LinearFormS>>& terms,
                                   int r) {
  if (terms.empty()) throw InputError("no terms given");
  if (r < 1) throw InputError("degree must be at least 1");
  const int m = static_cast<int>(terms.size());
  const int n = static_cast<int>(terms[0].second.coeffs.size()) - 1;

  std::vector<Rational> c(m);
  std::vector<LinearFormS> forms(m);
  for (int i = 0; i < m; ++i) {
    c[i] = terms[i].first;
    forms[i] = terms[i].second;
    if (static_cast<int>(forms[i].coeffs.size()) != n + 1) {
      throw InputError("linear forms of mixed lengths");
    }
    if (c[i] == 0) throw InputError("zero coefficient in term " + std::to_string(i));
  }

  // The points dual to the given forms; rejects duplicates (proportional
  // forms) and all-zero forms.
  std::vector<ProjectivePoint> points;
  points.reserve(m);
  for (const auto& form : forms) points.push_back(ProjectivePoint::from_coords(form.coeffs));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) throw InputError("dual points not distinct");
    }
  }
  PointConfiguration z(n, std::move(points));

  // Condition (1): the r-th powers are independent.
  const int span_r = power_span_dimension(forms, r);
  if (span_r != m) {
    throw ConditionOneError("power span dimension in degree " + std::to_string(r) + " is " +
                            std::to_string(span_r) + ", expected " + std::to_string(m));
  }

  // Condition (2): a one-dimensional dependence among the (r-1)-st powers
  // with every coefficient nonzero. Uses the forms exactly as given; the
  // d_i co-vary with any rescaling of the L_i.
  RationalMatrix columns = transpose(power_matrix(forms, r - 1));
  if (trace::enabled()) trace::matrix("power matrix, degree " + std::to_string(r - 1), columns);
  const auto kernel = nullspace(columns);
  if (kernel.size() != 1) {
    throw ConditionTwoError("kernel of the power matrix has dimension " +
                            std::to_string(kernel.size()) + ", expected 1");
  }
  const std::vector<Rational>& d = kernel[0];
  for (int i = 0; i < m; ++i) {
    if (d[i] == 0) {
      throw ConditionTwoError("dependence coefficient " + std::to_string(i) + " is zero");
    }
  }

  RecoveryResult result;
  result.d = d;
  result.hilbert = hilbert_data(z);
  if (!is_symmetric(result.hilbert.h_vector)) {
    throw AsymmetricHVectorError("h-vector of the dual points is not symmetric");
  }
  if (result.hilbert.degenerate) {
    throw DegenerateError("dual points lie in a hyperplane");
  }

  // Interpolation matrix: rows (a_i,0 ... a_i,n, -d_i/c_i). A linear form
  // with ell(P_i) = d_i / c_i exists iff the rank stays n+1.
  RationalMatrix interp(m, n + 2);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) interp.at(i, j) = forms[i].coeffs[j];
    interp.at(i, n + 1) = -d[i] / c[i];
  }
  if (trace::enabled()) trace::matrix("interpolation matrix", interp);

  const RrefResult red = rref(interp);
  result.matrix_rank = static_cast<int>(red.pivot_columns.size());
  if (result.matrix_rank != n + 1) {
    throw NoRecoveryError("interpolation matrix has rank " +
                          std::to_string(result.matrix_rank) + ", expected " +
                          std::to_string(n + 1));
  }
  const auto interp_kernel = detail::kernel_basis(red, n + 2);
  assert(interp_kernel.size() == 1);
  const auto& v = interp_kernel[0];
  if (v[n + 1] == 0) {
    throw NoRecoveryError("no linear form interpolates the target values");
  }
  std::vector<Rational> coeffs(n + 1);
  for (int j = 0; j <= n; ++j) coeffs[j] = v[j] / v[n + 1];
  result.ell = normalize_linear_form(std::move(coeffs));

  // Certify: ell(a_i) * c_i proportional to d_i with one common factor.
  Rational lambda = 0;
  bool consistent = true;
  for (int i = 0; i < m; ++i) {
    const Rational value = evaluate(LinearFormR{result.ell->coeffs}, forms[i].coeffs);
    const Rational ratio = value * c[i] / d[i];
    if (i == 0) {
      lambda = ratio;
    } else if (ratio != lambda) {
      consistent = false;
    }
  }
  result.consistent = consistent && lambda != 0;
  return result;
}

int derivative_span_dimension(const GradedPoly& f, int j) {
  assert(f.ring == Ring::S && j >= 0 && j <= f.degree);
  const int n = f.n;
  const int order = f.degree - j;
  const auto operators = monomial_basis(n, order);
  const int cols = basis_size(n, j);
  RationalMatrix m(static_cast<int>(operators.size()), cols);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < static_cast<int>(operators.size()); ++i) {
    const GradedPoly derivative =
        contract(GradedPoly::monomial_term(Ring::R, n, operators[i], 1), f);
    for (int col = 0; col < cols; ++col) m.at(i, col) = derivative.coeffs[col];
  }
  return rank(m);
}

}  // namespace apolar
