/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

// Two graded polynomial rings in n+1 variables over Q: R in the x-variables
// (differential operators) and S in the y-variables (forms). R acts on S by
// partial differentiation, extended bilinearly.
enum class Ring { R, S };

struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  bool operator==(const Monomial& other) const = default;
};

long long binomial(int a, int b);

// Number of degree-d monomials in n+1 variables: C(n+d, n).
int basis_size(int n, int degree);

// All degree-d monomials in n+1 variables, graded-lex with x0 > ... > xn.
// The order is part of the serialization contract.
std::vector<Monomial> monomial_basis(int n, int degree);

// Index of an exponent vector within monomial_basis(n, sum(exponents)).
int monomial_position(int n, const std::vector<int>& exponents);

// Homogeneous polynomial of one degree, stored densely over the canonical
// monomial basis. The zero polynomial of each degree is representable.
struct GradedPoly {
  Ring ring = Ring::R;
  int n = 0;  // ambient projective dimension: n+1 variables
  int degree = 0;
  std::vector<Rational> coeffs;

  static GradedPoly zero(Ring ring, int n, int degree);
  static GradedPoly monomial_term(Ring ring, int n, const Monomial& m, const Rational& c);
  static GradedPoly variable(Ring ring, int n, int k);

  bool is_zero() const;
  bool operator==(const GradedPoly& other) const = default;
};

GradedPoly add(const GradedPoly& f, const GradedPoly& g);
GradedPoly scale(const GradedPoly& f, const Rational& c);

// Linear forms in S (duals of points) and in R (the reducing form).
struct LinearFormS {
  std::vector<Rational> coeffs;
  bool operator==(const LinearFormS& other) const = default;
};

struct LinearFormR {
  std::vector<Rational> coeffs;
  bool operator==(const LinearFormR& other) const = default;
};

GradedPoly as_poly(const LinearFormR& ell);
GradedPoly as_poly(const LinearFormS& form);

// Apolarity contraction f o G: iterated partial differentiation of G by the
// monomials of f. Degree of the result is deg G - deg f; when deg f exceeds
// deg G the result is the zero polynomial of degree 0.
GradedPoly contract(const GradedPoly& f, const GradedPoly& g);
GradedPoly contract(const LinearFormR& ell, const GradedPoly& g);

// Multinomial expansion of L^k.
GradedPoly linear_power(const LinearFormS& form, int k);

Rational evaluate(const GradedPoly& f, const std::vector<Rational>& point);
Rational evaluate(const LinearFormR& ell, const std::vector<Rational>& point);

// f * x^m, degree deg f + deg m.
GradedPoly multiply_monomial(const GradedPoly& f, const Monomial& m);

}  // namespace apolar
