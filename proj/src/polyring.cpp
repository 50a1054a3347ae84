/* SPDX-License-Identifier: Apache-2.0 */
#include "apolar/polyring.hpp"

#include <cassert>

#include "apolar/errors.hpp"

namespace apolar {

int Monomial::degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

long long binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long result = 1;
  for (int i = 1; i <= b; ++i) {
    result = result * (a - b + i) / i;
  }
  return result;
}

int basis_size(int n, int degree) {
  return static_cast<int>(binomial(n + degree, n));
}

namespace {

void enumerate(int n, int remaining, int position, std::vector<int>& current,
               std::vector<Monomial>& out) {
  if (position == n) {
    current[position] = remaining;
    out.push_back(Monomial{current});
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[position] = e;
    enumerate(n, remaining - e, position + 1, current, out);
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(int n, int degree) {
  assert(n >= 0 && degree >= 0);
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(basis_size(n, degree)));
  std::vector<int> current(n + 1, 0);
  enumerate(n, degree, 0, current, out);
  return out;
}

int monomial_position(int n, const std::vector<int>& exponents) {
  assert(static_cast<int>(exponents.size()) == n + 1);
  // Count monomials that precede the given one: at each position, those
  // whose exponent there is strictly larger, with the remaining degree
  // distributed over the later variables.
  int remaining = 0;
  for (int e : exponents) remaining += e;
  long long index = 0;
  for (int i = 0; i < n; ++i) {
    const int vars_after = n - i;  // variables i+1 .. n
    for (int k = remaining; k > exponents[i]; --k) {
      index += binomial(vars_after - 1 + remaining - k, vars_after - 1);
    }
    remaining -= exponents[i];
  }
  return static_cast<int>(index);
}

GradedPoly GradedPoly::zero(Ring ring, int n, int degree) {
  GradedPoly p;
  p.ring = ring;
  p.n = n;
  p.degree = degree;
  p.coeffs.assign(static_cast<std::size_t>(basis_size(n, degree)), Rational(0));
  return p;
}

GradedPoly GradedPoly::monomial_term(Ring ring, int n, const Monomial& m, const Rational& c) {
  GradedPoly p = zero(ring, n, m.degree());
  p.coeffs[monomial_position(n, m.exponents)] = c;
  return p;
}

GradedPoly GradedPoly::variable(Ring ring, int n, int k) {
  assert(k >= 0 && k <= n);
  std::vector<int> e(n + 1, 0);
  e[k] = 1;
  return monomial_term(ring, n, Monomial{e}, 1);
}

bool GradedPoly::is_zero() const {
  for (const auto& c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

GradedPoly add(const GradedPoly& f, const GradedPoly& g) {
  assert(f.ring == g.ring && f.n == g.n && f.degree == g.degree);
  GradedPoly out = f;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += g.coeffs[i];
  return out;
}

GradedPoly scale(const GradedPoly& f, const Rational& c) {
  GradedPoly out = f;
  for (auto& x : out.coeffs) x *= c;
  return out;
}

GradedPoly as_poly(const LinearFormR& ell) {
  const int n = static_cast<int>(ell.coeffs.size()) - 1;
  GradedPoly p = GradedPoly::zero(Ring::R, n, 1);
  p.coeffs = ell.coeffs;
  return p;
}

GradedPoly as_poly(const LinearFormS& form) {
  const int n = static_cast<int>(form.coeffs.size()) - 1;
  GradedPoly p = GradedPoly::zero(Ring::S, n, 1);
  p.coeffs = form.coeffs;
  return p;
}

namespace {

// b * (b-1) * ... * (b-a+1)
Integer falling_factorial(int b, int a) {
  Integer result = 1;
  for (int i = 0; i < a; ++i) result *= (b - i);
  return result;
}

}  // namespace

GradedPoly contract(const GradedPoly& f, const GradedPoly& g) {
  assert(f.ring == Ring::R && g.ring == Ring::S && f.n == g.n);
  const int n = f.n;
  if (f.degree > g.degree) {
    return GradedPoly::zero(Ring::S, n, 0);
  }
  const int out_degree = g.degree - f.degree;
  GradedPoly out = GradedPoly::zero(Ring::S, n, out_degree);

  const auto f_basis = monomial_basis(n, f.degree);
  const auto g_basis = monomial_basis(n, g.degree);
  std::vector<int> gamma(n + 1);
  for (std::size_t a = 0; a < f_basis.size(); ++a) {
    if (f.coeffs[a] == 0) continue;
    const auto& alpha = f_basis[a].exponents;
    for (std::size_t b = 0; b < g_basis.size(); ++b) {
      if (g.coeffs[b] == 0) continue;
      const auto& beta = g_basis[b].exponents;
      bool divides = true;
      for (int i = 0; i <= n; ++i) {
        if (beta[i] < alpha[i]) {
          divides = false;
          break;
        }
      }
      if (!divides) continue;
      Integer factor = 1;
      for (int i = 0; i <= n; ++i) {
        gamma[i] = beta[i] - alpha[i];
        factor *= falling_factorial(beta[i], alpha[i]);
      }
      out.coeffs[monomial_position(n, gamma)] += f.coeffs[a] * g.coeffs[b] * Rational(factor);
    }
  }
  return out;
}

GradedPoly contract(const LinearFormR& ell, const GradedPoly& g) {
  return contract(as_poly(ell), g);
}

GradedPoly linear_power(const LinearFormS& form, int k) {
  assert(k >= 0);
  const int n = static_cast<int>(form.coeffs.size()) - 1;
  GradedPoly out = GradedPoly::zero(Ring::S, n, k);
  const auto basis = monomial_basis(n, k);
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const auto& beta = basis[idx].exponents;
    // multinomial coefficient k! / prod(beta_i!)
    Integer multinomial = 1;
    int used = 0;
    for (int i = 0; i <= n; ++i) {
      for (int j = 1; j <= beta[i]; ++j) {
        multinomial = multinomial * (used + j) / j;
      }
      used += beta[i];
    }
    Rational coeff(multinomial);
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j < beta[i]; ++j) coeff *= form.coeffs[i];
    }
    out.coeffs[idx] = coeff;
  }
  return out;
}

Rational evaluate(const GradedPoly& f, const std::vector<Rational>& point) {
  assert(static_cast<int>(point.size()) == f.n + 1);
  const auto basis = monomial_basis(f.n, f.degree);
  Rational total = 0;
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    if (f.coeffs[idx] == 0) continue;
    Rational term = f.coeffs[idx];
    const auto& e = basis[idx].exponents;
    for (int i = 0; i <= f.n; ++i) {
      for (int j = 0; j < e[i]; ++j) term *= point[i];
    }
    total += term;
  }
  return total;
}

Rational evaluate(const LinearFormR& ell, const std::vector<Rational>& point) {
  assert(ell.coeffs.size() == point.size());
  Rational total = 0;
  for (std::size_t i = 0; i < point.size(); ++i) total += ell.coeffs[i] * point[i];
  return total;
}

GradedPoly multiply_monomial(const GradedPoly& f, const Monomial& m) {
  const int n = f.n;
  assert(static_cast<int>(m.exponents.size()) == n + 1);
  GradedPoly out = GradedPoly::zero(f.ring, n, f.degree + m.degree());
  const auto basis = monomial_basis(n, f.degree);
  std::vector<int> shifted(n + 1);
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    if (f.coeffs[idx] == 0) continue;
    for (int i = 0; i <= n; ++i) shifted[i] = basis[idx].exponents[i] + m.exponents[i];
    out.coeffs[monomial_position(n, shifted)] += f.coeffs[idx];
  }
  return out;
}

}  // namespace apolar
