/* SPDX-License-Identifier: Apache-2.0 */
// Shared test plumbing: independent oracles (fraction-free rank, map-backed
// polynomial arithmetic), a seeded deterministic RNG, and grid builders.
// The oracles share no code with the library paths they check.
#pragma once

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "apolar/matrix.hpp"
#include "apolar/polyring.hpp"
#include "apolar/rational.hpp"

namespace support {

using apolar::GradedPoly;
using apolar::Integer;
using apolar::Rational;
using apolar::RationalMatrix;
using apolar::Ring;

// ---- fraction-free rank oracle (Bareiss) ----

// Clears denominators row by row, then runs fraction-free elimination over
// the integers. Every division is checked exact.
inline int bareiss_rank(const RationalMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (int i = 0; i < rows; ++i) {
    Integer common = 1;
    for (int j = 0; j < cols; ++j) {
      const Integer den = m.at(i, j).get_den();
      common = lcm(common, den);
    }
    for (int j = 0; j < cols; ++j) {
      const Rational scaled = m.at(i, j) * Rational(common);
      if (scaled.get_den() != 1) {
        throw std::logic_error("bareiss_rank: denominator did not clear");
      }
      a[i][j] = scaled.get_num();
    }
  }

  Integer prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      continue;
    }
    std::swap(a[rank], a[pivot]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        Integer num = a[i][j] * a[rank][col] - a[i][col] * a[rank][j];
        Integer q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                    prev.get_mpz_t());
        if (rem != 0) {
          throw std::logic_error("bareiss_rank: inexact division");
        }
        a[i][j] = q;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// ---- map-backed polynomial oracle ----

// Sparse exponent-vector representation, arithmetic written naively.
using ExpMap = std::map<std::vector<int>, Rational>;

inline ExpMap em_from_poly(const GradedPoly& p) {
  ExpMap out;
  const auto basis = apolar::monomial_basis(p.n, p.degree);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (p.coeffs[i] != 0) {
      out[basis[i].exponents] = p.coeffs[i];
    }
  }
  return out;
}

inline GradedPoly em_to_poly(const ExpMap& em, Ring ring, int n, int degree) {
  GradedPoly p = GradedPoly::zero(ring, n, degree);
  for (const auto& [exps, c] : em) {
    p.coeffs[static_cast<std::size_t>(apolar::monomial_position(n, exps))] = c;
  }
  return p;
}

inline ExpMap em_mul(const ExpMap& a, const ExpMap& b) {
  ExpMap out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) {
        e[k] = ea[k] + eb[k];
      }
      out[e] += ca * cb;
    }
  }
  return out;
}

inline ExpMap em_linear(const std::vector<Rational>& coeffs) {
  ExpMap out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) {
      continue;
    }
    std::vector<int> e(coeffs.size(), 0);
    e[k] = 1;
    out[e] = coeffs[k];
  }
  return out;
}

inline ExpMap em_power(const ExpMap& base, int k, std::size_t width) {
  ExpMap out;
  out[std::vector<int>(width, 0)] = 1;
  for (int i = 0; i < k; ++i) {
    out = em_mul(out, base);
  }
  return out;
}

// d/dy_var, one step.
inline ExpMap em_diff(const ExpMap& g, std::size_t var) {
  ExpMap out;
  for (const auto& [exps, c] : g) {
    if (exps[var] == 0) {
      continue;
    }
    std::vector<int> e = exps;
    const int power = e[var];
    e[var] -= 1;
    out[e] += c * power;
  }
  return out;
}

// Contraction oracle: apply each monomial of f to g as iterated partials.
inline ExpMap em_contract(const ExpMap& f, const ExpMap& g) {
  ExpMap out;
  for (const auto& [fe, fc] : f) {
    ExpMap cur = g;
    for (std::size_t var = 0; var < fe.size(); ++var) {
      for (int step = 0; step < fe[var]; ++step) {
        cur = em_diff(cur, var);
      }
    }
    for (const auto& [ge, gc] : cur) {
      out[ge] += fc * gc;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

inline Rational em_eval(const ExpMap& f, const std::vector<Rational>& point) {
  Rational total = 0;
  for (const auto& [exps, c] : f) {
    Rational term = c;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      for (int step = 0; step < exps[k]; ++step) {
        term *= point[k];
      }
    }
    total += term;
  }
  return total;
}

// ---- deterministic RNG ----

// mt19937 with explicit modulo reduction: the stream is fixed by the
// standard, so derived values are identical on every platform.
class Rng {
 public:
  explicit Rng(unsigned seed) : engine_(seed) {}

  int uniform(int lo, int hi) {
    return lo + static_cast<int>(engine_() %
                                 static_cast<unsigned>(hi - lo + 1));
  }

  Rational rational(int lo, int hi) { return Rational(uniform(lo, hi)); }

  std::vector<Rational> vector(std::size_t len, int lo, int hi) {
    std::vector<Rational> out(len);
    for (auto& q : out) {
      q = rational(lo, hi);
    }
    return out;
  }

 private:
  std::mt19937 engine_;
};

// ---- grid builders ----

// Cartesian product of per-variable value lists, embedded in P^n with last
// coordinate 1: complete intersections, hence arithmetically Gorenstein.
inline std::vector<std::vector<Rational>> affine_grid(
    const std::vector<std::vector<Rational>>& axes) {
  std::vector<std::vector<Rational>> rows{{}};
  for (const auto& axis : axes) {
    std::vector<std::vector<Rational>> next;
    for (const auto& prefix : rows) {
      for (const auto& value : axis) {
        auto row = prefix;
        row.push_back(value);
        next.push_back(std::move(row));
      }
    }
    rows = std::move(next);
  }
  for (auto& row : rows) {
    row.push_back(Rational(1));
  }
  return rows;
}

}  // namespace support
