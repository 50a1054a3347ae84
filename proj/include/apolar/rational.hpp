/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <gmpxx.h>

#include <string>

namespace apolar {

// Exact scalars over the rationals. mpq_class values are kept canonical
// (denominator > 0, numerator and denominator coprime) by construction;
// every factory here canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den in lowest terms. Throws InputError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p" or "p/q" with arbitrary-precision decimal digits.
Rational parse_rational(const std::string& text);

// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace apolar
