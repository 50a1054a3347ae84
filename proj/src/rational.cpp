/* SPDX-License-Identifier: Apache-2.0 */
#include "apolar/rational.hpp"

#include <cctype>

#include "apolar/errors.hpp"

namespace apolar {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw InputError("rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t");
  std::size_t last = text.find_last_not_of(" \t");
  if (first == std::string::npos) {
    throw InputError("empty rational literal");
  }
  std::string body = text.substr(first, last - first + 1);

  std::size_t slash = body.find('/');
  std::string num_part = slash == std::string::npos ? body : body.substr(0, slash);
  std::string den_part = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!is_integer_literal(num_part) || !is_integer_literal(den_part)) {
    throw InputError("malformed rational literal: \"" + text + "\"");
  }
  return make_rational(Integer(num_part), Integer(den_part));
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

}  // namespace apolar
