/* SPDX-License-Identifier: Apache-2.0 */
#include "apolar/io.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "json.hpp"

#include "apolar/errors.hpp"

namespace apolar {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (value.is_number_integer()) {
    // dump() preserves the full decimal text of a JSON integer.
    return Rational(Integer(value.dump()));
  }
  if (value.is_number_float()) {
    throw InputError(where +
                     ": floating-point numbers are not accepted; "
                     "write rationals as \"p/q\" strings");
  }
  throw InputError(where + ": expected a rational (integer or \"p/q\")");
}

std::vector<Rational> rational_vector(const json& value, std::size_t expect,
                                      const std::string& where) {
  if (!value.is_array()) {
    throw InputError(where + ": expected an array");
  }
  if (value.size() != expect) {
    throw InputError(where + ": expected " + std::to_string(expect) +
                     " entries, got " + std::to_string(value.size()));
  }
  std::vector<Rational> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(
        rational_from_json(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

int int_from_json(const json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    throw InputError(where + ": expected an integer");
  }
  return value.get<int>();
}

// ---- polynomial text scanner ----

enum class TokKind { Number, Var, Plus, Minus, Star, Caret, Slash, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;  // Number: digits
  int index = -1;    // Var: variable index
  char letter = 0;   // Var: 'x' or 'y'
};

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ >= text_.size()) {
      current_ = Token{};
      return;
    }
    const char ch = text_[pos_];
    switch (ch) {
      case '+': current_ = {TokKind::Plus, "+"}; ++pos_; return;
      case '-': current_ = {TokKind::Minus, "-"}; ++pos_; return;
      case '*': current_ = {TokKind::Star, "*"}; ++pos_; return;
      case '^': current_ = {TokKind::Caret, "^"}; ++pos_; return;
      case '/': current_ = {TokKind::Slash, "/"}; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      current_ = {TokKind::Number, text_.substr(start, pos_ - start)};
      return;
    }
    if (ch == 'x' || ch == 'y') {
      std::size_t start = pos_ + 1;
      std::size_t end = start;
      while (end < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[end]))) {
        ++end;
      }
      if (end == start) {
        throw InputError("polynomial: variable '" + std::string(1, ch) +
                         "' must carry an index, e.g. " + ch + "0");
      }
      Token t;
      t.kind = TokKind::Var;
      t.letter = ch;
      t.index = std::stoi(text_.substr(start, end - start));
      pos_ = end;
      current_ = t;
      return;
    }
    throw InputError(std::string("polynomial: unexpected character '") + ch +
                     "'");
  }

  std::string text_;
  std::size_t pos_ = 0;
  Token current_;
};

}  // namespace

InputDocument parse_input(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw InputError("input must be a JSON object");
  }
  if (!doc.contains("n")) {
    throw InputError("missing required field \"n\"");
  }

  InputDocument in;
  in.n = int_from_json(doc["n"], "n");
  if (in.n < 1) {
    throw InputError("n: must be at least 1");
  }
  const std::size_t width = static_cast<std::size_t>(in.n) + 1;

  if (doc.contains("points")) {
    const json& pts = doc["points"];
    if (!pts.is_array() || pts.empty()) {
      throw InputError("points: expected a non-empty array");
    }
    std::vector<std::vector<Rational>> rows;
    rows.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      rows.push_back(rational_vector(pts[i], width,
                                     "points[" + std::to_string(i) + "]"));
    }
    in.points = std::move(rows);
  }

  if (doc.contains("ell")) {
    in.ell = rational_vector(doc["ell"], width, "ell");
  }

  if (doc.contains("terms")) {
    const json& ts = doc["terms"];
    if (!ts.is_array() || ts.empty()) {
      throw InputError("terms: expected a non-empty array");
    }
    std::vector<TermInput> terms;
    terms.reserve(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const std::string where = "terms[" + std::to_string(i) + "]";
      const json& t = ts[i];
      if (!t.is_object() || !t.contains("c") || !t.contains("L")) {
        throw InputError(where + ": expected an object with \"c\" and \"L\"");
      }
      TermInput term;
      term.c = rational_from_json(t["c"], where + ".c");
      term.form = rational_vector(t["L"], width, where + ".L");
      terms.push_back(std::move(term));
    }
    in.terms = std::move(terms);
  }

  if (doc.contains("r")) {
    in.r = int_from_json(doc["r"], "r");
    if (*in.r < 0) {
      throw InputError("r: must be non-negative");
    }
  }

  if (doc.contains("F")) {
    const json& f = doc["F"];
    if (f.is_string()) {
      GradedPoly p = parse_poly_text(f.get<std::string>(), in.n);
      if (p.ring != Ring::S) {
        throw InputError("F: must be written in the dual variables y0..yn");
      }
      in.dual_generator = std::move(p);
    } else if (f.is_object()) {
      if (!f.contains("degree") || !f.contains("coeffs")) {
        throw InputError("F: expected fields \"degree\" and \"coeffs\"");
      }
      const int degree = int_from_json(f["degree"], "F.degree");
      if (degree < 0) {
        throw InputError("F.degree: must be non-negative");
      }
      GradedPoly p = GradedPoly::zero(Ring::S, in.n, degree);
      p.coeffs = rational_vector(
          f["coeffs"], static_cast<std::size_t>(basis_size(in.n, degree)),
          "F.coeffs");
      in.dual_generator = std::move(p);
    } else {
      throw InputError("F: expected a string or a {degree, coeffs} object");
    }
  }

  return in;
}

std::string format_poly(const GradedPoly& p) {
  const char letter = p.ring == Ring::R ? 'x' : 'y';
  const auto basis = monomial_basis(p.n, p.degree);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Rational& c = p.coeffs[i];
    if (c == 0) {
      continue;
    }
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) {
        out << '-';
      }
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }

    std::string vars;
    for (int v = 0; v <= p.n; ++v) {
      const int e = basis[i].exponents[v];
      if (e == 0) {
        continue;
      }
      if (!vars.empty()) {
        vars += '*';
      }
      vars += letter;
      vars += std::to_string(v);
      if (e > 1) {
        vars += '^' + std::to_string(e);
      }
    }
    if (vars.empty()) {
      out << to_string(mag);
    } else {
      if (mag != 1) {
        out << to_string(mag) << '*';
      }
      out << vars;
    }
  }
  if (first) {
    return "0";
  }
  return out.str();
}

GradedPoly parse_poly_text(const std::string& text, int n) {
  Scanner scan(text);
  std::map<std::vector<int>, Rational> acc;
  char letter = 0;
  int degree = -1;

  bool negative = false;
  if (scan.peek().kind == TokKind::Minus) {
    scan.take();
    negative = true;
  } else if (scan.peek().kind == TokKind::Plus) {
    scan.take();
  }

  while (true) {
    // One term: factors joined by '*'.
    Rational coef = 1;
    std::vector<int> exps(static_cast<std::size_t>(n) + 1, 0);
    bool saw_factor = false;
    while (true) {
      const Token t = scan.peek();
      if (t.kind == TokKind::Number) {
        scan.take();
        Rational value{Integer(t.text)};
        if (scan.peek().kind == TokKind::Slash) {
          scan.take();
          const Token den = scan.take();
          if (den.kind != TokKind::Number) {
            throw InputError("polynomial: expected a denominator after '/'");
          }
          value = make_rational(Integer(t.text), Integer(den.text));
        }
        coef *= value;
        saw_factor = true;
      } else if (t.kind == TokKind::Var) {
        scan.take();
        if (letter == 0) {
          letter = t.letter;
        } else if (letter != t.letter) {
          throw InputError("polynomial: mixes x- and y-variables");
        }
        if (t.index < 0 || t.index > n) {
          throw InputError("polynomial: variable index " +
                           std::to_string(t.index) + " out of range for n=" +
                           std::to_string(n));
        }
        int e = 1;
        if (scan.peek().kind == TokKind::Caret) {
          scan.take();
          const Token ex = scan.take();
          if (ex.kind != TokKind::Number) {
            throw InputError("polynomial: expected an exponent after '^'");
          }
          e = std::stoi(ex.text);
        }
        exps[static_cast<std::size_t>(t.index)] += e;
        saw_factor = true;
      } else {
        break;
      }
      if (scan.peek().kind == TokKind::Star) {
        scan.take();
        continue;
      }
      break;
    }
    if (!saw_factor) {
      throw InputError("polynomial: expected a term");
    }

    int term_degree = 0;
    for (int e : exps) {
      term_degree += e;
    }
    if (degree < 0) {
      degree = term_degree;
    } else if (degree != term_degree) {
      throw InputError("polynomial: not homogeneous (degrees " +
                       std::to_string(degree) + " and " +
                       std::to_string(term_degree) + ")");
    }
    acc[exps] += negative ? Rational(-coef) : coef;

    const Token sep = scan.peek();
    if (sep.kind == TokKind::End) {
      break;
    }
    if (sep.kind == TokKind::Plus) {
      scan.take();
      negative = false;
    } else if (sep.kind == TokKind::Minus) {
      scan.take();
      negative = true;
    } else {
      throw InputError("polynomial: expected '+' or '-' between terms");
    }
  }

  const Ring ring = letter == 'x' ? Ring::R : Ring::S;
  GradedPoly p = GradedPoly::zero(ring, n, degree);
  for (const auto& [exps, c] : acc) {
    p.coeffs[static_cast<std::size_t>(monomial_position(n, exps))] += c;
  }
  return p;
}

}  // namespace apolar
