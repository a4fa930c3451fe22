#pragma once

// Text formats: rational-function expressions, system files, solution
// files, and printing of bounds.
//
// Expression grammar (precedence ^ > unary - > * / > + -):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 'x' | '(' expr ')'
//
// System file:
//   # comment
//   case: shift            (or: case: qshift q=<rational>)
//   n: <int>
//   <n lines of n comma-separated expressions>

#include <cctype>
#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "denbound/cw_bound.hpp"
#include "denbound/engine.hpp"
#include "denbound/errors.hpp"
#include "denbound/factor.hpp"
#include "denbound/matrix.hpp"
#include "denbound/rational_function.hpp"

namespace denbound {

namespace detail {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : s_(text) {}

  RationalFunction parse() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    RationalFunction r = expr();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_), pos_);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction r = term();
    for (;;) {
      if (accept('+'))
        r += term();
      else if (accept('-'))
        r -= term();
      else
        return r;
    }
  }

  RationalFunction term() {
    RationalFunction r = unary();
    for (;;) {
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError("division by zero at position " + std::to_string(at), at);
        r /= d;
      } else {
        return r;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    const std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    return base.pow(std::stol(digits));
  }

  RationalFunction primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (c == 'x') {
      ++pos_;
      return RationalFunction::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction::constant(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline std::string strip_comment(const std::string& line) {
  const auto h = line.find('#');
  return trim(h == std::string::npos ? line : line.substr(0, h));
}

/// Splits on top-level commas and parses each field.
inline std::vector<RationalFunction> parse_row(const std::string& line, std::size_t lineno) {
  std::vector<RationalFunction> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i < line.size() && line[i] == '(') ++depth;
    if (i < line.size() && line[i] == ')') --depth;
    if (i == line.size() || (line[i] == ',' && depth == 0)) {
      try {
        out.push_back(ExpressionParser(std::string_view(line).substr(start, i - start)).parse());
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(lineno) + ", field " + std::to_string(out.size() + 1) + ": " +
                             e.what(),
                         start + e.position());
      }
      start = i + 1;
    }
  }
  return out;
}

}  // namespace detail

inline RationalFunction parse_expression(std::string_view text) { return detail::ExpressionParser(text).parse(); }

inline RecurrenceSystem parse_system(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<DifferenceRing> ring;
  std::optional<std::size_t> n;
  std::vector<RationalFunction> entries;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::strip_comment(line);
    if (t.empty()) continue;
    if (!ring) {
      if (t.rfind("case:", 0) != 0) throw ParseError("line " + std::to_string(lineno) + ": expected 'case:'", 0);
      std::istringstream hs(t.substr(5));
      std::string kind;
      hs >> kind;
      if (kind == "shift") {
        ring = DifferenceRing::shift();
      } else if (kind == "qshift") {
        std::string q;
        hs >> q;
        if (q.rfind("q=", 0) != 0) throw ParseError("line " + std::to_string(lineno) + ": expected q=<rational>", 0);
        Rational qv;
        if (qv.set_str(q.substr(2), 10) != 0) throw ParseError("line " + std::to_string(lineno) + ": bad q", 0);
        qv.canonicalize();
        ring = DifferenceRing::qshift(qv);
      } else {
        throw ParseError("line " + std::to_string(lineno) + ": unknown case '" + kind + "'", 0);
      }
      continue;
    }
    if (!n) {
      if (t.rfind("n:", 0) != 0) throw ParseError("line " + std::to_string(lineno) + ": expected 'n:'", 0);
      const std::string v = detail::trim(t.substr(2));
      if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos || v.size() > 4 || std::stoul(v) == 0)
        throw ParseError("line " + std::to_string(lineno) + ": bad dimension", 0);
      n = std::stoul(v);
      continue;
    }
    if (rows == *n) throw ParseError("line " + std::to_string(lineno) + ": too many rows", 0);
    auto row = detail::parse_row(t, lineno);
    if (row.size() != *n)
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(*n) + " entries", 0);
    entries.insert(entries.end(), row.begin(), row.end());
    ++rows;
  }
  if (!ring || !n) throw ParseError("missing header", 0);
  if (rows != *n) throw ParseError("expected " + std::to_string(*n) + " rows, found " + std::to_string(rows), 0);
  return {RatFunMatrix(*n, *n, std::move(entries)), *ring};
}

inline RecurrenceSystem parse_system(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_system(in);
}

/// One comma-separated vector per non-comment line.
inline std::vector<RatFunVector> parse_solutions(std::istream& in) {
  std::vector<RatFunVector> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::strip_comment(line);
    if (!t.empty()) out.push_back(detail::parse_row(t, lineno));
  }
  return out;
}

inline std::vector<RatFunVector> parse_solutions(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_solutions(in);
}

namespace detail {

// A prime is printed bare when it is a single monic term ("x", "x^2").
inline std::string factor_text(const Polynomial& p, long e) {
  std::size_t terms = 0;
  for (const auto& c : p.coefficients()) terms += (c != 0);
  std::string s = to_string(p);
  if (terms > 1) s = "(" + s + ")";
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace detail

/// "unit*prod(prime)^e" with negative exponents moved under a '/'; the unit
/// is omitted when it is 1.
inline std::string to_factored_string(const FactoredElement& f) {
  std::vector<std::string> num, den;
  for (const auto& t : f.factors())
    (t.exponent > 0 ? num : den).push_back(detail::factor_text(t.prime, t.exponent > 0 ? t.exponent : -t.exponent));
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "*" : "") + v[i];
    return s;
  };
  std::string out;
  if (f.unit() != 1 || num.empty()) {
    out = to_string(f.unit());
    if (f.unit().get_den() != 1 || f.unit() < 0) out = "(" + out + ")";
    if (f.unit() == 1) out = "1";
    if (!num.empty()) out += "*";
  }
  out += join(num);
  if (!den.empty()) out += "/" + (den.size() == 1 ? den.front() : "(" + join(den) + ")");
  return out;
}

inline std::string to_string(const BoundEntry& e, bool factored = true) {
  if (e.zero) return "0";
  return factored ? to_factored_string(e.value) : to_string(e.as_rational_function());
}

/// The matrix in system-file layout, readable by parse_system.
inline std::string to_system_string(const RecurrenceSystem& sys) {
  std::ostringstream o;
  if (sys.ring.is_shift())
    o << "case: shift\n";
  else
    o << "case: qshift q=" << sys.ring.q().get_str() << "\n";
  o << "n: " << sys.n() << "\n";
  for (std::size_t i = 0; i < sys.n(); ++i) {
    for (std::size_t j = 0; j < sys.n(); ++j) o << (j ? ", " : "") << to_string(sys.M(i, j));
    o << "\n";
  }
  return o.str();
}

}  // namespace denbound
