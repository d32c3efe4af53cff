#include "parabolica/text.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <vector>

#include "parabolica/errors.hpp"

namespace parabolica {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BivariatePoly parse() {
    skip_space();
    if (at_end()) fail("empty input");
    BivariatePoly p = expr();
    skip_space();
    if (!at_end()) {
      if (starts_atom()) fail("implicit multiplication is not allowed; use '*'");
      fail(std::string("unexpected character '") + peek() + "'");
    }
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

  bool starts_atom() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(' || c == '.';
  }

  BivariatePoly expr() {
    BivariatePoly acc = term();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      advance();
      BivariatePoly rhs = term();
      if (c == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
  }

  BivariatePoly term() {
    BivariatePoly acc = unary();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '*' && c != '/') {
        if (!at_end() && starts_atom()) fail("implicit multiplication is not allowed; use '*'");
        return acc;
      }
      const int line = line_, col = col_;
      advance();
      BivariatePoly rhs = unary();
      if (c == '*') {
        acc = acc * rhs;
      } else {
        if (!rhs.is_constant()) throw ParseError("divisor must be a constant", line, col);
        const Rational d = rhs.coefficient(0, 0);
        if (d == 0) throw ParseError("division by zero", line, col);
        acc *= Rational(1) / d;
      }
    }
  }

  BivariatePoly unary() {
    skip_space();
    const char c = peek();
    if (c == '+' || c == '-') {
      advance();
      BivariatePoly p = unary();
      return c == '-' ? -p : p;
    }
    return power();
  }

  BivariatePoly power() {
    BivariatePoly base = atom();
    skip_space();
    if (peek() != '^') return base;
    advance();
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a non-negative integer");
    unsigned long e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + static_cast<unsigned long>(peek() - '0');
      if (e > 1000) fail("exponent too large");
      advance();
    }
    skip_space();
    if (peek() == '^') fail("chained exponents are ambiguous; use parentheses");
    return pow(base, static_cast<unsigned>(e));
  }

  BivariatePoly atom() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (c == '(') {
      advance();
      BivariatePoly p = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      advance();
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const int line = line_, col = col_;
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
        name += peek();
        advance();
      }
      if (name == "x") return BivariatePoly::x();
      if (name == "y") return BivariatePoly::y();
      throw ParseError("unknown variable '" + name + "'", line, col);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  BivariatePoly number() {
    std::string digits;
    int frac = -1;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      if (peek() == '.') {
        if (frac >= 0) fail("malformed number");
        frac = 0;
      } else {
        digits += peek();
        if (frac >= 0) ++frac;
      }
      advance();
    }
    if (digits.empty()) fail("malformed number");
    Rational v(Integer(digits, 10));
    if (frac > 0) {
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac));
      v /= den;
    }
    v.canonicalize();
    return BivariatePoly::constant(v);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::string monomial_text(int i, int j) {
  std::string s;
  auto var = [&](char v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += v;
    if (e > 1) s += '^' + std::to_string(e);
  };
  var('x', i);
  var('y', j);
  return s;
}

}  // namespace

BivariatePoly parse_polynomial(std::string_view text) { return Parser(text).parse(); }

std::string to_canonical_string(const BivariatePoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<BivariatePoly::Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_text(e.first, e.second);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::string format_half(double v) {
  if (std::isfinite(v) && std::round(2.0 * v) == 2.0 * v && std::abs(v) < 1e9) {
    return to_string(Rational(static_cast<long>(2.0 * v), 2));
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace parabolica
