// Copyright 2026 The magicpovm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text form of cyclotomic numbers: a polynomial in z<n> with rational
// coefficients, e.g. "-1 - z3", "1/4", "3/2*z20^2 + z20^6". The printer emits
// increasing powers of the reduced basis, which the parser reads back exactly.

#ifndef MAGICPOVM_LITERAL_HPP
#define MAGICPOVM_LITERAL_HPP

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "magicpovm/cyclotomic.hpp"

namespace magicpovm {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

inline std::string to_string(const Cyclotomic& a) {
  if (a.is_zero()) return "0";
  const int n = a.conductor();
  std::string out;
  for (int i = 0; i < a.degree(); ++i) {
    Rational c = a.coeff(i);
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "z" + std::to_string(n);
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace detail {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : s_(text) {}

  Cyclotomic parse_all() {
    Cyclotomic v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse \"" + std::string(s_) + "\" at offset " +
                     std::to_string(pos_) + ": " + what);
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

  long integer_token() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  Cyclotomic expr() {
    skip();
    Cyclotomic acc;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Cyclotomic term() {
    Cyclotomic acc = power();
    for (;;) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        acc /= power();
      } else {
        return acc;
      }
    }
  }

  Cyclotomic power() {
    Cyclotomic base = primary();
    if (!accept('^')) return base;
    long e = integer_token();
    Cyclotomic result(1);
    Cyclotomic b = e < 0 ? base.inverse() : base;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) result *= b;
    return result;
  }

  Cyclotomic primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Cyclotomic v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == '-') {
      ++pos_;
      return -primary();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Cyclotomic(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (c == 'z' || c == 'w') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("root of unity needs an order, e.g. z3");
      int n = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (n < 1) fail("root of unity order must be positive");
      return Cyclotomic::zeta(n);
    }
    if (c == 'i') {
      ++pos_;
      return Cyclotomic::zeta(4);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace detail

/// Parses a literal; the result is embedded into Q(zeta_m) for m = lcm(hint, orders used).
inline Cyclotomic parse_cyclotomic(std::string_view text, int conductor_hint = 1) {
  Cyclotomic v = detail::LiteralParser(text).parse_all();
  int m = std::lcm(v.conductor(), conductor_hint);
  return v.embed(m);
}

inline Rational parse_rational(std::string_view text) {
  Cyclotomic v = parse_cyclotomic(text);
  if (!v.is_rational()) throw ParseError("expected a rational literal: " + std::string(text));
  return v.rational_value();
}

/// Splits "(a, b, c)" or "a, b, c" on top-level commas.
inline std::vector<std::string> split_tuple(std::string_view text) {
  std::string_view body = text;
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  body = trim(body);
  if (body.size() >= 2 && ((body.front() == '(' && body.back() == ')') ||
                           (body.front() == '[' && body.back() == ']'))) {
    // Only strip when the outer brackets enclose the whole text.
    int depth = 0;
    bool encloses = true;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(' || body[i] == '[') ++depth;
      if (body[i] == ')' || body[i] == ']') --depth;
      if (depth == 0 && i + 1 < body.size()) {
        encloses = false;
        break;
      }
    }
    if (encloses) body = body.substr(1, body.size() - 2);
  }
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      parts.emplace_back(trim(body.substr(start, i - start)));
      start = i + 1;
      continue;
    }
    if (body[i] == '(' || body[i] == '[') ++depth;
    if (body[i] == ')' || body[i] == ']') --depth;
  }
  if (parts.size() == 1 && parts[0].empty()) parts.clear();
  return parts;
}

}  // namespace magicpovm

#endif  // MAGICPOVM_LITERAL_HPP
