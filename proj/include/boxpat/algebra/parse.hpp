/* Copyright 2026 The boxpat Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "boxpat/algebra/rational.hpp"

namespace boxpat {

namespace detail {

// Recursive-descent reader for expressions in x and t:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := power (['*'|'/'] power | power)*      juxtaposition multiplies
//   power   := primary ['^' digits]
//   primary := digits | 'x' | 't' | '(' expr ')'
class ExprReader {
 public:
  explicit ExprReader(std::string_view text) : text_(text) {}

  RationalGF read() {
    RationalGF v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  RationalGF expr() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = get() == '-';
    RationalGF v = term();
    if (negate) v = -v;
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return v;
      get();
      RationalGF rhs = term();
      v = c == '+' ? v + rhs : v - rhs;
    }
  }

  RationalGF term() {
    RationalGF v = power();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '*') {
        get();
        v = v * power();
      } else if (c == '/') {
        get();
        v = v / power();
      } else if (c == '(' || c == 'x' || c == 't' || std::isdigit(static_cast<unsigned char>(c))) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  RationalGF power() {
    RationalGF base = primary();
    skip_space();
    if (peek() != '^') return base;
    get();
    skip_space();
    const std::string digits = read_digits();
    if (digits.empty()) fail("expected exponent");
    const unsigned long e = std::stoul(digits);
    RationalGF out(1);
    for (unsigned long i = 0; i < e; ++i) out = out * base;
    return out;
  }

  RationalGF primary() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      get();
      RationalGF v = expr();
      skip_space();
      if (get() != ')') fail("expected ')'");
      return v;
    }
    if (c == 'x') {
      get();
      return BiPoly::x();
    }
    if (c == 't') {
      get();
      return BiPoly::t();
    }
    const std::string digits = read_digits();
    if (digits.empty()) fail("expected number, x, t or '('");
    return BiPoly(Integer(digits));
  }

  std::string read_digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(get());
    return out;
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse a rational expression in x and t such as "(1-2(x-1)t)/(1-t-2xt)".
inline RationalGF parse_rational_gf(std::string_view text) {
  return detail::ExprReader(text).read();
}

/// Parse a polynomial expression in x and t; throws ParseError if the
/// expression is not a polynomial.
inline BiPoly parse_bipoly(std::string_view text) {
  RationalGF v = parse_rational_gf(text);
  if (v.den().t_degree() > 0 || v.den().x_degree() > 0)
    throw ParseError("expression is not a polynomial: " + std::string(text));
  return v.num().exact_div(v.den().constant_term());
}

}  // namespace boxpat
