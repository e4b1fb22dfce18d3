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

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "boxpat/errors.hpp"

namespace boxpat {

using Integer = mpz_class;

inline std::string to_decimal(const Integer& v) { return v.get_str(10); }

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficient i is the coefficient of var^i. The representation is canonical:
/// no trailing zero coefficients, and the zero polynomial has no coefficients
/// at all, so structural equality is polynomial equality.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.emplace_back(c);
  }
  IntPoly(const Integer& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(c);
  }
  explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }
  IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static IntPoly monomial(const Integer& c, std::size_t degree) {
    if (c == 0) return {};
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPoly(std::move(v));
  }
  static IntPoly var() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const Integer> coeffs() const { return coeffs_; }

  /// Coefficient of var^i; zero beyond the degree.
  Integer operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
  }
  const Integer& leading() const { return coeffs_.back(); }

  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  int order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
  }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
  IntPoly& operator*=(const Integer& c) {
    if (c == 0) {
      coeffs_.clear();
    } else {
      for (auto& v : coeffs_) v *= c;
    }
    return *this;
  }

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a) {
    for (auto& v : a.coeffs_) v = -v;
    return a;
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                   b.coeffs_[j].get_mpz_t());
    }
    return IntPoly(std::move(out));
  }
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Multiply by var^k.
  IntPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Integer> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(v));
  }
  /// Divide by var^k, dropping the low-order coefficients.
  IntPoly unshifted(std::size_t k) const {
    if (k >= coeffs_.size()) return {};
    return IntPoly(std::vector<Integer>(coeffs_.begin() + static_cast<long>(k),
                                        coeffs_.end()));
  }
  /// Keep coefficients of degree <= n.
  IntPoly truncated(std::size_t n) const {
    if (coeffs_.size() <= n + 1) return *this;
    return IntPoly(std::vector<Integer>(coeffs_.begin(),
                                        coeffs_.begin() + static_cast<long>(n + 1)));
  }

  Integer eval(const Integer& at) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  Integer content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// Exact division by a nonzero integer; throws InexactDivision otherwise.
  IntPoly exact_div(const Integer& d) const {
    if (d == 0) throw InexactDivision("division of polynomial by zero");
    std::vector<Integer> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), d.get_mpz_t()))
        throw InexactDivision("polynomial coefficient not divisible");
      mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
    }
    return IntPoly(std::move(v));
  }

  /// Exact division by a nonzero polynomial over Z; throws InexactDivision when
  /// the quotient is not an integer polynomial.
  IntPoly exact_div(const IntPoly& d) const {
    if (d.is_zero()) throw InexactDivision("division of polynomial by zero");
    if (is_zero()) return {};
    if (d.size() == 1) return exact_div(d.coeffs_[0]);
    if (degree() < d.degree()) throw InexactDivision("polynomial not divisible");
    std::vector<Integer> rem = coeffs_;
    std::vector<Integer> q(coeffs_.size() - d.coeffs_.size() + 1);
    const Integer& lc = d.coeffs_.back();
    for (std::size_t k = q.size(); k-- > 0;) {
      Integer& top = rem[k + d.coeffs_.size() - 1];
      if (top == 0) continue;
      if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t()))
        throw InexactDivision("polynomial not divisible");
      mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
      for (std::size_t j = 0; j < d.coeffs_.size(); ++j)
        mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), d.coeffs_[j].get_mpz_t());
    }
    for (const auto& r : rem)
      if (r != 0) throw InexactDivision("polynomial not divisible");
    return IntPoly(std::move(q));
  }

  /// Human-readable form such as "2+7x" or "1-x^2".
  std::string to_string(char var = 'x') const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Integer& c = coeffs_[i];
      if (c == 0) continue;
      Integer mag = abs(c);
      if (c < 0) {
        os << '-';
      } else if (!first) {
        os << '+';
      }
      if (i == 0 || mag != 1) os << mag.get_str();
      if (i >= 1) os << var;
      if (i >= 2) os << '^' << i;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  IntPoly q = p.exact_div(p.content());
  return q.leading() < 0 ? -q : q;
}

/// gcd over Z[var], normalized to a positive leading coefficient.
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
  if (a.is_zero()) return primitive_part(b) * b.content();
  if (b.is_zero()) return primitive_part(a) * a.content();
  Integer c = gcd(a.content(), b.content());
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  // Primitive pseudo-remainder sequence.
  while (!b.is_zero()) {
    IntPoly r = a;
    const Integer lc = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
      const Integer rl = r.leading();
      r = r * lc - (b * rl).shifted(shift);
    }
    a = std::move(b);
    b = primitive_part(r);
  }
  return a * c;
}

}  // namespace boxpat
