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

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "boxpat/algebra/int_poly.hpp"

namespace boxpat {

/// Bivariate integer polynomial in (x, t), stored densely as a polynomial in t
/// whose coefficients are IntPoly values in x. Canonical like IntPoly: no
/// trailing zero t-coefficients.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(long c) : BiPoly(IntPoly(c)) {}  // NOLINT(google-explicit-constructor)
  BiPoly(const Integer& c) : BiPoly(IntPoly(c)) {}  // NOLINT
  BiPoly(const IntPoly& x_poly) {  // NOLINT(google-explicit-constructor)
    if (!x_poly.is_zero()) t_coeffs_.push_back(x_poly);
  }
  explicit BiPoly(std::vector<IntPoly> t_coeffs) : t_coeffs_(std::move(t_coeffs)) {
    trim();
  }

  static BiPoly x() { return BiPoly(IntPoly::var()); }
  static BiPoly t() { return BiPoly(std::vector<IntPoly>{IntPoly(), IntPoly(1)}); }
  /// c * x^a * t^b
  static BiPoly monomial(const Integer& c, std::size_t a, std::size_t b) {
    if (c == 0) return {};
    std::vector<IntPoly> v(b + 1);
    v[b] = IntPoly::monomial(c, a);
    return BiPoly(std::move(v));
  }

  bool is_zero() const { return t_coeffs_.empty(); }
  int t_degree() const { return static_cast<int>(t_coeffs_.size()) - 1; }
  int x_degree() const {
    int d = -1;
    for (const auto& c : t_coeffs_) d = std::max(d, c.degree());
    return d;
  }
  /// Coefficient of t^b as a polynomial in x.
  const IntPoly& t_coeff(std::size_t b) const {
    static const IntPoly kZero;
    return b < t_coeffs_.size() ? t_coeffs_[b] : kZero;
  }
  std::span<const IntPoly> t_coeffs() const { return t_coeffs_; }
  /// Coefficient of x^a t^b.
  Integer coeff(std::size_t a, std::size_t b) const { return t_coeff(b)[a]; }
  Integer constant_term() const { return coeff(0, 0); }

  BiPoly& operator+=(const BiPoly& o) {
    if (o.t_coeffs_.size() > t_coeffs_.size()) t_coeffs_.resize(o.t_coeffs_.size());
    for (std::size_t i = 0; i < o.t_coeffs_.size(); ++i) t_coeffs_[i] += o.t_coeffs_[i];
    trim();
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    if (o.t_coeffs_.size() > t_coeffs_.size()) t_coeffs_.resize(o.t_coeffs_.size());
    for (std::size_t i = 0; i < o.t_coeffs_.size(); ++i) t_coeffs_[i] -= o.t_coeffs_[i];
    trim();
    return *this;
  }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  BiPoly& operator*=(const Integer& c) {
    if (c == 0) t_coeffs_.clear();
    for (auto& p : t_coeffs_) p *= c;
    return *this;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(BiPoly a) {
    for (auto& p : a.t_coeffs_) p = -p;
    return a;
  }
  friend BiPoly operator*(BiPoly a, const Integer& c) { return a *= c; }
  friend BiPoly operator*(const Integer& c, BiPoly a) { return a *= c; }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t nt = a.t_coeffs_.size() + b.t_coeffs_.size() - 1;
    const std::size_t nx =
        static_cast<std::size_t>(a.x_degree() + b.x_degree() + 1);
    // Flat accumulation avoids a temporary IntPoly per product term.
    std::vector<Integer> grid(nt * nx);
    for (std::size_t i = 0; i < a.t_coeffs_.size(); ++i) {
      auto ai = a.t_coeffs_[i].coeffs();
      if (ai.empty()) continue;
      for (std::size_t j = 0; j < b.t_coeffs_.size(); ++j) {
        auto bj = b.t_coeffs_[j].coeffs();
        Integer* row = &grid[(i + j) * nx];
        for (std::size_t p = 0; p < ai.size(); ++p) {
          if (ai[p] == 0) continue;
          for (std::size_t q = 0; q < bj.size(); ++q)
            mpz_addmul(row[p + q].get_mpz_t(), ai[p].get_mpz_t(), bj[q].get_mpz_t());
        }
      }
    }
    std::vector<IntPoly> out;
    out.reserve(nt);
    for (std::size_t i = 0; i < nt; ++i) {
      out.emplace_back(std::vector<Integer>(
          std::make_move_iterator(grid.begin() + static_cast<long>(i * nx)),
          std::make_move_iterator(grid.begin() + static_cast<long>((i + 1) * nx))));
    }
    return BiPoly(std::move(out));
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.t_coeffs_ == b.t_coeffs_;
  }

  BiPoly t_shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<IntPoly> v(k);
    v.insert(v.end(), t_coeffs_.begin(), t_coeffs_.end());
    return BiPoly(std::move(v));
  }
  BiPoly x_shifted(std::size_t k) const {
    std::vector<IntPoly> v;
    v.reserve(t_coeffs_.size());
    for (const auto& p : t_coeffs_) v.push_back(p.shifted(k));
    return BiPoly(std::move(v));
  }
  /// Divide by x^k, dropping any lower-order terms.
  BiPoly x_unshifted(std::size_t k) const {
    std::vector<IntPoly> v;
    v.reserve(t_coeffs_.size());
    for (const auto& p : t_coeffs_) v.push_back(p.unshifted(k));
    return BiPoly(std::move(v));
  }
  /// Largest k with x^k dividing this polynomial; -1 for zero.
  int x_order() const {
    int o = -1;
    for (const auto& p : t_coeffs_) {
      if (p.is_zero()) continue;
      const int po = p.order();
      o = (o < 0) ? po : std::min(o, po);
    }
    return o;
  }

  /// Substitute x = value, giving a polynomial in t.
  IntPoly at_x(const Integer& value) const {
    std::vector<Integer> v;
    v.reserve(t_coeffs_.size());
    for (const auto& p : t_coeffs_) v.push_back(p.eval(value));
    return IntPoly(std::move(v));
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& p : t_coeffs_) {
      Integer c = p.content();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  BiPoly exact_div(const Integer& d) const {
    std::vector<IntPoly> v;
    v.reserve(t_coeffs_.size());
    for (const auto& p : t_coeffs_) v.push_back(p.exact_div(d));
    return BiPoly(std::move(v));
  }

  /// Exact division in Z[x,t]; throws InexactDivision if d does not divide.
  ///
  /// When the t^0 coefficient of d is the constant +-1, the quotient is built
  /// from the low-order end, which needs no polynomial division in x. This is
  /// the common case for minors of (transfer matrix - identity).
  BiPoly exact_div(const BiPoly& d) const {
    if (d.is_zero()) throw InexactDivision("division by zero polynomial");
    if (is_zero()) return {};
    if (t_degree() < d.t_degree()) throw InexactDivision("polynomial not divisible");
    const std::size_t qn = t_coeffs_.size() - d.t_coeffs_.size() + 1;
    std::vector<IntPoly> rem = t_coeffs_;
    std::vector<IntPoly> q(qn);
    const IntPoly& low = d.t_coeffs_.front();
    if (low.degree() == 0 && abs(low.leading()) == 1) {
      const Integer sign = low.leading();
      for (std::size_t k = 0; k < qn; ++k) {
        if (rem[k].is_zero()) continue;
        q[k] = rem[k] * sign;
        for (std::size_t j = 0; j < d.t_coeffs_.size(); ++j)
          rem[k + j] -= q[k] * d.t_coeffs_[j];
      }
    } else {
      const IntPoly& lc = d.t_coeffs_.back();
      for (std::size_t k = qn; k-- > 0;) {
        IntPoly& top = rem[k + d.t_coeffs_.size() - 1];
        if (top.is_zero()) continue;
        q[k] = top.exact_div(lc);
        for (std::size_t j = 0; j < d.t_coeffs_.size(); ++j)
          rem[k + j] -= q[k] * d.t_coeffs_[j];
      }
    }
    for (const auto& r : rem)
      if (!r.is_zero()) throw InexactDivision("polynomial not divisible");
    return BiPoly(std::move(q));
  }

  /// Human-readable form, grouped by powers of t: "1+(2+7x)t^2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t b = 0; b < t_coeffs_.size(); ++b) {
      const IntPoly& c = t_coeffs_[b];
      if (c.is_zero()) continue;
      std::string s = c.to_string('x');
      const bool single = c.size() - static_cast<std::size_t>(std::max(c.order(), 0)) == 1;
      if (b == 0) {
        os << (first || s[0] == '-' ? "" : "+") << s;
      } else {
        if (single) {
          if (s == "1") s.clear();
          else if (s == "-1") s = "-";
          os << (first || s.starts_with('-') ? "" : "+") << s;
        } else {
          os << (first ? "" : "+") << '(' << s << ')';
        }
        os << 't';
        if (b >= 2) os << '^' << b;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!t_coeffs_.empty() && t_coeffs_.back().is_zero()) t_coeffs_.pop_back();
  }

  std::vector<IntPoly> t_coeffs_;
};

}  // namespace boxpat
