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
#include <string>
#include <utility>
#include <vector>

#include "boxpat/algebra/bi_poly.hpp"
#include "boxpat/algebra/series.hpp"

namespace boxpat {

/// Quotient of two bivariate polynomials in (x, t) that expands as a power
/// series at the origin.
///
/// Normalization divides out the joint integer content and makes the constant
/// term of the denominator positive. No polynomial gcd is taken, so two equal
/// functions may have different representations; compare with gf_equal.
class RationalGF {
 public:
  RationalGF() : num_(0), den_(1) {}
  RationalGF(const BiPoly& p) : num_(p), den_(1) {}  // NOLINT
  RationalGF(long c) : num_(c), den_(1) {}           // NOLINT
  RationalGF(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.constant_term() == 0)
      throw NotExpandable("denominator vanishes at x = t = 0: " + den_.to_string());
    Integer g = gcd(num_.content(), den_.content());
    if (g != 1) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
    if (den_.constant_term() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }

  friend RationalGF operator+(const RationalGF& a, const RationalGF& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalGF operator-(const RationalGF& a, const RationalGF& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalGF operator-(const RationalGF& a) { return {-a.num_, a.den_}; }
  friend RationalGF operator*(const RationalGF& a, const RationalGF& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalGF operator/(const RationalGF& a, const RationalGF& b) {
    return {a.num_ * b.den_, a.den_ * b.num_};
  }

  std::string to_string() const {
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  BiPoly num_;
  BiPoly den_;
};

/// True iff a and b are the same rational function (cross-multiplication).
inline bool gf_equal(const RationalGF& a, const RationalGF& b) {
  return a.num() * b.den() == b.num() * a.den();
}

/// The unique series S with den * S = num modulo t^(order+1).
///
/// The t^0 coefficient of the denominator must divide every step exactly in
/// Z[x]; this always holds when it is a unit, which is the case for every
/// transfer-system generating function.
inline TSeries series_of_rational(const RationalGF& gf,
                                  std::size_t order = kDefaultSeriesOrder) {
  const IntPoly& d0 = gf.den().t_coeff(0);
  if (d0.is_zero()) throw NotExpandable("denominator has no t^0 term");
  TSeries s(order);
  for (std::size_t n = 0; n <= order; ++n) {
    IntPoly acc = gf.num().t_coeff(n);
    for (std::size_t k = 1; k <= n && k < gf.den().t_coeffs().size(); ++k)
      acc -= gf.den().t_coeff(k) * s[n - k];
    try {
      s[n] = acc.exact_div(d0);
    } catch (const InexactDivision&) {
      throw NotExpandable("t^" + std::to_string(n) +
                          " coefficient is not a polynomial in x");
    }
  }
  return s;
}

/// Univariate rational function in t with integer coefficients, kept in lowest
/// terms. A vanishing denominator constant term is allowed (Chebyshev
/// arguments such as (1-t)/(2t)); expansion then fails with NotExpandable.
class RationalT {
 public:
  RationalT() : num_(0), den_(1) {}
  RationalT(const IntPoly& p) : num_(p), den_(1) {}  // NOLINT
  RationalT(long c) : num_(c), den_(1) {}            // NOLINT
  RationalT(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InexactDivision("rational function with zero denominator");
    normalize();
  }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  friend RationalT operator+(const RationalT& a, const RationalT& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalT operator-(const RationalT& a, const RationalT& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalT operator-(const RationalT& a) { return {-a.num_, a.den_}; }
  friend RationalT operator*(const RationalT& a, const RationalT& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalT operator/(const RationalT& a, const RationalT& b) {
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const RationalT& a, const RationalT& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Coefficients of t^0..t^order.
  std::vector<Integer> series(std::size_t order) const {
    const Integer d0 = den_[0];
    if (d0 == 0) throw NotExpandable("denominator vanishes at t = 0");
    std::vector<Integer> s(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
      Integer acc = num_[n];
      for (std::size_t k = 1; k <= n && k < den_.size(); ++k) acc -= den_[k] * s[n - k];
      if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t()))
        throw NotExpandable("series coefficient is not an integer");
      mpz_divexact(s[n].get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
    }
    return s;
  }

  RationalGF to_gf() const { return {BiPoly(to_t_poly(num_)), BiPoly(to_t_poly(den_))}; }

  std::string to_string() const {
    return "(" + num_.to_string('t') + ")/(" + den_.to_string('t') + ")";
  }

  /// Embed a polynomial in t as an x-free BiPoly.
  static BiPoly to_t_poly(const IntPoly& p) {
    std::vector<IntPoly> v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return BiPoly(std::move(v));
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = IntPoly(1);
      return;
    }
    IntPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0 || abs(g.leading()) != 1) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
    const Integer& lead = den_[0] != 0 ? den_.coeffs()[0] : den_.leading();
    if (lead < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  IntPoly num_;
  IntPoly den_;
};

/// Restrict an x-free bivariate function to a univariate one in t.
inline RationalT to_rational_t(const RationalGF& gf) {
  if (gf.num().x_degree() > 0 || gf.den().x_degree() > 0)
    throw PreconditionViolation("generating function depends on x: " + gf.to_string());
  return {gf.num().at_x(0), gf.den().at_x(0)};
}

/// U_r(arg) from U_0 = 1, U_1 = 2 arg, U_r = 2 arg U_{r-1} - U_{r-2}.
inline RationalT chebyshev_U(unsigned r, const RationalT& arg) {
  RationalT prev(1);
  if (r == 0) return prev;
  const RationalT twice = RationalT(2) * arg;
  RationalT cur = twice;
  for (unsigned k = 2; k <= r; ++k) {
    RationalT next = twice * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Linear recurrence b_n = sum_i coeffs[i-1] * b_{n-i}, holding for all
/// n > valid_from (terms with negative index count as zero).
struct Recurrence {
  std::vector<Integer> coeffs;
  int valid_from = 0;

  /// Extend a sequence whose first valid_from + 1 terms are given.
  std::vector<Integer> extend(std::vector<Integer> initial, std::size_t count) const {
    initial.resize(std::max(initial.size(), static_cast<std::size_t>(valid_from + 1)));
    while (initial.size() < count) {
      const std::size_t n = initial.size();
      Integer acc = 0;
      for (std::size_t i = 1; i <= coeffs.size() && i <= n; ++i) acc += coeffs[i - 1] * initial[n - i];
      initial.push_back(acc);
    }
    initial.resize(count);
    return initial;
  }
};

/// Denominator-to-recurrence correspondence for a rational function whose
/// denominator has constant term 1.
inline Recurrence recurrence_from_gf(const RationalT& gf) {
  if (gf.den()[0] != 1)
    throw PreconditionViolation("denominator constant term is not 1: " + gf.to_string());
  Recurrence r;
  for (std::size_t i = 1; i < gf.den().size(); ++i) r.coeffs.push_back(-gf.den()[i]);
  r.valid_from = std::max(gf.num().degree(), 0);
  return r;
}

inline Recurrence recurrence_from_gf(const RationalGF& gf) {
  return recurrence_from_gf(to_rational_t(gf));
}

namespace detail {

/// p(1/x, x t) = x^(-shift) * poly, with poly an ordinary polynomial.
struct Inverted {
  BiPoly poly;
  int shift = 0;
};

inline Inverted invert_x(const BiPoly& p) {
  int shift = 0;
  bool any = false;
  for (std::size_t b = 0; b < p.t_coeffs().size(); ++b) {
    const IntPoly& c = p.t_coeff(b);
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (c[a] == 0) continue;
      const int e = static_cast<int>(a) - static_cast<int>(b);
      shift = any ? std::max(shift, e) : e;
      any = true;
    }
  }
  BiPoly out;
  for (std::size_t b = 0; b < p.t_coeffs().size(); ++b) {
    const IntPoly& c = p.t_coeff(b);
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (c[a] == 0) continue;
      const int e = static_cast<int>(b) - static_cast<int>(a) + shift;
      out += BiPoly::monomial(c[a], static_cast<std::size_t>(e), b);
    }
  }
  return {std::move(out), shift};
}

/// Limit of x^x_exp * p / q as x -> 0, as a function of t.
inline RationalT limit_x0(const BiPoly& p, const BiPoly& q, int x_exp) {
  if (p.is_zero()) return RationalT(0);
  const int op = p.x_order();
  const int oq = q.x_order();
  const int total = x_exp + op - oq;
  if (total < 0)
    throw SubstitutionDegenerate("limit x -> 0 diverges (order " + std::to_string(total) + ")");
  if (total > 0) return RationalT(0);
  return {p.x_unshifted(static_cast<std::size_t>(op)).at_x(0),
          q.x_unshifted(static_cast<std::size_t>(oq)).at_x(0)};
}

}  // namespace detail

/// F(1/x, x t) evaluated at x = 0: the generating function of the diagonal
/// coefficients [x^n t^n] F. For a statistic bounded by the object length this
/// counts the objects attaining the bound.
inline RationalT diagonal_gf(const RationalGF& gf) {
  const auto n = detail::invert_x(gf.num());
  const auto d = detail::invert_x(gf.den());
  return detail::limit_x0(n.poly, d.poly, d.shift - n.shift);
}

/// 1 + [(F(1/x, x t) - 1) / x] at x = 0: the generating function of the
/// subdiagonal coefficients [x^(n-1) t^n] F, with constant term 1. Requires
/// that the only x^0 term of F(1/x, x t) is the empty object.
inline RationalT subdiagonal_gf(const RationalGF& gf) {
  const auto n = detail::invert_x(gf.num());
  const auto d = detail::invert_x(gf.den());
  const int e = d.shift - n.shift;
  RationalT c = e >= 0
      ? detail::limit_x0(n.poly.x_shifted(static_cast<std::size_t>(e)) - d.poly, d.poly, -1)
      : detail::limit_x0(n.poly - d.poly.x_shifted(static_cast<std::size_t>(-e)), d.poly, e - 1);
  return RationalT(1) + c;
}

}  // namespace boxpat
