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
#include <cstdlib>
#include <string>
#include <vector>

#include "boxpat/algebra/linear_solve.hpp"
#include "boxpat/algebra/rational.hpp"
#include "boxpat/algebra/series.hpp"
#include "boxpat/word_stats.hpp"

/// \file
/// Transfer systems for word statistics.
///
/// A system describes words by their first few letters (the state). For a
/// state s, G_s is the generating function of all words that begin with the
/// letters of s, weighted x^stat t^length. Prepending one letter to a word
/// moves it from state s' to state s and multiplies its weight by x^e t:
///
///     G_s = x^seed(s) t^L + sum over transitions (s -> s', e) of x^e t G_s'
///
/// where L is the state length. Words shorter than L are accounted for by
/// direct enumeration. Series come from iterating this recursion length by
/// length; closed forms from solving it as a linear system over Z[x,t].

namespace boxpat {

struct Transition {
  std::size_t target;  // state of the word after its first letter is removed
  int x_exp;           // weight x^x_exp * t
};

struct TransferSystem {
  int alphabet = 0;
  std::size_t state_length = 0;
  std::vector<std::vector<int>> states;  // letter tuples, lexicographic
  std::vector<int> seed_x_exp;           // x exponent of the word equal to the state
  std::vector<std::vector<Transition>> transitions;
  BiPoly short_words;  // exact weight of all words shorter than state_length

  std::size_t size() const { return states.size(); }

  /// The matrix W - I, where W holds the transition weights, so that the
  /// system reads (W - I) G = -seed.
  PolyMatrix matrix() const {
    PolyMatrix m(size());
    for (std::size_t s = 0; s < size(); ++s) {
      m(s, s) -= BiPoly(1);
      for (const auto& tr : transitions[s])
        m(s, tr.target) += BiPoly::monomial(1, static_cast<std::size_t>(tr.x_exp), 1);
    }
    return m;
  }

  std::vector<BiPoly> seed_vector() const {
    std::vector<BiPoly> v;
    v.reserve(size());
    for (int e : seed_x_exp) v.push_back(BiPoly::monomial(1, static_cast<std::size_t>(e), state_length));
    return v;
  }
};

namespace detail {

inline std::vector<std::vector<int>> all_tuples(int alphabet, std::size_t length) {
  std::vector<std::vector<int>> out;
  for_each_word(alphabet, static_cast<int>(length), [&](const Word& w) {
    out.emplace_back(w.letters().begin(), w.letters().end());
  });
  return out;
}

inline std::size_t tuple_index(std::span<const int> letters, int alphabet) {
  std::size_t idx = 0;
  for (int c : letters) idx = idx * static_cast<std::size_t>(alphabet) + static_cast<std::size_t>(c - 1);
  return idx;
}

inline BiPoly enumerate_short_words(int alphabet, std::size_t below_length,
                                    int (*stat)(const Word&)) {
  BiPoly out;
  for (std::size_t n = 0; n < below_length; ++n) {
    std::vector<Integer> dist;
    for_each_word(alphabet, static_cast<int>(n), [&](const Word& w) {
      const auto e = static_cast<std::size_t>(stat(w));
      if (dist.size() <= e) dist.resize(e + 1);
      ++dist[e];
    });
    std::vector<IntPoly> t_coeffs(n + 1);
    t_coeffs[n] = IntPoly(std::move(dist));
    out += BiPoly(std::move(t_coeffs));
  }
  return out;
}

inline bool near(int a, int b, int k) { return std::abs(a - b) <= k; }

}  // namespace detail

/// k-bond system on l states (the first letter). Row i of matrix() is
/// (t,..,t, xt,..,xt, xt-1, xt,..,xt, t,..,t).
inline TransferSystem kbond_system(int alphabet, int k) {
  if (alphabet < 1 || k < 1) throw PreconditionViolation("kbond_system needs l >= 1 and k >= 1");
  TransferSystem sys;
  sys.alphabet = alphabet;
  sys.state_length = 1;
  sys.states = detail::all_tuples(alphabet, 1);
  sys.seed_x_exp.assign(sys.states.size(), 0);
  sys.transitions.resize(sys.states.size());
  for (int i = 1; i <= alphabet; ++i)
    for (int j = 1; j <= alphabet; ++j)
      sys.transitions[i - 1].push_back({static_cast<std::size_t>(j - 1), detail::near(i, j, k) ? 1 : 0});
  sys.short_words = BiPoly(1);
  return sys;
}

/// (1,k)-rectangle system on l^2 states (the first two letters).
inline TransferSystem rect1k_system(int alphabet, int k) {
  if (alphabet < 2 || k < 1) throw PreconditionViolation("rect1k_system needs l >= 2 and k >= 1");
  TransferSystem sys;
  sys.alphabet = alphabet;
  sys.state_length = 2;
  sys.states = detail::all_tuples(alphabet, 2);
  sys.transitions.resize(sys.states.size());
  for (std::size_t s = 0; s < sys.states.size(); ++s) {
    const int i = sys.states[s][0];
    const int j = sys.states[s][1];
    const bool ij = detail::near(i, j, k);
    sys.seed_x_exp.push_back(ij ? 2 : 0);
    for (int m = 1; m <= alphabet; ++m) {
      int e = 0;
      if (ij) e = detail::near(j, m, k) ? 1 : 2;
      const std::vector<int> next = {j, m};
      sys.transitions[s].push_back({detail::tuple_index(next, alphabet), e});
    }
  }
  sys.short_words = BiPoly(1) + BiPoly::monomial(alphabet, 0, 1);
  return sys;
}

/// Transition exponent for prepending r to a word beginning s t u v, by the
/// four cases on whether r reaches s and t.
inline int box2_theta_exp(int r, int s, int t, int u, int v) {
  const bool s_matched = detail::near(s, t, 2) || detail::near(s, u, 2);  // s in s t u
  const bool t_matched = detail::near(t, s, 2) || detail::near(t, u, 2) || detail::near(t, v, 2);
  const bool rs = detail::near(r, s, 2);
  const bool rt = detail::near(r, t, 2);
  if (!rs && !rt) return 0;                        // case 1
  if (!rs && rt) return t_matched ? 1 : 2;         // case 2
  if (rs && !rt) return s_matched ? 1 : 2;         // case 3
  return 1 + (s_matched ? 0 : 1) + (t_matched ? 0 : 1);  // case 4
}

/// 2-box system on l^4 states (the first four letters).
inline TransferSystem box2_system(int alphabet) {
  if (alphabet < 1) throw PreconditionViolation("box2_system needs l >= 1");
  TransferSystem sys;
  sys.alphabet = alphabet;
  sys.state_length = 4;
  sys.states = detail::all_tuples(alphabet, 4);
  sys.transitions.resize(sys.states.size());
  for (std::size_t s = 0; s < sys.states.size(); ++s) {
    const auto& q = sys.states[s];
    sys.seed_x_exp.push_back(rect_count_word(Word(q, alphabet), 2, 2));
    for (int v = 1; v <= alphabet; ++v) {
      const std::vector<int> next = {q[1], q[2], q[3], v};
      sys.transitions[s].push_back(
          {detail::tuple_index(next, alphabet), box2_theta_exp(q[0], q[1], q[2], q[3], v)});
    }
  }
  sys.short_words = detail::enumerate_short_words(
      alphabet, 4, [](const Word& w) { return rect_count_word(w, 2, 2); });
  return sys;
}

/// Distribution series through t^order by iterating the recursion.
inline TSeries system_series(const TransferSystem& sys, std::size_t order) {
  TSeries out(order, sys.short_words);
  if (order < sys.state_length) return out;
  std::vector<IntPoly> acc;
  acc.reserve(sys.size());
  for (int e : sys.seed_x_exp) acc.push_back(IntPoly::monomial(1, static_cast<std::size_t>(e)));
  for (std::size_t n = sys.state_length;; ++n) {
    IntPoly total;
    for (const auto& p : acc) total += p;
    out[n] += total;
    if (n == order) break;
    std::vector<IntPoly> next(sys.size());
    for (std::size_t s = 0; s < sys.size(); ++s)
      for (const auto& tr : sys.transitions[s])
        next[s] += acc[tr.target].shifted(static_cast<std::size_t>(tr.x_exp));
    acc = std::move(next);
  }
  return out;
}

/// Closed form short_words + sum_s G_s by fraction-free elimination.
inline RationalGF system_gf(const TransferSystem& sys) {
  std::vector<BiPoly> rhs = sys.seed_vector();
  for (auto& r : rhs) r = -r;
  CramerSolution c = solve_cramer(sys.matrix(), rhs);
  BiPoly num = sys.short_words * c.det;
  for (const auto& n : c.numerators) num += n;
  return {std::move(num), std::move(c.det)};
}

/// Alphabet limits for closed forms; elimination cost grows quickly.
struct GfBounds {
  int max_kbond_alphabet = 8;
  int max_rect1k_alphabet = 5;
};

inline TSeries kbond_series(int alphabet, int k, std::size_t order = kDefaultSeriesOrder) {
  return system_series(kbond_system(alphabet, k), order);
}

inline RationalGF kbond_gf(int alphabet, int k, const GfBounds& bounds = {}) {
  if (alphabet > bounds.max_kbond_alphabet)
    throw BoundExceeded("k-bond closed form limited to l <= " +
                        std::to_string(bounds.max_kbond_alphabet));
  return system_gf(kbond_system(alphabet, k));
}

inline TSeries rect1k_series(int alphabet, int k, std::size_t order = kDefaultSeriesOrder) {
  return system_series(rect1k_system(alphabet, k), order);
}

inline RationalGF rect1k_gf(int alphabet, int k, const GfBounds& bounds = {}) {
  if (alphabet > bounds.max_rect1k_alphabet)
    throw BoundExceeded("(1,k)-rectangle closed form limited to l <= " +
                        std::to_string(bounds.max_rect1k_alphabet));
  return system_gf(rect1k_system(alphabet, k));
}

inline TSeries box2_series(int alphabet, std::size_t order = kDefaultSeriesOrder) {
  return system_series(box2_system(alphabet), order);
}

/// Constant coefficients (x = 0): words with no k-bond.
inline std::vector<Integer> avoidance_series(int alphabet, int k,
                                             std::size_t order = kDefaultSeriesOrder) {
  return kbond_series(alphabet, k, order).at_x(0);
}

/// For each n, the coefficient of x^n in the t^n coefficient: objects whose
/// statistic equals their length. Throws DegreeExceeded if some t^n
/// coefficient has x-degree above n.
inline std::vector<Integer> maxstat_series(const TSeries& series) {
  std::vector<Integer> out;
  out.reserve(series.order() + 1);
  for (std::size_t n = 0; n <= series.order(); ++n) {
    if (series[n].degree() > static_cast<int>(n))
      throw DegreeExceeded("t^" + std::to_string(n) + " coefficient has x-degree " +
                           std::to_string(series[n].degree()));
    out.push_back(series[n][n]);
  }
  return out;
}

inline std::vector<Integer> maxstat_series(const RationalGF& gf,
                                           std::size_t order = kDefaultSeriesOrder) {
  return maxstat_series(series_of_rational(gf, order));
}

/// Closed form of the max-statistic sequence: F(1/x, x t) at x = 0.
inline RationalT maxstat_gf(const RationalGF& gf) { return diagonal_gf(gf); }

/// Number of k-smooth words of each length: the coefficient of x^(n-1) in
/// the t^n coefficient of the k-bond series, with 1 for the empty word.
inline std::vector<Integer> smooth_series(int alphabet, int k,
                                          std::size_t order = kDefaultSeriesOrder) {
  const TSeries s = kbond_series(alphabet, k, order);
  std::vector<Integer> out = {Integer(1)};
  for (std::size_t n = 1; n <= order; ++n) out.push_back(s[n][n - 1]);
  return out;
}

/// Smooth-word generating function
///   1 + t(l - (3l+2)t)/(1-3t)^2 + 2t^2/(1-3t)^2 * (1 + U_{l-1}(y)) / U_l(y)
/// with y = (1-t)/(2t) and U the Chebyshev polynomials of the second kind.
inline RationalT smooth_gf_chebyshev(int alphabet) {
  if (alphabet < 1) throw PreconditionViolation("smooth_gf_chebyshev needs l >= 1");
  const long l = alphabet;
  const RationalT t(IntPoly{0, 1});
  const RationalT one_minus_3t_sq(IntPoly(1), IntPoly{1, -3} * IntPoly{1, -3});
  const RationalT y(IntPoly{1, -1}, IntPoly{0, 2});
  const RationalT u_prev = chebyshev_U(static_cast<unsigned>(alphabet - 1), y);
  const RationalT u = chebyshev_U(static_cast<unsigned>(alphabet), y);
  return RationalT(1) + t * RationalT(IntPoly{l, -(3 * l + 2)}) * one_minus_3t_sq +
         RationalT(2) * t * t * one_minus_3t_sq * (RationalT(1) + u_prev) / u;
}

/// Closed form of smooth_series: the subdiagonal of the k-bond closed form.
inline RationalT smooth_gf_from_system(int alphabet, int k, const GfBounds& bounds = {}) {
  return subdiagonal_gf(kbond_gf(alphabet, k, bounds));
}

}  // namespace boxpat
