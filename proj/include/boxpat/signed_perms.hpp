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
#include <functional>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boxpat/algebra/int_poly.hpp"
#include "boxpat/perm_stats.hpp"

namespace boxpat {

/// Element of the hyperoctahedral group B_n: a permutation of 1..n with each
/// entry optionally barred. Bars are a parallel flag vector.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  SignedPermutation(std::vector<int> values, std::vector<bool> bars)
      : values_(std::move(values)), bars_(std::move(bars)) {
    if (bars_.size() != values_.size())
      throw PreconditionViolation("bar vector length differs from value vector length");
    Permutation check(values_);  // validates the underlying permutation
  }

  /// Comma-separated tokens; a bar is a leading '-' or a trailing '\''.
  static SignedPermutation parse(std::string_view text) {
    std::vector<int> values;
    std::vector<bool> bars;
    if (text.empty()) return {};
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string token(text.substr(start, end - start));
      bool bar = false;
      if (!token.empty() && token.front() == '-') {
        bar = true;
        token.erase(0, 1);
      } else if (!token.empty() && token.back() == '\'') {
        bar = true;
        token.pop_back();
      }
      if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("invalid token '" + std::string(text.substr(start, end - start)) +
                         "' in \"" + std::string(text) + "\"");
      values.push_back(std::stoi(token));
      bars.push_back(bar);
      start = end + 1;
    }
    try {
      return {std::move(values), std::move(bars)};
    } catch (const PreconditionViolation& e) {
      throw ParseError(e.what());
    }
  }

  int size() const { return static_cast<int>(values_.size()); }
  std::span<const int> values() const { return values_; }
  const std::vector<bool>& bars() const { return bars_; }
  bool barred(std::size_t i) const { return bars_[i]; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i > 0) out.push_back(',');
      if (bars_[i]) out.push_back('-');
      out += std::to_string(values_[i]);
    }
    return out;
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> values_;
  std::vector<bool> bars_;
};

/// Adjacent factors i(i+1), both unbarred, or (i+1)i, both barred.
inline int bad_pair_count(const SignedPermutation& pi) {
  const auto v = pi.values();
  int count = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const bool b0 = pi.barred(i);
    const bool b1 = pi.barred(i + 1);
    if (!b0 && !b1 && v[i + 1] == v[i] + 1) ++count;
    if (b0 && b1 && v[i] == v[i + 1] + 1) ++count;
  }
  return count;
}

/// Append-only memo of an integer sequence. Term n is computed from the
/// terms below it; concurrent readers see a consistent prefix.
class SeqTable {
 public:
  using Rule = std::function<Integer(const std::vector<Integer>& prefix)>;

  SeqTable(std::string name, std::vector<Integer> initial, Rule rule)
      : name_(std::move(name)), values_(std::move(initial)), rule_(std::move(rule)) {}

  const std::string& name() const { return name_; }

  Integer at(std::size_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (values_.size() <= n) values_.push_back(rule_(values_));
    return values_[n];
  }

  std::vector<Integer> prefix(std::size_t count) {
    if (count == 0) return {};
    at(count - 1);
    std::lock_guard<std::mutex> lock(mu_);
    return {values_.begin(), values_.begin() + static_cast<long>(count)};
  }

 private:
  std::string name_;
  std::mutex mu_;
  std::vector<Integer> values_;
  Rule rule_;
};

namespace detail {

inline SeqTable& avoider_table() {
  static SeqTable table("signed-avoiders", {Integer(1), Integer(2)},
                        [](const std::vector<Integer>& a) {
                          const long n = static_cast<long>(a.size());
                          return Integer((2 * n - 1) * a[n - 1] + 2 * (n - 2) * a[n - 2]);
                        });
  return table;
}

inline SeqTable& hertzsprung_table() {
  static SeqTable table("hertzsprung", {Integer(1), Integer(1), Integer(0), Integer(0)},
                        [](const std::vector<Integer>& a) {
                          const long n = static_cast<long>(a.size());
                          return Integer((n + 1) * a[n - 1] - (n - 2) * a[n - 2] -
                                         (n - 5) * a[n - 3] + (n - 3) * a[n - 4]);
                        });
  return table;
}

}  // namespace detail

/// Elements of B_n with no bad pair: a_0 = 1, a_1 = 2,
/// a_n = (2n-1) a_{n-1} + 2(n-2) a_{n-2}.
inline Integer avoider_count(std::size_t n) { return detail::avoider_table().at(n); }

/// Elements of B_n with exactly one bad pair: (n-1) a_{n-1}.
inline Integer one_bad_pair_count(std::size_t n) {
  if (n == 0) throw PreconditionViolation("one_bad_pair_count needs n >= 1");
  return Integer(static_cast<long>(n - 1)) * avoider_count(n - 1);
}

/// Checks the exponential generating function A(t) = sum a_n t^n / n! of the
/// avoider sequence against the differential equation
/// (1 - 2t) A''(t) = (2t + 3) A'(t) as an identity of formal power series
/// through t^(N-1), and additionally that A'(t) = 2 e^{-t} / (1 - 2t)^2
/// coefficientwise through the same order.
inline bool egf_ode_check(std::size_t order) {
  if (order < 2) throw PreconditionViolation("egf_ode_check needs N >= 2");
  const std::size_t len = order + 2;
  std::vector<mpq_class> a_prime(len);   // coefficients of A'
  std::vector<mpq_class> a_second(len);  // coefficients of A''
  mpz_class fact = 1;
  for (std::size_t n = 0; n < len; ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    a_prime[n] = mpq_class(avoider_count(n + 1), fact);
    a_second[n] = mpq_class(avoider_count(n + 2), fact);
    a_prime[n].canonicalize();
    a_second[n].canonicalize();
  }
  for (std::size_t n = 0; n < order; ++n) {
    mpq_class lhs = a_second[n] - (n >= 1 ? mpq_class(2) * a_second[n - 1] : mpq_class(0));
    mpq_class rhs = mpq_class(3) * a_prime[n] + (n >= 1 ? mpq_class(2) * a_prime[n - 1] : mpq_class(0));
    if (lhs != rhs) return false;
  }
  // 2 e^{-t} (1-2t)^{-2}: e^{-t} has coefficients (-1)^k / k!, and
  // (1-2t)^{-2} has coefficients (k+1) 2^k.
  for (std::size_t n = 0; n < order; ++n) {
    mpq_class sum = 0;
    mpz_class kfact = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) kfact *= static_cast<unsigned long>(k);
      mpq_class e(k % 2 == 0 ? 1 : -1, 1);
      e /= kfact;
      mpz_class geo = mpz_class(static_cast<unsigned long>(n - k + 1)) << static_cast<mp_bitcnt_t>(n - k);
      sum += e * geo;
    }
    if (a_prime[n] != 2 * sum) return false;
  }
  return true;
}

/// Permutations of length n in which every entry matches the 1-box pattern:
/// sum_{j=1}^{floor(n/2)} C(n-j-1, j-1) a_j, and 1 for n in {0, 1}.
inline Integer max_box_count(std::size_t n) {
  if (n <= 1) return 1;
  Integer total = 0;
  for (std::size_t j = 1; j <= n / 2; ++j) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), n - j - 1, j - 1);
    total += binom * avoider_count(j);
  }
  return total;
}

/// Decomposition of a permutation into maximal factors of consecutive values
/// (each strictly increasing or strictly decreasing by one).
struct BlockDecomposition {
  SignedPermutation basis;
  std::vector<int> lengths;  // block lengths in positional order
};

inline BlockDecomposition decompose_blocks(const Permutation& sigma) {
  const auto v = sigma.values();
  const int n = sigma.size();
  struct Block {
    int start;
    int length;
    bool decreasing;
  };
  std::vector<Block> blocks;
  int i = 0;
  while (i < n) {
    int len = 1;
    int dir = 0;
    if (i + 1 < n && std::abs(v[i + 1] - v[i]) == 1) {
      dir = v[i + 1] - v[i];
      while (i + len < n && v[i + len] - v[i + len - 1] == dir) ++len;
    }
    if (len < 2) {
      throw NotMaximal("entry " + std::to_string(v[i]) + " at position " + std::to_string(i + 1) +
                       " has no neighbour of adjacent value in " + sigma.to_string());
    }
    blocks.push_back({i, len, dir < 0});
    i += len;
  }
  // Rank blocks by their values: the block holding the smallest values is 1.
  std::vector<int> order(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) order[b] = static_cast<int>(b);
  std::sort(order.begin(), order.end(), [&](int l, int r) {
    return v[blocks[l].start] < v[blocks[r].start];
  });
  std::vector<int> rank(blocks.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r) + 1;

  std::vector<int> values;
  std::vector<bool> bars;
  std::vector<int> lengths;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    values.push_back(rank[b]);
    bars.push_back(blocks[b].decreasing);
    lengths.push_back(blocks[b].length);
  }
  return {SignedPermutation(std::move(values), std::move(bars)), std::move(lengths)};
}

/// The basis permutation of a permutation attaining the maximum 1-box count.
/// Throws NotMaximal if some entry sits in a singleton factor.
inline SignedPermutation basis_permutation(const Permutation& sigma) {
  return decompose_blocks(sigma).basis;
}

/// Inverse of decompose_blocks: expand basis entry i into a run of
/// lengths[i] consecutive values, decreasing iff barred.
inline Permutation assemble_from_basis(const SignedPermutation& basis,
                                       std::span<const int> lengths) {
  const int m = basis.size();
  if (static_cast<int>(lengths.size()) != m)
    throw PreconditionViolation("one block length per basis entry is required");
  std::vector<int> length_of_rank(m + 1);
  for (int i = 0; i < m; ++i) {
    if (lengths[i] < 2) throw PreconditionViolation("block lengths must be at least 2");
    length_of_rank[basis.values()[i]] = lengths[i];
  }
  std::vector<int> first_value(m + 2, 1);
  for (int r = 1; r <= m; ++r) first_value[r + 1] = first_value[r] + length_of_rank[r];
  std::vector<int> out;
  for (int i = 0; i < m; ++i) {
    const int r = basis.values()[i];
    const int lo = first_value[r];
    const int len = length_of_rank[r];
    for (int k = 0; k < len; ++k) out.push_back(basis.barred(i) ? lo + len - 1 - k : lo + k);
  }
  return Permutation(std::move(out));
}

/// Permutations of length n without bonds (Riordan's recurrence).
inline Integer hertzsprung_count(std::size_t n) { return detail::hertzsprung_table().at(n); }

/// Riordan's bond distribution S[n](t) = sum_m S_{n,m} t^m, returned as an
/// IntPoly whose variable marks bonds.
inline IntPoly bond_distribution_poly(std::size_t n) {
  std::vector<IntPoly> s = {IntPoly(1), IntPoly(1), IntPoly{0, 2}, IntPoly{0, 4, 2}};
  const IntPoly one_minus_t{1, -1};
  for (std::size_t k = 4; k <= n; ++k) {
    const long m = static_cast<long>(k);
    IntPoly next = IntPoly{m + 1, -1} * s[k - 1];
    next -= one_minus_t * IntPoly{m - 2, 3} * s[k - 2];
    next -= one_minus_t * one_minus_t * IntPoly{m - 5, 1} * s[k - 3];
    next += one_minus_t * one_minus_t * one_minus_t * IntPoly(m - 3) * s[k - 4];
    s.push_back(std::move(next));
  }
  return s[n];
}

/// First N+1 coefficients of sum_n n! x^n (1-x)^n / (1+x)^n.
inline std::vector<Integer> flajolet_series(std::size_t order) {
  // ratio = (1-x)/(1+x) = 1 - 2x + 2x^2 - 2x^3 + ...
  std::vector<Integer> ratio_coeffs(order + 1);
  for (std::size_t k = 0; k <= order; ++k)
    ratio_coeffs[k] = k == 0 ? 1 : (k % 2 == 1 ? -2 : 2);
  const IntPoly ratio(std::move(ratio_coeffs));
  IntPoly sum;
  IntPoly power(1);  // x^n ratio^n, truncated
  Integer fact = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) {
      fact *= static_cast<unsigned long>(n);
      power = (power * ratio).shifted(1).truncated(order);
    }
    sum += power * fact;
  }
  std::vector<Integer> out(order + 1);
  for (std::size_t k = 0; k <= order; ++k) out[k] = sum[k];
  return out;
}

}  // namespace boxpat
