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

#include <algorithm>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "boxpat/algebra/int_poly.hpp"
#include "boxpat/bijections.hpp"
#include "boxpat/signed_perms.hpp"
#include "boxpat/word_stats.hpp"

/// \file
/// Exhaustive enumerators. Every object of the requested size is visited in
/// lexicographic order and its statistic tallied exactly.

namespace boxpat {

/// A statistic name as used on the command line: bond, box1, kbox:k,
/// rect:a,b, kbond:k or badpairs.
struct Statistic {
  enum class Kind { kBond, kBox1, kRect, kKBond, kBadPairs };
  Kind kind = Kind::kBond;
  int a = 0;
  int b = 0;

  static Statistic bond() { return {Kind::kBond}; }
  static Statistic box1() { return {Kind::kBox1}; }
  static Statistic rect(int a, int b) { return {Kind::kRect, a, b}; }
  static Statistic kbox(int k) { return {Kind::kRect, k, k}; }
  static Statistic kbond(int k) { return {Kind::kKBond, k}; }
  static Statistic bad_pairs() { return {Kind::kBadPairs}; }

  static Statistic parse(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const std::string_view args = colon == std::string_view::npos ? "" : text.substr(colon + 1);
    auto ints = [&](std::size_t count) {
      std::vector<int> v;
      std::size_t start = 0;
      while (start <= args.size()) {
        std::size_t end = args.find(',', start);
        if (end == std::string_view::npos) end = args.size();
        const std::string token(args.substr(start, end - start));
        if (token.empty() || token.size() > 6 || token.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError("invalid token '" + token + "' in statistic '" + std::string(text) + "'");
        v.push_back(std::stoi(token));
        start = end + 1;
      }
      if (v.size() != count || std::count(v.begin(), v.end(), 0) > 0)
        throw ParseError("invalid statistic '" + std::string(text) + "'");
      return v;
    };
    if (colon == std::string_view::npos) {
      if (head == "bond") return bond();
      if (head == "box1") return box1();
      if (head == "badpairs") return bad_pairs();
    } else {
      if (head == "kbox") return kbox(ints(1)[0]);
      if (head == "kbond") return kbond(ints(1)[0]);
      if (head == "rect") {
        const auto v = ints(2);
        return rect(v[0], v[1]);
      }
    }
    throw ParseError("unknown statistic '" + std::string(text) + "'");
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::kBond: return "bond";
      case Kind::kBox1: return "box1";
      case Kind::kRect: return "rect:" + std::to_string(a) + "," + std::to_string(b);
      case Kind::kKBond: return "kbond:" + std::to_string(a);
      case Kind::kBadPairs: return "badpairs";
    }
    return "";
  }
};

inline int evaluate(const Statistic& s, const Permutation& sigma) {
  switch (s.kind) {
    case Statistic::Kind::kBond: return bond_count(sigma);
    case Statistic::Kind::kBox1: return box1_count(sigma);
    case Statistic::Kind::kRect: return rect_count(sigma, s.a, s.b);
    default: throw PreconditionViolation("statistic " + s.to_string() + " does not apply to permutations");
  }
}

inline int evaluate(const Statistic& s, const Word& w) {
  switch (s.kind) {
    case Statistic::Kind::kBond: return k_bond_count(w, 1);
    case Statistic::Kind::kBox1: return box1_count_word(w);
    case Statistic::Kind::kRect: return rect_count_word(w, s.a, s.b);
    case Statistic::Kind::kKBond: return k_bond_count(w, s.a);
    default: throw PreconditionViolation("statistic " + s.to_string() + " does not apply to words");
  }
}

inline int evaluate(const Statistic& s, const SignedPermutation& pi) {
  if (s.kind != Statistic::Kind::kBadPairs)
    throw PreconditionViolation("statistic " + s.to_string() + " does not apply to signed permutations");
  return bad_pair_count(pi);
}

/// Coefficient of x^m counts objects of size n with statistic value m.
struct Distribution {
  std::string kind;  // "perm", "sperm", "word"
  int n = 0;
  std::string statistic;
  IntPoly poly;

  Integer total() const { return poly.eval(1); }
};

struct OracleBounds {
  int max_perm_length = 9;
  int max_signed_length = 7;
  Integer max_words = 100000000;
  Integer max_walls = 100000000;
};

namespace detail {

class Tally {
 public:
  void add(int value) {
    const auto v = static_cast<std::size_t>(value);
    if (counts_.size() <= v) counts_.resize(v + 1, 0);
    ++counts_[v];
  }
  IntPoly poly() const {
    std::vector<Integer> c;
    c.reserve(counts_.size());
    for (auto n : counts_) c.emplace_back(static_cast<unsigned long>(n));
    return IntPoly(std::move(c));
  }

 private:
  std::vector<unsigned long long> counts_;
};

inline Integer ipow(long base, int e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

}  // namespace detail

/// Visit S_n in lexicographic order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

/// Visit B_n: permutations in lexicographic order, bar patterns in binary
/// order within each.
template <typename Fn>
void for_each_signed_permutation(int n, Fn&& fn) {
  for_each_permutation(n, [&](const Permutation& sigma) {
    const auto values = sigma.values();
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      std::vector<bool> bars(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) bars[i] = (mask >> (n - 1 - i)) & 1;
      fn(SignedPermutation({values.begin(), values.end()}, std::move(bars)));
    }
  });
}

inline Distribution perm_distribution(int n, const Statistic& stat, const OracleBounds& bounds = {}) {
  if (n < 0) throw PreconditionViolation("n must be nonnegative");
  if (n > bounds.max_perm_length)
    throw BoundExceeded("permutation oracle limited to n <= " + std::to_string(bounds.max_perm_length));
  detail::Tally tally;
  for_each_permutation(n, [&](const Permutation& sigma) { tally.add(evaluate(stat, sigma)); });
  return {"perm", n, stat.to_string(), tally.poly()};
}

inline Distribution signed_distribution(int n, const OracleBounds& bounds = {}) {
  if (n < 0) throw PreconditionViolation("n must be nonnegative");
  if (n > bounds.max_signed_length)
    throw BoundExceeded("signed permutation oracle limited to n <= " +
                        std::to_string(bounds.max_signed_length));
  detail::Tally tally;
  for_each_signed_permutation(n, [&](const SignedPermutation& pi) { tally.add(bad_pair_count(pi)); });
  return {"sperm", n, Statistic::bad_pairs().to_string(), tally.poly()};
}

inline Distribution word_distribution(int alphabet, int n, const Statistic& stat,
                                      const OracleBounds& bounds = {}) {
  if (alphabet < 1 || n < 0) throw PreconditionViolation("need l >= 1 and n >= 0");
  if (detail::ipow(alphabet, n) > bounds.max_words)
    throw BoundExceeded("word oracle limited to l^n <= " + to_decimal(bounds.max_words));
  detail::Tally tally;
  for_each_word(alphabet, n, [&](const Word& w) { tally.add(evaluate(stat, w)); });
  return {"word", n, stat.to_string(), tally.poly()};
}

/// Number of stable walls found by trying every stack of rows.
inline Integer wall_distribution(int width, const std::vector<int>& bricks, int height,
                                 const OracleBounds& bounds = {}) {
  if (height < 0) throw PreconditionViolation("height must be nonnegative");
  const auto rows = enumerate_row_configs(width, bricks);
  const int m = static_cast<int>(rows.size());
  if (detail::ipow(m, height) > bounds.max_walls)
    throw BoundExceeded("wall oracle limited to " + to_decimal(bounds.max_walls) + " stacks");
  Integer count = 0;
  for_each_word(m, height, [&](const Word& labels) {
    LegoWall wall{width, {}};
    for (int c : labels.letters()) wall.rows.push_back(rows[static_cast<std::size_t>(c - 1)]);
    if (wall.is_stable()) ++count;
  });
  return count;
}

}  // namespace boxpat
