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

#include <cstdlib>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boxpat/perm_stats.hpp"

namespace boxpat {

/// A word over [alphabet] = {1..alphabet}. The alphabet is part of the value:
/// the same letters over a larger alphabet are a different word.
class Word {
 public:
  Word() = default;
  Word(std::vector<int> letters, int alphabet) : letters_(std::move(letters)), alphabet_(alphabet) {
    if (alphabet_ < 1) throw PreconditionViolation("alphabet size must be positive");
    for (int c : letters_)
      if (c < 1 || c > alphabet_)
        throw PreconditionViolation("letter " + std::to_string(c) + " outside [1.." +
                                    std::to_string(alphabet_) + "]");
  }
  static Word parse(std::string_view text, int alphabet) {
    if (alphabet < 1) throw PreconditionViolation("alphabet size must be positive");
    try {
      return {parse_sequence(text), alphabet};
    } catch (const PreconditionViolation& e) {
      throw ParseError(e.what());
    }
  }

  int size() const { return static_cast<int>(letters_.size()); }
  int alphabet() const { return alphabet_; }
  std::span<const int> letters() const { return letters_; }
  int at(int i) const { return letters_.at(i - 1); }

  Word reversed() const { return {{letters_.rbegin(), letters_.rend()}, alphabet_}; }
  Word complemented() const {
    std::vector<int> v(letters_);
    for (int& c : v) c = alphabet_ + 1 - c;
    return {std::move(v), alphabet_};
  }

  std::string to_string() const { return format_sequence(letters_); }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
  int alphabet_ = 1;
};

/// Adjacent pairs with |w_i - w_{i+1}| <= k.
inline int k_bond_count(const Word& w, int k) {
  if (k < 1) throw PreconditionViolation("k must be positive");
  const auto v = w.letters();
  int count = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) count += std::abs(v[i] - v[i + 1]) <= k ? 1 : 0;
  return count;
}

/// bx[w]: letters with a neighbour differing by at most 1.
inline int box1_count_word(const Word& w) {
  const auto v = w.letters();
  const std::size_t n = v.size();
  int count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool left = i > 0 && std::abs(v[i] - v[i - 1]) <= 1;
    const bool right = i + 1 < n && std::abs(v[i] - v[i + 1]) <= 1;
    count += (left || right) ? 1 : 0;
  }
  return count;
}

/// (a,b)-rec(w).
inline int rect_count_word(const Word& w, int a, int b) {
  return rectangle_match_count(w.letters(), a, b);
}

inline bool is_k_smooth(const Word& w, int k) {
  return w.size() <= 1 || k_bond_count(w, k) == w.size() - 1;
}

/// Visit every word of [alphabet]^n in lexicographic order.
template <typename Fn>
void for_each_word(int alphabet, int n, Fn&& fn) {
  std::vector<int> letters(static_cast<std::size_t>(n), 1);
  for (;;) {
    fn(Word(letters, alphabet));
    int i = n - 1;
    while (i >= 0 && letters[i] == alphabet) letters[i--] = 1;
    if (i < 0) return;
    ++letters[i];
  }
}

}  // namespace boxpat
