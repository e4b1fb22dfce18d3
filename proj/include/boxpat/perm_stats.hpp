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
#include <cstdlib>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boxpat/errors.hpp"

namespace boxpat {

/// Split a one-line sequence: comma separated if a comma is present,
/// otherwise one digit per entry.
inline std::vector<int> parse_sequence(std::string_view text) {
  std::vector<int> out;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw ParseError("invalid token '" + std::string(1, c) + "' in \"" + std::string(text) + "\"");
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string token(text.substr(start, end - start));
    char* stop = nullptr;
    const long v = std::strtol(token.c_str(), &stop, 10);
    if (token.empty() || *stop != '\0')
      throw ParseError("invalid token '" + token + "' in \"" + std::string(text) + "\"");
    out.push_back(static_cast<int>(v));
    start = end + 1;
  }
  return out;
}

inline std::string format_sequence(std::span<const int> values) {
  bool compact = values.size() <= 9;
  for (int v : values) compact = compact && v >= 0 && v <= 9;
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!compact && i > 0) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

/// A permutation of 1..n in one-line notation; positions and values 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
      if (v < 1 || v > static_cast<int>(values_.size()) || seen[v])
        throw PreconditionViolation("not a permutation of 1..n: " + format_sequence(values_));
      seen[v] = true;
    }
  }
  /// Throws ParseError for malformed text or a sequence that is not a
  /// permutation.
  static Permutation parse(std::string_view text) {
    try {
      return Permutation(parse_sequence(text));
    } catch (const PreconditionViolation& e) {
      throw ParseError(e.what());
    }
  }
  static Permutation identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(values_.size()); }
  /// sigma_i for 1-based position i.
  int at(int i) const { return values_.at(i - 1); }
  std::span<const int> values() const { return values_; }

  Permutation reversed() const { return Permutation({values_.rbegin(), values_.rend()}); }
  Permutation complemented() const {
    std::vector<int> v(values_);
    for (int& e : v) e = size() + 1 - e;
    return Permutation(std::move(v));
  }

  std::string to_string() const { return format_sequence(values_); }
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// Positions i (1-based) such that some j with 0 < |i-j| <= a has
/// |seq_i - seq_j| <= b. Shared by permutations and words.
inline std::set<int> rectangle_match_set(std::span<const int> seq, int a, int b) {
  if (a < 1 || b < 1) throw PreconditionViolation("rectangle dimensions must be positive");
  const int n = static_cast<int>(seq.size());
  std::set<int> out;
  for (int i = 0; i < n; ++i) {
    for (int j = std::max(0, i - a); j <= std::min(n - 1, i + a); ++j) {
      if (j != i && std::abs(seq[i] - seq[j]) <= b) {
        out.insert(i + 1);
        break;
      }
    }
  }
  return out;
}

/// |rectangle_match_set(seq, a, b)| without building the set.
inline int rectangle_match_count(std::span<const int> seq, int a, int b) {
  if (a < 1 || b < 1) throw PreconditionViolation("rectangle dimensions must be positive");
  const int n = static_cast<int>(seq.size());
  int count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = std::max(0, i - a); j <= std::min(n - 1, i + a); ++j) {
      if (j != i && std::abs(seq[i] - seq[j]) <= b) {
        ++count;
        break;
      }
    }
  }
  return count;
}

inline std::set<int> box_match_set(const Permutation& sigma, int a, int b) {
  return rectangle_match_set(sigma.values(), a, b);
}

/// (a,b)-rec(sigma).
inline int rect_count(const Permutation& sigma, int a, int b) {
  return rectangle_match_count(sigma.values(), a, b);
}

/// bx[sigma]: entries with a neighbour of adjacent value.
inline int box1_count(const Permutation& sigma) {
  const auto v = sigma.values();
  const int n = sigma.size();
  int count = 0;
  for (int i = 0; i < n; ++i) {
    const bool left = i > 0 && std::abs(v[i] - v[i - 1]) == 1;
    const bool right = i + 1 < n && std::abs(v[i] - v[i + 1]) == 1;
    count += (left || right) ? 1 : 0;
  }
  return count;
}

/// Adjacent pairs s(s+1) or (s+1)s.
inline int bond_count(const Permutation& sigma) {
  const auto v = sigma.values();
  int count = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) count += std::abs(v[i] - v[i + 1]) == 1 ? 1 : 0;
  return count;
}

}  // namespace boxpat
