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
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "boxpat/algebra/int_poly.hpp"
#include "boxpat/word_stats.hpp"

namespace boxpat {

/// One row of a wall: brick lengths from left to right.
struct RowConfig {
  std::vector<int> bricks;

  int width() const {
    int w = 0;
    for (int b : bricks) w += b;
    return w;
  }
  /// Internal seam positions (partial sums strictly inside the row).
  std::set<int> seams() const {
    std::set<int> out;
    int pos = 0;
    for (std::size_t i = 0; i + 1 < bricks.size(); ++i) out.insert(pos += bricks[i]);
    return out;
  }
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < bricks.size(); ++i) {
      if (i > 0) out.push_back('+');
      out += std::to_string(bricks[i]);
    }
    return out;
  }
  static RowConfig parse(std::string_view text) {
    RowConfig row;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('+', start);
      if (end == std::string_view::npos) end = text.size();
      const std::string token(text.substr(start, end - start));
      if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("invalid brick '" + token + "' in \"" + std::string(text) + "\"");
      row.bricks.push_back(std::stoi(token));
      start = end + 1;
    }
    return row;
  }
  friend bool operator==(const RowConfig&, const RowConfig&) = default;
  friend auto operator<=>(const RowConfig&, const RowConfig&) = default;
};

inline bool seams_meet(const RowConfig& a, const RowConfig& b) {
  const auto sa = a.seams();
  for (int s : b.seams())
    if (sa.count(s)) return true;
  return false;
}

/// Rows listed bottom to top.
struct LegoWall {
  int width = 0;
  std::vector<RowConfig> rows;

  int height() const { return static_cast<int>(rows.size()); }
  bool is_stable() const {
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
      if (seams_meet(rows[i], rows[i + 1])) return false;
    return true;
  }
  std::string to_string() const {
    std::string out;
    for (const auto& r : rows) out += r.to_string() + "\n";
    return out;
  }
  static LegoWall parse(std::string_view text, int width) {
    LegoWall wall{width, {}};
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (!line.empty()) wall.rows.push_back(RowConfig::parse(line));
    }
    return wall;
  }
  friend bool operator==(const LegoWall&, const LegoWall&) = default;
};

namespace detail {

inline void compose(int remaining, const std::vector<int>& parts, std::vector<int>& prefix,
                    std::vector<RowConfig>& out) {
  if (remaining == 0) {
    out.push_back({prefix});
    return;
  }
  for (int p : parts) {
    if (p > remaining) break;
    prefix.push_back(p);
    compose(remaining - p, parts, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<int> sorted_bricks(std::vector<int> bricks) {
  std::sort(bricks.begin(), bricks.end());
  bricks.erase(std::unique(bricks.begin(), bricks.end()), bricks.end());
  for (int b : bricks)
    if (b < 1) throw PreconditionViolation("brick lengths must be positive");
  return bricks;
}

// Order rows along the conflict path if the seam-conflict graph is a path
// with a loop at every vertex; nullopt otherwise.
inline std::optional<std::vector<RowConfig>> path_order(const std::vector<RowConfig>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return std::nullopt;
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!seams_meet(rows[i], rows[i])) return std::nullopt;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (seams_meet(rows[i], rows[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
      }
    }
  }
  if (edges + 1 != n) return std::nullopt;
  std::vector<std::size_t> ends;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 2) return std::nullopt;
    if (adj[i].size() <= 1) ends.push_back(i);
  }
  if (n == 1) return rows;
  if (ends.size() != 2) return std::nullopt;
  std::size_t cur = rows[ends[0]] < rows[ends[1]] ? ends[0] : ends[1];
  std::vector<RowConfig> out;
  std::vector<bool> seen(n, false);
  for (;;) {
    out.push_back(rows[cur]);
    seen[cur] = true;
    std::optional<std::size_t> next;
    for (std::size_t j : adj[cur])
      if (!seen[j]) next = j;
    if (!next) break;
    cur = *next;
  }
  if (out.size() != n) return std::nullopt;
  return out;
}

}  // namespace detail

/// All compositions of width into the given brick lengths. When the
/// seam-conflict graph is a path with loops the rows are listed along the
/// path, starting from the lexicographically smaller end, so that two rows
/// conflict iff their positions differ by at most 1. Otherwise the order is
/// lexicographic.
inline std::vector<RowConfig> enumerate_row_configs(int width, std::vector<int> bricks) {
  bricks = detail::sorted_bricks(std::move(bricks));
  if (bricks.empty() || width < bricks.front())
    throw PreconditionViolation("width " + std::to_string(width) + " is below the smallest brick");
  std::vector<RowConfig> rows;
  std::vector<int> prefix;
  detail::compose(width, bricks, prefix, rows);
  if (auto path = detail::path_order(rows)) return *path;
  return rows;
}

/// True when enumerate_row_configs returned rows in path order.
inline bool has_path_labeling(const std::vector<RowConfig>& rows) {
  const auto path = detail::path_order(rows);
  return path && *path == rows;
}

/// Number of stable walls of the given height.
inline Integer count_stable_walls(int width, const std::vector<int>& bricks, int height) {
  if (height < 0) throw PreconditionViolation("height must be nonnegative");
  const auto rows = enumerate_row_configs(width, bricks);
  if (height == 0) return 1;
  const std::size_t m = rows.size();
  std::vector<Integer> cur(m, Integer(1));
  for (int h = 1; h < height; ++h) {
    std::vector<Integer> next(m, Integer(0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (!seams_meet(rows[i], rows[j])) next[j] += cur[i];
    cur = std::move(next);
  }
  Integer total = 0;
  for (const auto& c : cur) total += c;
  return total;
}

inline constexpr int kLegoWidth = 7;
inline const std::vector<int> kLegoBricks = {2, 3, 4};

/// Row i of the wall is the configuration labeled w_i.
inline LegoWall lego_encode(const Word& w, int width = kLegoWidth,
                            const std::vector<int>& bricks = kLegoBricks) {
  const auto rows = enumerate_row_configs(width, bricks);
  if (!has_path_labeling(rows))
    throw PreconditionViolation("no path labeling for width " + std::to_string(width));
  if (w.alphabet() != static_cast<int>(rows.size()))
    throw PreconditionViolation("word alphabet must be " + std::to_string(rows.size()));
  if (box1_count_word(w) != 0) throw NotAvoider("word " + w.to_string() + " contains the 1-box pattern");
  LegoWall wall{width, {}};
  for (int c : w.letters()) wall.rows.push_back(rows[static_cast<std::size_t>(c - 1)]);
  return wall;
}

inline Word lego_decode(const LegoWall& wall, const std::vector<int>& bricks = kLegoBricks) {
  const auto rows = enumerate_row_configs(wall.width, bricks);
  if (!has_path_labeling(rows))
    throw PreconditionViolation("no path labeling for width " + std::to_string(wall.width));
  std::vector<int> letters;
  for (const auto& r : wall.rows) {
    auto it = std::find(rows.begin(), rows.end(), r);
    if (it == rows.end())
      throw PreconditionViolation("row " + r.to_string() + " is not a width-" +
                                  std::to_string(wall.width) + " configuration");
    letters.push_back(static_cast<int>(it - rows.begin()) + 1);
  }
  if (!wall.is_stable()) throw NotStable("adjacent rows share a seam");
  return {std::move(letters), static_cast<int>(rows.size())};
}

/// Maximal runs of a binary word all have length >= 2.
inline bool has_no_singleton(std::string_view u) {
  std::size_t i = 0;
  while (i < u.size()) {
    std::size_t j = i;
    while (j < u.size() && u[j] == u[i]) ++j;
    if (j - i == 1) return false;
    i = j;
  }
  return true;
}

/// Binary image of a 1-box avoider over [4]: u1u2 = 00 if w1 is 1 or 2 and
/// 11 otherwise; u_{i+2} repeats u_{i+1} iff w_i is 1 or 4; u_{n+3} = u_{n+2}.
/// With check_avoidance false the rule is applied to any word over [4].
inline std::string word4_to_binary(const Word& w, bool check_avoidance = true) {
  if (w.alphabet() != 4) throw PreconditionViolation("word must be over [4]");
  if (w.size() < 2) throw PreconditionViolation("word must have length >= 2");
  if (check_avoidance && box1_count_word(w) != 0) throw NotAvoider("word " + w.to_string() + " contains the 1-box pattern");
  std::string u = w.at(1) <= 2 ? "00" : "11";
  for (int c : w.letters()) {
    const char prev = u.back();
    const bool repeat = c == 1 || c == 4;
    u.push_back(repeat ? prev : (prev == '0' ? '1' : '0'));
  }
  u.push_back(u.back());
  return u;
}

inline Word binary_to_word4(std::string_view u) {
  if (u.find_first_not_of("01") != std::string_view::npos)
    throw ParseError("not a binary word: \"" + std::string(u) + "\"");
  if (u.size() < 5) throw PreconditionViolation("binary word must have length >= 5");
  if (!has_no_singleton(u)) throw HasSingleton("binary word " + std::string(u) + " has a singleton");
  const std::size_t n = u.size() - 3;
  std::vector<int> letters;
  for (std::size_t i = 0; i < n; ++i) {
    const bool repeat = u[i + 2] == u[i + 1];
    int c = 0;
    if (i == 0) {
      c = u[0] == '0' ? (repeat ? 1 : 2) : (repeat ? 4 : 3);
    } else {
      const int p = letters.back();
      if (repeat) c = (p == 1 || p == 2) ? 4 : 1;
      else if (p == 1) c = 3;
      else if (p == 4) c = 2;
      else throw PreconditionViolation("binary word " + std::string(u) + " has no preimage");
    }
    letters.push_back(c);
  }
  return {std::move(letters), 4};
}

/// F_0 = F_1 = 1.
inline Integer fibonacci(int n) {
  Integer a = 1, b = 1;
  for (int i = 0; i < n; ++i) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  return a;
}

struct FibonacciCounts {
  Integer rect12_avoiders_5;  // words of [5]^n with no (1,2)-rectangle match
  Integer box1_avoiders_4;    // words of [4]^n with no 1-box match
  Integer no_singleton_binary;  // binary words of length n+3
  Integer formula;            // F_{n-1} + F_{n+2}

  bool agree() const {
    return rect12_avoiders_5 == formula && box1_avoiders_4 == formula &&
           no_singleton_binary == formula;
  }
};

inline FibonacciCounts fibonacci_counts(int n) {
  if (n < 2) throw PreconditionViolation("n must be >= 2");
  FibonacciCounts c;
  for_each_word(5, n, [&](const Word& w) {
    if (rect_count_word(w, 1, 2) == 0) ++c.rect12_avoiders_5;
  });
  for_each_word(4, n, [&](const Word& w) {
    if (box1_count_word(w) == 0) ++c.box1_avoiders_4;
  });
  const std::size_t m = static_cast<std::size_t>(n) + 3;
  for (std::size_t bits = 0; bits < (std::size_t{1} << m); ++bits) {
    std::string u(m, '0');
    for (std::size_t i = 0; i < m; ++i)
      if (bits >> (m - 1 - i) & 1) u[i] = '1';
    if (has_no_singleton(u)) ++c.no_singleton_binary;
  }
  c.formula = fibonacci(n - 1) + fibonacci(n + 2);
  return c;
}

inline bool fibonacci_count_check(int n) { return fibonacci_counts(n).agree(); }

}  // namespace boxpat
