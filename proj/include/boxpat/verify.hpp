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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "boxpat/algebra/parse.hpp"
#include "boxpat/bijections.hpp"
#include "boxpat/golden.hpp"
#include "boxpat/oracles.hpp"
#include "boxpat/signed_perms.hpp"
#include "boxpat/transfer.hpp"

/// \file
/// Recompute each published sequence or closed form from first principles
/// and compare it with the golden data.

namespace boxpat {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // expected and actual values on failure
  bool note = false;   // informational finding; never fails the report
};

struct Report {
  std::string target;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.note && !c.pass) return false;
    return true;
  }
};

inline std::string join(const std::vector<Integer>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += to_decimal(v[i]);
  }
  return out;
}

namespace detail {

class ReportBuilder {
 public:
  explicit ReportBuilder(std::string target) { report_.target = std::move(target); }

  void expect(std::string name, bool pass, std::string detail = {}) {
    report_.checks.push_back({std::move(name), pass, pass ? std::string() : std::move(detail), false});
  }
  void expect_seq(std::string name, const std::vector<Integer>& expected,
                  const std::vector<Integer>& actual) {
    expect(std::move(name), expected == actual,
           "expected " + join(expected) + "; got " + join(actual));
  }
  void expect_equal(std::string name, const RationalT& expected, const RationalT& actual) {
    expect(std::move(name), expected == actual,
           "expected " + expected.to_string() + "; got " + actual.to_string());
  }
  void note(std::string name, std::string detail) {
    report_.checks.push_back({std::move(name), true, std::move(detail), true});
  }
  Report take() { return std::move(report_); }

 private:
  Report report_;
};

inline std::vector<Integer> head(const std::vector<Integer>& v, std::size_t count) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(count, v.size()))};
}

inline std::vector<Integer> tail(const std::vector<Integer>& v, std::size_t from) {
  return {v.begin() + static_cast<std::ptrdiff_t>(std::min(from, v.size())), v.end()};
}

inline RationalT golden_t(std::string_view key) {
  return to_rational_t(parse_rational_gf(golden::formula(key)));
}

inline std::vector<Integer> to_integers(const std::vector<long>& v) {
  std::vector<Integer> out;
  for (long c : v) out.emplace_back(c);
  return out;
}

// Words of [l]^n whose statistic equals n, by exhaustive scan.
inline Integer count_full_words(int alphabet, int n, const Statistic& stat) {
  Integer count = 0;
  for_each_word(alphabet, n, [&](const Word& w) {
    if (evaluate(stat, w) == n) ++count;
  });
  return count;
}

}  // namespace detail

/// hardin-3, hardin-4, hardin-5: words over [l] in which every letter
/// matches the 1-box pattern.
inline Report verify_hardin(int alphabet) {
  detail::ReportBuilder r("hardin-" + std::to_string(alphabet));
  const std::string id = alphabet == 3 ? "A221591" : alphabet == 4 ? "A221569" : "A221592";
  const auto& table = golden::table(id);
  const auto expected = table.values();
  const std::size_t count = expected.size();
  const std::string lk = std::to_string(alphabet) + ",1";

  const RationalT gf = maxstat_gf(rect1k_gf(alphabet, 1));
  r.expect_equal("closed form equals the reference function", detail::golden_t("maxstat_gf:" + lk), gf);
  r.expect_seq("closed form expansion equals " + id, expected, gf.series(count - 1));
  r.expect_seq("transfer series equals " + id, expected,
               maxstat_series(rect1k_series(alphabet, 1, count - 1)));
  std::vector<Integer> brute;
  for (int n = 0; n <= 8; ++n) brute.push_back(detail::count_full_words(alphabet, n, Statistic::box1()));
  r.expect_seq("oracle counts n <= 8 equal " + id, detail::head(expected, 9), brute);

  const Recurrence rec = recurrence_from_gf(gf);
  r.expect_seq("recurrence reproduces " + id, expected,
               rec.extend(detail::head(expected, static_cast<std::size_t>(rec.valid_from) + 1), count));
  const auto extended = rec.extend(gf.series(static_cast<std::size_t>(rec.valid_from)), rec.valid_from + 21);
  r.expect_seq("recurrence matches the expansion for 20 further terms",
               gf.series(static_cast<std::size_t>(rec.valid_from) + 20), extended);

  for (const auto& stated : golden::stated_recurrences()) {
    if (stated.sequence_id != id) continue;
    const auto stated_coeffs = detail::to_integers(stated.coeffs);
    std::vector<Integer> derived = rec.coeffs;
    while (!derived.empty() && derived.back() == 0) derived.pop_back();
    const bool same = derived == stated_coeffs && rec.valid_from <= stated.valid_from;
    if (alphabet != 5) {
      r.expect("closed-form recurrence (" + join(derived) + ") equals the stated one", same,
               "stated " + join(stated_coeffs) + " for n > " + std::to_string(stated.valid_from) +
                   "; derived " + join(derived) + " for n > " + std::to_string(rec.valid_from));
      continue;
    }
    Recurrence as_stated{stated_coeffs, stated.valid_from};
    const auto from_stated =
        as_stated.extend(detail::head(expected, static_cast<std::size_t>(stated.valid_from) + 1), count);
    std::string where = "reproduces the sequence";
    for (std::size_t n = 0; n < count; ++n) {
      if (from_stated[n] != expected[n]) {
        where = "first disagrees at n = " + std::to_string(n) + " (" + to_decimal(from_stated[n]) +
                " vs " + to_decimal(expected[n]) + ")";
        break;
      }
    }
    if (same) {
      r.note("stated recurrence", "agrees with the closed form");
    } else {
      r.note("stated recurrence is inconsistent with the reference function",
             "stated " + join(stated_coeffs) + " for n > " + std::to_string(stated.valid_from) +
                 " " + where + "; closed form gives " + join(derived) + " for n > " +
                 std::to_string(rec.valid_from));
    }
  }
  return r.take();
}

/// Stable LEGO walls of width 7 with bricks 2, 3, 4.
inline Report verify_mathar(int max_roundtrip_height = 7) {
  detail::ReportBuilder r("mathar");
  const auto& table = golden::table("lego-walls");
  const auto expected = table.values();
  std::vector<Integer> dp, oracle;
  for (int h = 1; h <= static_cast<int>(expected.size()); ++h)
    dp.push_back(count_stable_walls(kLegoWidth, kLegoBricks, h));
  r.expect_seq("wall counts for heights 1..8", expected, dp);
  for (int h = 1; h <= 5; ++h) oracle.push_back(wall_distribution(kLegoWidth, kLegoBricks, h));
  r.expect_seq("wall oracle for heights 1..5", detail::head(expected, 5), oracle);

  const RationalT candidate = detail::golden_t("lego_walls_gf");
  r.expect_seq("candidate function expands to the wall counts", expected,
               detail::tail(candidate.series(expected.size()), 1));
  const RationalGF a51 = kbond_gf(5, 1);
  const RationalT at_zero(a51.num().at_x(0), a51.den().at_x(0));
  r.expect_equal("candidate function equals the 5-letter k-bond function at x = 0", candidate,
                 at_zero);

  const auto rows = enumerate_row_configs(kLegoWidth, kLegoBricks);
  bool adjacency = true;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      adjacency = adjacency && (seams_meet(rows[i], rows[j]) == (i + 1 >= j && j + 1 >= i));
  r.expect("row conflicts are exactly label differences <= 1", adjacency && rows.size() == 5);

  bool round_trip = true;
  std::string failure;
  for (int h = 0; h <= max_roundtrip_height && round_trip; ++h) {
    Integer words = 0;
    for_each_word(5, h, [&](const Word& w) {
      if (!round_trip || box1_count_word(w) != 0) return;
      ++words;
      const LegoWall wall = lego_encode(w);
      if (!wall.is_stable() || lego_decode(wall) != w) {
        round_trip = false;
        failure = "word " + w.to_string();
      }
    });
    if (round_trip && words != count_stable_walls(kLegoWidth, kLegoBricks, h)) {
      round_trip = false;
      failure = "avoider count differs from wall count at height " + std::to_string(h);
    }
  }
  r.expect("encode/decode round trip for heights <= " + std::to_string(max_roundtrip_height), round_trip,
           failure);
  return r.take();
}

/// 2-smooth words; the l = 5 function is checked against the expansion.
inline Report verify_barker() {
  detail::ReportBuilder r("barker");
  const char* ids[] = {"A055099", "A126392", "A126393", "A126394"};
  for (int l = 4; l <= 7; ++l) {
    const std::string lk = std::to_string(l) + ",2";
    const auto expected = golden::table(ids[l - 4]).values();
    const RationalT gf = smooth_gf_from_system(l, 2);
    r.expect_equal("smooth_gf:" + lk + " equals the reference function", detail::golden_t("smooth_gf:" + lk),
                   gf);
    r.expect_seq("smooth series l=" + std::to_string(l) + " equals " + ids[l - 4], expected,
                 smooth_series(l, 2, expected.size() - 1));
    r.expect_seq("closed form l=" + std::to_string(l) + " expands to " + ids[l - 4], expected,
                 gf.series(expected.size() - 1));
    std::vector<Integer> brute;
    for (int n = 0; n <= 6; ++n) {
      Integer c = 0;
      for_each_word(l, n, [&](const Word& w) { c += is_k_smooth(w, 2) ? 1 : 0; });
      brute.push_back(c);
    }
    r.expect_seq("oracle counts l=" + std::to_string(l) + ", n <= 6", detail::head(expected, 7), brute);
  }
  return r.take();
}

/// Bond-free permutations and the bond distribution.
inline Report verify_riordan() {
  detail::ReportBuilder r("riordan");
  const auto expected = golden::table("A002464").values();
  std::vector<Integer> rec, brute;
  for (std::size_t n = 0; n < expected.size(); ++n) rec.push_back(hertzsprung_count(n));
  r.expect_seq("recurrence equals A002464", expected, rec);
  bool dist_ok = true, totals_ok = true;
  std::string dist_detail;
  Integer factorial = 1;
  for (int n = 0; n <= 8; ++n) {
    if (n > 0) factorial *= n;
    const IntPoly bonds = perm_distribution(n, Statistic::bond()).poly;
    brute.push_back(bonds[0]);
    if (bonds != bond_distribution_poly(static_cast<std::size_t>(n))) {
      dist_ok = false;
      dist_detail = "n=" + std::to_string(n) + ": oracle " + bonds.to_string('t') + ", recurrence " +
                    bond_distribution_poly(static_cast<std::size_t>(n)).to_string('t');
    }
    totals_ok = totals_ok && bond_distribution_poly(static_cast<std::size_t>(n)).eval(1) == factorial;
  }
  r.expect_seq("oracle bond-free counts n <= 8", detail::head(expected, 9), brute);
  r.expect("S[2] = 2t and S[3] = 4t+2t^2",
           bond_distribution_poly(2) == IntPoly{0, 2} && bond_distribution_poly(3) == IntPoly{0, 4, 2});
  r.expect("S[n] equals the oracle bond distribution for n <= 8", dist_ok, dist_detail);
  r.expect("S[n](1) = n! for n <= 8", totals_ok);
  bool shift_ok = true;
  std::string shift_detail;
  for (int n = 2; n <= 7; ++n) {
    const Integer two = perm_distribution(n, Statistic::box1()).poly[2];
    const Integer three = perm_distribution(n + 1, Statistic::box1()).poly[3];
    const Integer s1 = bond_distribution_poly(static_cast<std::size_t>(n))[1];
    if (two != s1 || three != s1) {
      shift_ok = false;
      shift_detail = "n=" + std::to_string(n) + ": [t]S[n]=" + to_decimal(s1) + ", bx=2: " +
                     to_decimal(two) + ", bx=3 in S_{n+1}: " + to_decimal(three);
    }
  }
  r.expect("[t]S[n] = #{bx=2 in S_n} = #{bx=3 in S_(n+1)} for n <= 7", shift_ok, shift_detail);
  return r.take();
}

inline Report verify_flajolet() {
  detail::ReportBuilder r("flajolet");
  const auto expected = golden::table("A002464").values();
  const auto series = flajolet_series(expected.size() - 1);
  r.expect_seq("series coefficients equal A002464", expected, series);
  std::vector<Integer> rec;
  for (std::size_t n = 0; n < series.size(); ++n) rec.push_back(hertzsprung_count(n));
  r.expect_seq("series coefficients equal the recurrence", rec, series);
  return r.take();
}

/// Permutations with the maximum number of 1-box occurrences.
inline Report verify_maxbox() {
  detail::ReportBuilder r("maxbox");
  const auto expected = golden::table("maxbox").values();
  std::vector<Integer> formula, brute;
  for (std::size_t n = 0; n < expected.size(); ++n) formula.push_back(max_box_count(n));
  r.expect_seq("formula equals the reference list", expected, formula);
  bool round_trip = true, avoids = true;
  std::string failure;
  for (int n = 0; n <= 8; ++n) {
    Integer c = 0;
    for_each_permutation(n, [&](const Permutation& sigma) {
      if (box1_count(sigma) != n) return;
      if (n >= 2) {
        const BlockDecomposition d = decompose_blocks(sigma);
        if (assemble_from_basis(d.basis, d.lengths) != sigma) {
          round_trip = false;
          failure = sigma.to_string();
        }
        avoids = avoids && bad_pair_count(d.basis) == 0;
      }
      ++c;
    });
    brute.push_back(n <= 1 ? Integer(1) : c);
  }
  r.expect_seq("oracle counts n <= 8 (n = 0, 1 fixed at 1)", detail::head(expected, 9), brute);
  r.expect("basis permutation and block lengths rebuild every maximal permutation", round_trip, failure);
  r.expect("every basis permutation avoids bad pairs", avoids);
  r.expect("basis of 543126798 is -2,1,3,-4",
           basis_permutation(Permutation::parse("543126798")).to_string() == "-2,1,3,-4");
  return r.take();
}

inline Report verify_fibonacci() {
  detail::ReportBuilder r("fibonacci");
  for (int n = 2; n <= 10; ++n) {
    const FibonacciCounts c = fibonacci_counts(n);
    r.expect("n=" + std::to_string(n) + ": three counts equal F(n-1)+F(n+2) = " + to_decimal(c.formula),
             c.agree(),
             "(1,2)-avoiders over [5]: " + to_decimal(c.rect12_avoiders_5) + ", 1-box avoiders over [4]: " +
                 to_decimal(c.box1_avoiders_4) + ", no-singleton binary: " +
                 to_decimal(c.no_singleton_binary));
  }
  for (const auto& [w, u] : golden::binary_map_table()) {
    const std::string got = word4_to_binary(Word::parse(w, 4));
    r.expect(std::string(w) + " -> " + std::string(u), got == u, "got " + got);
  }
  const Word example_word = Word::parse("3413142", 4);
  const std::string example = word4_to_binary(example_word, false);
  r.expect("3413142 -> 1100011100", example == "1100011100", "got " + example);
  if (box1_count_word(example_word) != 0)
    r.note("3413142 is not a 1-box avoider",
           "it has " + std::to_string(box1_count_word(example_word)) +
               " 1-box occurrences; the map was applied without the avoidance check");
  bool round_trip = true;
  std::string failure;
  for (std::size_t m = 5; m <= 12; ++m) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << m); ++bits) {
      std::string u(m, '0');
      for (std::size_t i = 0; i < m; ++i)
        if (bits >> (m - 1 - i) & 1) u[i] = '1';
      if (!has_no_singleton(u)) continue;
      const Word w = binary_to_word4(u);
      if (box1_count_word(w) != 0 || word4_to_binary(w) != u) {
        round_trip = false;
        failure = u;
      }
    }
  }
  r.expect("binary round trip for lengths 5..12", round_trip, failure);
  return r.take();
}

inline const std::vector<std::string>& verify_targets() {
  static const std::vector<std::string> kTargets = {"hardin-3", "hardin-4", "hardin-5", "mathar",  "barker",
                                                    "riordan",  "flajolet", "maxbox",   "fibonacci"};
  return kTargets;
}

/// Throws PreconditionViolation for an unknown target.
inline Report verify_target(std::string_view target) {
  if (target == "hardin-3") return verify_hardin(3);
  if (target == "hardin-4") return verify_hardin(4);
  if (target == "hardin-5") return verify_hardin(5);
  if (target == "mathar") return verify_mathar();
  if (target == "barker") return verify_barker();
  if (target == "riordan") return verify_riordan();
  if (target == "flajolet") return verify_flajolet();
  if (target == "maxbox") return verify_maxbox();
  if (target == "fibonacci") return verify_fibonacci();
  throw PreconditionViolation("unknown verify target '" + std::string(target) + "'");
}

}  // namespace boxpat
