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

// One PASS/FAIL line per acceptance criterion; exits 1 if any fails.
// Every comparison is exact.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "boxpat/verify.hpp"

namespace {

using namespace boxpat;

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void expect_seq(const std::vector<Integer>& expected, const std::vector<Integer>& actual,
                  const std::string& what) {
    expect(expected == actual, what + ": expected " + join(expected) + ", got " + join(actual));
  }
  void expect_report(const Report& r) {
    for (const auto& c : r.checks)
      if (!c.note && !c.pass) failures_.push_back(r.target + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

std::vector<Integer> golden_head(std::string_view id, std::size_t count) {
  auto v = golden::table(id).values();
  v.resize(std::min(count, v.size()));
  return v;
}

RationalGF golden_gf(const std::string& key) { return parse_rational_gf(golden::formula(key)); }

std::string lk(int l, int k) { return std::to_string(l) + "," + std::to_string(k); }

void check_riordan(Criterion& c) {
  const auto list = golden_head("A002464", 11);
  std::vector<Integer> rec;
  for (std::size_t n = 0; n < list.size(); ++n) rec.push_back(hertzsprung_count(n));
  c.expect_seq(list, rec, "recurrence");
  std::vector<Integer> oracle;
  for (int n = 0; n <= 8; ++n) oracle.push_back(perm_distribution(n, Statistic::bond()).poly[0]);
  c.expect_seq(golden_head("A002464", 9), oracle, "bond-free oracle");
  c.expect_seq(golden_head("A002464", 11), flajolet_series(10), "continued fraction series");
}

void check_bond_polys(Criterion& c) {
  c.expect(bond_distribution_poly(2) == IntPoly{0, 2}, "S[2] = 2t");
  c.expect(bond_distribution_poly(3) == IntPoly{0, 4, 2}, "S[3] = 4t+2t^2");
  Integer factorial = 1;
  for (int n = 0; n <= 8; ++n) {
    if (n > 0) factorial *= n;
    const IntPoly s = bond_distribution_poly(static_cast<std::size_t>(n));
    const IntPoly oracle = perm_distribution(n, Statistic::bond()).poly;
    c.expect(s == oracle, "S[" + std::to_string(n) + "] = " + s.to_string('t') + ", oracle " + oracle.to_string('t'));
    c.expect(s.eval(1) == factorial, "S[" + std::to_string(n) + "](1) = n!");
  }
  for (int n = 2; n <= 7; ++n) {
    const Integer two = perm_distribution(n, Statistic::box1()).poly[2];
    const Integer three = perm_distribution(n + 1, Statistic::box1()).poly[3];
    c.expect(two == three, "bx=2 in S_" + std::to_string(n) + " is " + to_decimal(two) + ", bx=3 in S_" +
                               std::to_string(n + 1) + " is " + to_decimal(three));
  }
}

void check_signed_avoiders(Criterion& c) {
  const auto list = golden_head("signed-avoiders", 8);
  std::vector<Integer> rec, oracle;
  for (std::size_t n = 0; n < list.size(); ++n) rec.push_back(avoider_count(n));
  c.expect_seq(list, rec, "recurrence");
  for (int n = 0; n <= 6; ++n) oracle.push_back(signed_distribution(n).poly[0]);
  c.expect_seq(golden_head("signed-avoiders", 7), oracle, "B_n oracle");
  c.expect(egf_ode_check(10), "differential equation coefficients through n = 10");
}

void check_max_occurrence(Criterion& c) {
  const auto list = golden_head("maxbox", 10);
  std::vector<Integer> formula;
  for (std::size_t n = 0; n < list.size(); ++n) formula.push_back(max_box_count(n));
  c.expect_seq(list, formula, "formula");
  c.expect_report(verify_maxbox());
}

void check_bond_gfs(Criterion& c) {
  for (int k = 1; k <= 2; ++k) {
    for (int l = k == 1 ? 3 : 4; l <= 7; ++l) {
      const RationalGF gf = kbond_gf(l, k);
      c.expect(gf_equal(gf, golden_gf("kbond_gf:" + lk(l, k))), "A_{" + lk(l, k) + "} = reference function");
      const BiPoly reference = parse_bipoly(golden::formula("kbond_series:" + lk(l, k)));
      c.expect(kbond_series(l, k, 8).to_bipoly() == reference, "A_{" + lk(l, k) + "} expansion through t^8");
    }
  }
  for (const std::string key : {"4,2", "5,2"}) {
    const int l = key[0] - '0';
    const BiPoly reference = parse_bipoly(golden::formula("rect1k_series:" + key));
    c.expect(rect1k_series(l, 2, 8).to_bipoly() == reference, "B_{" + key + "} expansion through t^8");
  }
}

void check_rect_gfs(Criterion& c) {
  for (const auto& [l, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {5, 1}, {4, 2}, {5, 2}}) {
    const RationalGF gf = rect1k_gf(l, k);
    const RationalGF reference = golden_gf("rect1k_gf:" + lk(l, k));
    c.expect(gf_equal(gf, reference), "B_{" + lk(l, k) + "} closed form: reference " + reference.to_string() +
                                        ", computed " + gf.to_string());
    const BiPoly reference_series = parse_bipoly(golden::formula("rect1k_series:" + lk(l, k)));
    c.expect(rect1k_series(l, k, 8).to_bipoly() == reference_series, "B_{" + lk(l, k) + "} expansion through t^8");
  }
  for (int l = 2; l <= 5; ++l) {
    for (int k = 1; k <= 2; ++k) {
      const TSeries s = rect1k_series(l, k, 8);
      for (int n = 0; n <= 8; ++n)
        c.expect(word_distribution(l, n, Statistic::rect(1, k)).poly == s[static_cast<std::size_t>(n)],
                 "B_{" + lk(l, k) + "} t^" + std::to_string(n) + " equals the word oracle");
    }
  }
}

void check_box2(Criterion& c) {
  for (int l = 4; l <= 5; ++l) {
    const TSeries s = box2_series(l, 8);
    for (int n = 0; n <= 8; ++n)
      c.expect(word_distribution(l, n, Statistic::kbox(2)).poly == s[static_cast<std::size_t>(n)],
               "2-box l=" + std::to_string(l) + " t^" + std::to_string(n) + " equals the word oracle");
  }
  const TSeries s3 = box2_series(3, 12);
  for (std::size_t n = 2; n <= 12; ++n)
    c.expect(s3[n] == IntPoly::monomial(detail::ipow(3, static_cast<int>(n)), n),
             "2-box l=3 t^" + std::to_string(n) + " is 3^n x^n, got " + s3[n].to_string());
}

void check_avoidance_tables(Criterion& c) {
  const char* box1[] = {"avoid-box1-3", "A006355", "A118649", "avoid-box1-6", "avoid-box1-7"};
  for (int l = 3; l <= 7; ++l) {
    const auto row = golden::table(box1[l - 3]).values();
    c.expect_seq(row, rect1k_series(l, 1, row.size() - 1).at_x(0), std::string("(1,1) row ") + box1[l - 3]);
  }
  const char* rect12[] = {"avoid-rect12-4", "avoid-rect12-5", "A052994", "avoid-rect12-7"};
  for (int l = 4; l <= 7; ++l) {
    const auto row = golden::table(rect12[l - 4]).values();
    c.expect_seq(row, rect1k_series(l, 2, row.size() - 1).at_x(0), std::string("(1,2) row ") + rect12[l - 4]);
  }
}

void check_hardin(Criterion& c) {
  for (int l = 3; l <= 5; ++l) c.expect_report(verify_hardin(l));
}

void check_mathar(Criterion& c) { c.expect_report(verify_mathar(7)); }

void check_barker(Criterion& c) {
  c.expect(smooth_gf_from_system(5, 2) == to_rational_t(parse_rational_gf("(1+t-t^2)/(1-4t+t^3)")),
           "smooth l=5 function is (1+t-t^2)/(1-4t+t^3), got " + smooth_gf_from_system(5, 2).to_string());
  const char* ids[] = {"A055099", "A126392", "A126393", "A126394"};
  for (int l = 4; l <= 7; ++l) {
    const auto row = golden::table(ids[l - 4]).values();
    c.expect_seq(row, smooth_series(l, 2, row.size() - 1), ids[l - 4]);
  }
}

void check_chebyshev(Criterion& c) {
  for (int l = 3; l <= 7; ++l)
    c.expect_seq(smooth_series(l, 1, 10), smooth_gf_chebyshev(l).series(10), "l=" + std::to_string(l));
}

void check_fibonacci(Criterion& c) { c.expect_report(verify_fibonacci()); }

void check_unpublished(Criterion& c) {
  c.expect_seq(golden_head("maxstat-rect12-4", 9), maxstat_series(rect1k_series(4, 2, 8)), "l=4");
  c.expect_seq(golden_head("maxstat-rect12-5", 9), maxstat_series(rect1k_series(5, 2, 8)), "l=5");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"bond-free permutations", check_riordan},
      {"bond distribution polynomials", check_bond_polys},
      {"signed permutations without bad pairs", check_signed_avoiders},
      {"maximum 1-box occurrence", check_max_occurrence},
      {"k-bond generating functions", check_bond_gfs},
      {"(1,k)-rectangle generating functions", check_rect_gfs},
      {"2-box transfer series", check_box2},
      {"avoidance tables", check_avoidance_tables},
      {"every letter matches the 1-box pattern", check_hardin},
      {"stable LEGO walls", check_mathar},
      {"2-smooth words", check_barker},
      {"Chebyshev smooth-word formula", check_chebyshev},
      {"Fibonacci equinumeration", check_fibonacci},
      {"every letter matches the (1,2)-rectangle pattern", check_unpublished},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = error.empty() && c.failures().empty();
    failed += pass ? 0 : 1;
    std::printf("%s %2zu %s (%.2fs)\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), seconds);
    if (!error.empty()) std::printf("       exception: %s\n", error.c_str());
    for (const auto& f : c.failures()) std::printf("       %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
