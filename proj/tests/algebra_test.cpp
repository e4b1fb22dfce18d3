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

#include <gtest/gtest.h>

#include "boxpat/algebra/bi_poly.hpp"
#include "boxpat/algebra/int_poly.hpp"
#include "boxpat/algebra/linear_solve.hpp"
#include "boxpat/algebra/parse.hpp"
#include "boxpat/algebra/rational.hpp"
#include "boxpat/algebra/series.hpp"
#include "boxpat/golden.hpp"
#include "boxpat/oracles.hpp"

namespace boxpat {
namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

TEST(IntPolyTest, DifferenceOfSquares) {
  EXPECT_EQ(IntPoly({1, 1}) * IntPoly({1, -1}), IntPoly({1, 0, -1}));
}

TEST(IntPolyTest, Identities) {
  const IntPoly p{2, 7};
  EXPECT_EQ(IntPoly() + p, p);
  EXPECT_EQ(p * IntPoly(1), p);
  EXPECT_EQ(p.to_string(), "2+7x");
}

TEST(IntPolyTest, CanonicalForm) {
  EXPECT_TRUE((IntPoly{1, 2} - IntPoly{1, 2}).is_zero());
  EXPECT_EQ(IntPoly({3, 0, 0}).degree(), 0);
  EXPECT_TRUE(IntPoly({0, 0}).coeffs().empty());
}

TEST(IntPolyTest, ExactDivision) {
  const IntPoly a{1, 1};
  const IntPoly b{2, -3, 5};
  EXPECT_EQ((a * b).exact_div(a), b);
  EXPECT_THROW(IntPoly({1, 0, 1}).exact_div(a), InexactDivision);
}

TEST(IntPolyTest, NoOverflow) {
  IntPoly p{1, 1};
  IntPoly q(1);
  for (int i = 0; i < 100; ++i) q = q * p;
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), 100, 50);
  EXPECT_EQ(q[50], binom);
}

TEST(BiPolyTest, ParseAndPrint) {
  const BiPoly p = parse_bipoly("1 + 3t + (2+7x)t^2");
  EXPECT_EQ(p.coeff(1, 2), 7);
  EXPECT_EQ(p.coeff(0, 1), 3);
  EXPECT_EQ(parse_bipoly(p.to_string()), p);
}

TEST(BiPolyTest, ParseRejectsGarbage) {
  EXPECT_THROW(parse_bipoly("1+y"), ParseError);
  EXPECT_THROW(parse_bipoly("(1+x"), ParseError);
}

TEST(SeriesTest, Geometric) {
  const TSeries s = series_of_rational(parse_rational_gf("1/(1-t)"), 3);
  for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(s[n], IntPoly(1));
}

TEST(SeriesTest, TruncatesToMinimumOrder) {
  const TSeries a = series_of_rational(parse_rational_gf("1/(1-t)"), 3);
  const TSeries b = series_of_rational(parse_rational_gf("1/(1-x t)"), 5);
  EXPECT_EQ((a * b).order(), 3u);
  EXPECT_EQ((a * b)[3], IntPoly({1, 1, 1, 1}));
}

TEST(SeriesTest, TableEntryExpansion) {
  const TSeries s = series_of_rational(parse_rational_gf(golden::formula("kbond_gf:3,1")), 4);
  EXPECT_EQ(s[1], IntPoly(3));
  EXPECT_EQ(s[2], IntPoly({2, 7}));
}

TEST(SeriesTest, UnivariateExpansion) {
  EXPECT_EQ(to_rational_t(parse_rational_gf("(1+2t-t^2)/(1-t)")).series(4), ints({1, 3, 2, 2, 2}));
}

TEST(SeriesTest, NotExpandable) {
  EXPECT_THROW(RationalGF(BiPoly(1), parse_bipoly("t")), NotExpandable);
  EXPECT_THROW(series_of_rational(RationalGF(BiPoly(1), parse_bipoly("2+t"))), NotExpandable);
}

TEST(RationalTest, ScalarInvariance) {
  const RationalGF a = parse_rational_gf("(1+x t)/(1-t-x t^2)");
  const RationalGF b = parse_rational_gf("(2+2x t)/(2-2t-2x t^2)");
  EXPECT_TRUE(gf_equal(a, b));
  EXPECT_EQ(a.num(), b.num());
  EXPECT_FALSE(gf_equal(parse_rational_gf("1/(1-t)"), parse_rational_gf("1/(1-2t)")));
}

TEST(RationalTest, NormalizedDenominator) {
  const RationalGF a = parse_rational_gf("(-3)/(-3+3t)");
  EXPECT_EQ(a.den().constant_term(), 1);
  EXPECT_EQ(a.num(), BiPoly(1));
}

TEST(RationalTest, RationalTLowestTerms) {
  const RationalT r(IntPoly{1, 0, -1}, IntPoly{1, -1});
  EXPECT_EQ(r.num(), IntPoly({1, 1}));
  EXPECT_EQ(r.den(), IntPoly(1));
}

TEST(LinearSolveTest, Identity) {
  PolyMatrix m(3);
  for (std::size_t i = 0; i < 3; ++i) m(i, i) = BiPoly(1);
  const std::vector<BiPoly> rhs = {parse_bipoly("x"), parse_bipoly("t"), parse_bipoly("1+x t")};
  const auto s = solve_polyring_system(m, rhs);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(gf_equal(s[i], rhs[i]));
}

TEST(LinearSolveTest, Singular) {
  PolyMatrix m(2);
  m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = parse_bipoly("x");
  EXPECT_THROW(solve_cramer(m, {BiPoly(1), BiPoly(1)}), SingularSystem);
}

// Two-letter bond system: every binary word of length n has n-1 bonds.
TEST(LinearSolveTest, BinaryBondSystemMatchesOracle) {
  PolyMatrix m(2);
  m(0, 0) = m(1, 1) = parse_bipoly("x t - 1");
  m(0, 1) = m(1, 0) = parse_bipoly("x t");
  const auto s = solve_polyring_system(m, {parse_bipoly("-t"), parse_bipoly("-t")});
  const TSeries series = series_of_rational(RationalGF(BiPoly(1)) + s[0] + s[1], 8);
  for (int n = 0; n <= 8; ++n)
    EXPECT_EQ(series[static_cast<std::size_t>(n)], word_distribution(2, n, Statistic::kbond(1)).poly) << n;
}

TEST(ChebyshevTest, SmallIndices) {
  const RationalT y(IntPoly{0, 1});
  EXPECT_EQ(chebyshev_U(0, y), RationalT(1));
  EXPECT_EQ(chebyshev_U(2, y), RationalT(IntPoly{-1, 0, 4}));
  EXPECT_EQ(chebyshev_U(3, y), RationalT(IntPoly{0, -4, 0, 8}));
}

TEST(RecurrenceTest, Fibonacci) {
  const Recurrence r = recurrence_from_gf(to_rational_t(parse_rational_gf("1/(1-t-t^2)")));
  EXPECT_EQ(r.coeffs, ints({1, 1}));
  EXPECT_EQ(r.extend(ints({1}), 8), ints({1, 1, 2, 3, 5, 8, 13, 21}));
}

TEST(RecurrenceTest, MaxStatFunctionForThreeLetters) {
  const RationalT gf = to_rational_t(parse_rational_gf(golden::formula("maxstat_gf:3,1")));
  const Recurrence r = recurrence_from_gf(gf);
  EXPECT_EQ(r.coeffs, ints({2, 2, 1}));
  EXPECT_LE(r.valid_from, 4);
}

TEST(RecurrenceTest, RequiresUnitDenominator) {
  EXPECT_THROW(recurrence_from_gf(RationalT(IntPoly(1), IntPoly{2, 1})), PreconditionViolation);
}

TEST(DiagonalTest, Geometric) {
  // 1/(1 - x t) has every word at its maximum.
  EXPECT_EQ(diagonal_gf(parse_rational_gf("1/(1-x t)")), RationalT(IntPoly(1), IntPoly{1, -1}));
  // 1 + t/(1 - x t): a word of length n has n-1 bonds.
  EXPECT_EQ(subdiagonal_gf(parse_rational_gf("1 + t/(1-x t)")), RationalT(IntPoly(1), IntPoly{1, -1}));
}

TEST(GoldenTest, EveryFormulaParses) {
  for (const auto& [key, text] : golden::formulas()) {
    if (key.find("series") != std::string::npos) {
      EXPECT_NO_THROW(parse_bipoly(text)) << key;
    } else {
      EXPECT_NO_THROW(parse_rational_gf(text)) << key;
    }
  }
}

}  // namespace
}  // namespace boxpat
