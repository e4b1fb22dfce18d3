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

#include "boxpat/golden.hpp"
#include "boxpat/oracles.hpp"
#include "boxpat/perm_stats.hpp"

namespace boxpat {
namespace {

TEST(PermutationTest, ParseForms) {
  EXPECT_EQ(Permutation::parse("2143"), Permutation::parse("2,1,4,3"));
  EXPECT_EQ(Permutation::parse("10,1,2,3,4,5,6,7,8,9").size(), 10);
  EXPECT_THROW(Permutation::parse("1a3"), ParseError);
  EXPECT_THROW(Permutation::parse("113"), ParseError);
  EXPECT_THROW(Permutation::parse("1,2,4"), ParseError);
}

TEST(BoxMatchTest, KBoxLevels) {
  const Permutation sigma = Permutation::parse("471569283");
  EXPECT_TRUE(box_match_set(sigma, 1, 1).count(4));
  EXPECT_FALSE(box_match_set(sigma, 2, 2).count(3));
  EXPECT_TRUE(box_match_set(sigma, 3, 3).count(3));
  EXPECT_TRUE(box_match_set(Permutation::parse("1"), 5, 5).empty());
}

TEST(BoxMatchTest, RejectsNonPositiveDimensions) {
  EXPECT_THROW(rect_count(Permutation::parse("12"), 0, 1), PreconditionViolation);
}

TEST(Box1Test, Examples) {
  EXPECT_EQ(box1_count(Permutation::parse("214365")), 6);
  EXPECT_EQ(bond_count(Permutation::parse("214365")), 3);
  EXPECT_EQ(box1_count(Permutation::parse("2413")), 0);
  EXPECT_EQ(bond_count(Permutation::parse("1234")), 3);
  EXPECT_EQ(bond_count(Permutation::parse("1")), 0);
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(box1_count(Permutation::identity(n)), n);
}

TEST(Box1Test, ReferenceSmallTable) {
  for (const auto& row : golden::small_perm_table()) {
    const Permutation sigma = Permutation::parse(row.perm);
    EXPECT_EQ(box1_count(sigma), row.box1) << row.perm;
    EXPECT_EQ(bond_count(sigma), row.bond) << row.perm;
  }
  EXPECT_EQ(golden::small_perm_table().size(), 2u + 6u + 24u);
}

TEST(Box1Test, SymmetryUnderReverseAndComplement) {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& sigma) {
      const int bx = box1_count(sigma);
      ASSERT_EQ(box1_count(sigma.reversed()), bx);
      ASSERT_EQ(box1_count(sigma.complemented()), bx);
      ASSERT_EQ(bond_count(sigma.reversed()), bond_count(sigma));
      ASSERT_LE(bond_count(sigma), bx);
    });
  }
}

TEST(Box1Test, KBoxIsMonotoneInK) {
  for_each_permutation(7, [&](const Permutation& sigma) {
    int prev = 0;
    for (int k = 1; k <= 4; ++k) {
      const int c = rect_count(sigma, k, k);
      ASSERT_GE(c, prev);
      prev = c;
    }
  });
}

}  // namespace
}  // namespace boxpat
