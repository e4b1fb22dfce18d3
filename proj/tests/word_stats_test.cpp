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

#include "boxpat/word_stats.hpp"

namespace boxpat {
namespace {

Word w(std::string_view text, int alphabet) { return Word::parse(text, alphabet); }

TEST(WordTest, Parse) {
  EXPECT_EQ(w("113", 3).size(), 3);
  EXPECT_THROW(w("14", 3), ParseError);
  EXPECT_THROW(w("10", 3), ParseError);
  EXPECT_NE(w("12", 2), w("12", 3));
}

TEST(KBondTest, Examples) {
  EXPECT_EQ(k_bond_count(w("112", 2), 1), 2);
  EXPECT_EQ(k_bond_count(w("13", 3), 1), 0);
  EXPECT_EQ(k_bond_count(w("13", 3), 2), 1);
  for_each_word(4, 5, [](const Word& v) { ASSERT_EQ(k_bond_count(v, 3), 4); });
}

TEST(Box1WordTest, Examples) {
  EXPECT_EQ(box1_count_word(w("112", 2)), 3);
  EXPECT_EQ(box1_count_word(w("13", 3)), 0);
  EXPECT_EQ(box1_count_word(w("113", 3)), 2);
  EXPECT_EQ(box1_count_word(w("12", 2)), 2);
}

TEST(RectWordTest, Examples) {
  EXPECT_EQ(rect_count_word(w("113", 3), 1, 1), 2);
  EXPECT_EQ(rect_count_word(w("1414", 4), 2, 2), 4);
  for (int n = 2; n <= 7; ++n)
    for_each_word(3, n, [&](const Word& v) { ASSERT_EQ(rect_count_word(v, 1, 2), n); });
}

TEST(RectWordTest, AgreesWithBox1) {
  for_each_word(5, 6, [](const Word& v) { ASSERT_EQ(rect_count_word(v, 1, 1), box1_count_word(v)); });
}

TEST(SmoothTest, Examples) {
  EXPECT_TRUE(is_k_smooth(w("1212", 2), 1));
  EXPECT_FALSE(is_k_smooth(w("13", 3), 1));
  EXPECT_TRUE(is_k_smooth(w("13", 3), 2));
  EXPECT_TRUE(is_k_smooth(w("", 3), 1));
  EXPECT_TRUE(is_k_smooth(w("3", 3), 1));
  int smooth = 0;
  for_each_word(4, 3, [&](const Word& v) { smooth += is_k_smooth(v, 1) ? 1 : 0; });
  EXPECT_EQ(smooth, 26);
}

TEST(ForEachWordTest, LexicographicOrder) {
  std::vector<std::string> seen;
  for_each_word(2, 2, [&](const Word& v) { seen.push_back(v.to_string()); });
  EXPECT_EQ(seen, (std::vector<std::string>{"11", "12", "21", "22"}));
  int empty = 0;
  for_each_word(3, 0, [&](const Word&) { ++empty; });
  EXPECT_EQ(empty, 1);
}

TEST(SymmetryTest, ReverseAndComplement) {
  for_each_word(4, 6, [](const Word& v) {
    ASSERT_EQ(box1_count_word(v.reversed()), box1_count_word(v));
    ASSERT_EQ(box1_count_word(v.complemented()), box1_count_word(v));
    ASSERT_EQ(k_bond_count(v.complemented(), 2), k_bond_count(v, 2));
  });
}

}  // namespace
}  // namespace boxpat
