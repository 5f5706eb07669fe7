// Copyright 2026 The Balanced Codes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "balanced/errors.hpp"
#include "balanced/word.hpp"
#include "test_util.hpp"

namespace balanced {
namespace {

using testing::all_words;
using testing::brute_first_index;
using testing::W;

TEST(WordTest, ParseAndPrint) {
  EXPECT_EQ(W("0011").to_string(), "0011");
  EXPECT_EQ(W("").size(), 0u);
  EXPECT_THROW(W("0a1"), DomainError);
}

TEST(WordTest, FromUintIsMsbFirst) {
  EXPECT_EQ(Word::from_uint(1, 2).to_string(), "01");
  EXPECT_EQ(Word::from_uint(6, 4).to_string(), "0110");
  EXPECT_EQ(W("0110").to_uint(), 6u);
  EXPECT_THROW(Word::from_uint(4, 2), RangeError);
}

TEST(WordTest, LexicographicOrder) {
  EXPECT_LT(W("0111"), W("1000"));
  EXPECT_LT(W("1011"), W("1111"));
}

TEST(WordTest, Disparity) {
  EXPECT_EQ(disparity(W("0011")), 0);
  EXPECT_EQ(disparity(W("1111")), 4);
  EXPECT_EQ(disparity(W("1000")), -2);
}

TEST(WordTest, RdsExtrema) {
  // partial sums -1, -2, -1, 0
  EXPECT_EQ(rds_extrema(W("0011")), (RdsExtrema{0, -2}));
  // -1, 0, -1, 0
  EXPECT_EQ(rds_extrema(W("0101")), (RdsExtrema{0, -1}));
  EXPECT_EQ(rds_extrema(W("1111")), (RdsExtrema{4, 1}));
  EXPECT_THROW(rds_extrema(Word()), DomainError);
}

TEST(WordTest, RunningSumsStepByOne) {
  for (const Word& w : all_words(10)) {
    const auto sums = running_sums(w);
    int prev = 0;
    for (int s : sums) {
      ASSERT_EQ(std::abs(s - prev), 1) << w.to_string();
      prev = s;
    }
    const auto ext = rds_extrema(w);
    ASSERT_LE(ext.min_rds, ext.max_rds);
  }
}

TEST(WordTest, InvertPrefix) {
  EXPECT_EQ(invert_prefix(W("1111"), 2), W("0011"));
  EXPECT_EQ(invert_prefix(W("1011"), 0), W("1011"));
  EXPECT_THROW(invert_prefix(W("1011"), 5), RangeError);
  for (const Word& w : all_words(8)) {
    for (std::size_t j = 0; j <= 8; ++j) {
      ASSERT_EQ(invert_prefix(invert_prefix(w, j), j), w);
    }
    ASSERT_EQ(disparity(invert_prefix(w, 8)), -disparity(w));
  }
}

TEST(WordTest, IsBalanced) {
  EXPECT_TRUE(is_balanced(W("0011")));
  EXPECT_FALSE(is_balanced(W("1011")));
  EXPECT_FALSE(is_balanced(W("010")));
}

TEST(WordTest, FirstBalancingIndexExamples) {
  EXPECT_EQ(first_balancing_index(W("1011")), 1u);
  EXPECT_EQ(first_balancing_index(W("1100")), 4u);
  EXPECT_EQ(first_balancing_index(W("0101")), 2u);
  EXPECT_THROW(first_balancing_index(W("010")), DomainError);
  EXPECT_THROW(first_balancing_index(Word()), DomainError);
}

TEST(WordTest, FirstBalancingIndexIsMinimalExhaustive) {
  for (std::size_t k = 2; k <= 16; k += 2) {
    for (const Word& w : all_words(k)) {
      const std::size_t e = first_balancing_index(w);
      ASSERT_GE(e, 1u);
      ASSERT_EQ(e, brute_first_index(w)) << w.to_string();
    }
  }
}

TEST(WordTest, CeilAndFloorLog2) {
  EXPECT_EQ(ceil_log2(1), 0u);
  EXPECT_EQ(ceil_log2(2), 1u);
  EXPECT_EQ(ceil_log2(3), 2u);
  EXPECT_EQ(ceil_log2(128), 7u);
  EXPECT_EQ(ceil_log2(129), 8u);
  EXPECT_EQ(floor_log2(1), 0u);
  EXPECT_EQ(floor_log2(7), 2u);
  EXPECT_EQ(floor_log2(8), 3u);
}

}  // namespace
}  // namespace balanced
