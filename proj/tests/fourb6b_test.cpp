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

#include <set>

#include "balanced/errors.hpp"
#include "balanced/fourb6b.hpp"
#include "balanced/selfcheck.hpp"
#include "test_util.hpp"

namespace balanced::fourb6b {
namespace {

using balanced::testing::all_words;
using balanced::testing::W;

TEST(FourB6BTest, EncodeExamples) {
  EXPECT_EQ(encode_nibble(W("0000")).bits(), W("110010"));
  EXPECT_EQ(encode_nibble(W("1000")).bits(), W("011100"));
  EXPECT_EQ(encode_nibble(W("0111")).bits(), W("100011"));
  EXPECT_THROW(encode_nibble(W("000")), DomainError);
}

TEST(FourB6BTest, ReproducesReferenceTable) {
  for (std::uint64_t v = 0; v < 16; ++v) {
    EXPECT_EQ(encode_nibble(Word::from_uint(v, 4)).bits().to_string(),
              kReference4B6B[v])
        << v;
  }
}

TEST(FourB6BTest, SmallestIndexWinsTies) {
  // 0000 balances at e = 2 (1100|10) and at e = 3 (1110|00).
  const Word n = W("0000");
  EXPECT_EQ(invert_prefix(n, 3).weight() + index_suffix(0, 3).weight(), 3u);
  EXPECT_EQ(encode_nibble(n).bits().slice(4, 2), index_suffix(0, 2));
}

TEST(FourB6BTest, SuffixMapsAreBijections) {
  for (std::uint8_t start : {0, 1}) {
    std::set<Word> seen;
    for (std::size_t e = 1; e <= 4; ++e) seen.insert(index_suffix(start, e));
    EXPECT_EQ(seen.size(), 4u);
  }
  EXPECT_THROW(index_suffix(0, 0), RangeError);
  EXPECT_THROW(index_suffix(1, 5), RangeError);
}

TEST(FourB6BTest, CodewordsDistinctWeightThreeAndInvertible) {
  std::set<Word> seen;
  for (const Word& n : all_words(4)) {
    const Word s = encode_nibble(n).bits();
    EXPECT_EQ(s.weight(), 3u);
    EXPECT_TRUE(seen.insert(s).second);
    EXPECT_EQ(decode_sextet(s), n);
  }
}

TEST(FourB6BTest, DecodeExamples) {
  EXPECT_EQ(decode_sextet(W("110010")), W("0000"));
  EXPECT_EQ(decode_sextet(W("001101")), W("1011"));
  EXPECT_THROW(decode_sextet(W("111000")), InvalidSextetError);
}

TEST(FourB6BTest, RejectsEverythingOutsideTheCode) {
  std::set<Word> code;
  for (const Word& n : all_words(4)) code.insert(encode_nibble(n).bits());
  for (const Word& s : all_words(6)) {
    if (code.count(s)) continue;
    EXPECT_THROW(decode_sextet(s), InvalidSextetError) << s.to_string();
  }
  EXPECT_THROW(decode_sextet(W("11001")), InvalidSextetError);
}

TEST(FourB6BTest, BalancePrefix) {
  EXPECT_EQ(balance_prefix(W("1")), W("011100"));
  EXPECT_EQ(balance_prefix(W("0")), W("110010"));
  EXPECT_EQ(balance_prefix(W("10")), W("011100"));
  EXPECT_EQ(balance_prefix(W("00001000")), W("110010011100"));
  EXPECT_THROW(balance_prefix(Word()), DomainError);
  EXPECT_EQ(balanced_prefix_length(1), 6u);
  EXPECT_EQ(balanced_prefix_length(4), 6u);
  EXPECT_EQ(balanced_prefix_length(5), 12u);
}

TEST(FourB6BTest, RecoverPrefixRoundtrip) {
  for (std::size_t r = 1; r <= 9; ++r) {
    for (const Word& p : all_words(r)) {
      const Word enc = balance_prefix(p);
      ASSERT_TRUE(is_balanced(enc));
      ASSERT_EQ(enc.size(), balanced_prefix_length(r));
      ASSERT_EQ(recover_prefix(enc, r), p);
    }
  }
  // "1" padded to 1000; claiming r = 4 is fine, but a non-zero pad bit is not.
  EXPECT_EQ(recover_prefix(W("011100"), 4), W("1000"));
  EXPECT_THROW(recover_prefix(W("100101"), 1), CorruptPacketError);
  EXPECT_THROW(recover_prefix(W("011100"), 5), CorruptPacketError);
}

TEST(FourB6BTest, FullEncodeExamples) {
  const Packet p = full_encode(W("1111"));
  EXPECT_EQ(p.bits, W("0111000011"));
  EXPECT_EQ(p.bit_length(), 10u);
  EXPECT_EQ(p.bits.weight(), 5u);
  EXPECT_EQ(full_encode(W("0101")).bits, W("0101"));
  EXPECT_EQ(full_decode({W("0111000011")}, 4), W("1111"));
  EXPECT_EQ(full_decode({W("0101")}, 4), W("0101"));
}

TEST(FourB6BTest, FullEncodeIsBalancedExhaustive) {
  for (std::size_t k = 4; k <= 12; k += 2) {
    for (const Word& x : all_words(k)) {
      const Packet p = full_encode(x);
      ASSERT_TRUE(is_balanced(p.bits)) << x.to_string();
      ASSERT_EQ(full_decode(p, k), x);
      if (!is_balanced(x)) {
        ASSERT_EQ(p.bit_length(), k + prefix_length(k, Scheme::kProposedFull));
      }
    }
  }
}

TEST(FourB6BTest, FullDecodeErrors) {
  // Wrong encoded prefix length.
  EXPECT_THROW(full_decode({W("01110000011")}, 4), CorruptPacketError);
  // Invalid sextet.
  EXPECT_THROW(full_decode({W("1110000011")}, 4), InvalidSextetError);
  // Unbalanced payload.
  EXPECT_THROW(full_decode({W("0111000111")}, 4), CorruptPacketError);
}

}  // namespace
}  // namespace balanced::fourb6b
