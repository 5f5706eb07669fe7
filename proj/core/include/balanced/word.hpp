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

#ifndef BALANCED_WORD_HPP_
#define BALANCED_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace balanced {

// A finite binary word.  Bits are stored as 0/1 bytes, first (leftmost)
// bit at index 0.  Disparity and running sums treat 0 as -1 and 1 as +1.
//
// Storage is 0-based; the bit-sequence contracts (inversion lengths,
// balancing indices) use 1-based positions, so "invert the first j bits"
// touches storage indices [0, j).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> bits);
  Word(std::size_t length, std::uint8_t fill);

  // Parses a literal such as "0011".  Any character other than '0'/'1'
  // raises DomainError.
  static Word parse(std::string_view literal);

  // `value` written in `width` bits, most significant bit first.
  static Word from_uint(std::uint64_t value, std::size_t width);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i]; }
  void set(std::size_t i, std::uint8_t bit) { bits_[i] = bit ? 1 : 0; }

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  // Number of ones.
  std::size_t weight() const noexcept;

  // Reads the word as an unsigned integer, most significant bit first.
  // RangeError if longer than 64 bits.
  std::uint64_t to_uint() const;

  // Subword [pos, pos + len).
  Word slice(std::size_t pos, std::size_t len) const;

  std::string to_string() const;

  Word& append(const Word& tail);

  friend Word operator+(Word head, const Word& tail) {
    head.append(tail);
    return head;
  }

  // Lexicographic with 0 < 1; words of equal length compare as the
  // integers they spell.
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct RdsExtrema {
  int max_rds;
  int min_rds;

  friend bool operator==(const RdsExtrema&, const RdsExtrema&) = default;
};

// #ones - #zeros.
int disparity(const Word& w);

// Bipolar partial sums d_1..d_k, one entry per bit.
std::vector<int> running_sums(const Word& w);

// Extremes of running_sums(w).  DomainError on an empty word.
RdsExtrema rds_extrema(const Word& w);

// Complements the first j bits.  RangeError unless 0 <= j <= size.
Word invert_prefix(const Word& w, std::size_t j);

bool is_balanced(const Word& w);

// Smallest e in [1, k] such that invert_prefix(w, e) is balanced.  An
// already balanced word still gets a genuine inversion (e >= 1).
// DomainError for odd or zero length.
std::size_t first_balancing_index(const Word& w);

// ceil(log2(n)) for n >= 1; 0 for n <= 1.
unsigned ceil_log2(std::uint64_t n);

// floor(log2(n)) for n >= 1.
unsigned floor_log2(std::uint64_t n);

}  // namespace balanced

#endif  // BALANCED_WORD_HPP_
