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

#include "balanced/word.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "balanced/errors.hpp"

namespace balanced {

Word::Word(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

Word::Word(std::size_t length, std::uint8_t fill)
    : bits_(length, fill ? 1 : 0) {}

Word Word::parse(std::string_view literal) {
  std::vector<std::uint8_t> bits;
  bits.reserve(literal.size());
  for (char c : literal) {
    if (c != '0' && c != '1') {
      throw DomainError("word literal may only contain '0' and '1': \"" +
                        std::string(literal) + "\"");
    }
    bits.push_back(c == '1' ? 1 : 0);
  }
  return Word(std::move(bits));
}

Word Word::from_uint(std::uint64_t value, std::size_t width) {
  if (width < 64 && (value >> width) != 0) {
    throw RangeError("value " + std::to_string(value) + " does not fit in " +
                     std::to_string(width) + " bits");
  }
  std::vector<std::uint8_t> bits(width, 0);
  for (std::size_t i = 0; i < width && i < 64; ++i) {
    bits[width - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1U);
  }
  return Word(std::move(bits));
}

std::size_t Word::weight() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::uint64_t Word::to_uint() const {
  if (bits_.size() > 64) throw RangeError("word longer than 64 bits");
  std::uint64_t v = 0;
  for (auto b : bits_) v = (v << 1) | b;
  return v;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  if (pos > bits_.size() || len > bits_.size() - pos) {
    throw RangeError("slice out of range");
  }
  return Word(std::vector<std::uint8_t>(bits_.begin() + pos,
                                        bits_.begin() + pos + len));
}

std::string Word::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

Word& Word::append(const Word& tail) {
  bits_.insert(bits_.end(), tail.bits_.begin(), tail.bits_.end());
  return *this;
}

int disparity(const Word& w) {
  const auto ones = static_cast<int>(w.weight());
  return 2 * ones - static_cast<int>(w.size());
}

std::vector<int> running_sums(const Word& w) {
  std::vector<int> sums(w.size());
  int acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    acc += w[i] ? 1 : -1;
    sums[i] = acc;
  }
  return sums;
}

RdsExtrema rds_extrema(const Word& w) {
  if (w.empty()) throw DomainError("rds_extrema of an empty word");
  const auto sums = running_sums(w);
  const auto [lo, hi] = std::minmax_element(sums.begin(), sums.end());
  return RdsExtrema{*hi, *lo};
}

Word invert_prefix(const Word& w, std::size_t j) {
  if (j > w.size()) {
    throw RangeError("inversion length " + std::to_string(j) +
                     " exceeds word length " + std::to_string(w.size()));
  }
  Word out = w;
  for (std::size_t i = 0; i < j; ++i) out.set(i, w[i] ^ 1U);
  return out;
}

bool is_balanced(const Word& w) { return disparity(w) == 0; }

std::size_t first_balancing_index(const Word& w) {
  if (w.empty() || w.size() % 2 != 0) {
    throw DomainError("balancing index requires a non-empty even-length word");
  }
  // Inverting the first j bits turns the disparity into d - 2*d_j, so the
  // image is balanced exactly when the running sum reaches d/2.
  const int target = disparity(w) / 2;
  int acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    acc += w[i] ? 1 : -1;
    if (acc == target) return i + 1;
  }
  throw InternalError("no balancing index found for " + w.to_string());
}

unsigned ceil_log2(std::uint64_t n) {
  if (n <= 1) return 0;
  return static_cast<unsigned>(std::bit_width(n - 1));
}

unsigned floor_log2(std::uint64_t n) {
  if (n == 0) throw DomainError("floor_log2(0)");
  return static_cast<unsigned>(std::bit_width(n) - 1);
}

}  // namespace balanced
