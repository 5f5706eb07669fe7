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

#ifndef BALANCED_TESTS_TEST_UTIL_HPP_
#define BALANCED_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "balanced/word.hpp"

namespace balanced::testing {

inline Word W(std::string_view literal) { return Word::parse(literal); }

inline std::vector<Word> all_words(std::size_t k) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
    out.push_back(Word::from_uint(v, k));
  }
  return out;
}

// Oracles below avoid the library's running-sum shortcuts: they count ones
// and try every inversion length directly.

inline bool weight_balanced(const Word& w) {
  std::size_t ones = 0;
  for (std::size_t i = 0; i < w.size(); ++i) ones += w[i];
  return 2 * ones == w.size();
}

inline Word flip_first(const Word& w, std::size_t j) {
  std::vector<std::uint8_t> bits(w.bits().begin(), w.bits().end());
  for (std::size_t i = 0; i < j; ++i) bits[i] ^= 1U;
  return Word(std::move(bits));
}

inline std::size_t brute_first_index(const Word& w) {
  for (std::size_t j = 1; j <= w.size(); ++j) {
    if (weight_balanced(flip_first(w, j))) return j;
  }
  return 0;
}

}  // namespace balanced::testing

#endif  // BALANCED_TESTS_TEST_UTIL_HPP_
