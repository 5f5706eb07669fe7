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

#ifndef BALANCED_KNUTH_HPP_
#define BALANCED_KNUTH_HPP_

#include <cstddef>

#include "balanced/word.hpp"

namespace balanced {

// Knuth's parallel balancing: the payload is the information word with its
// first e bits complemented; the prefix carries e - 1 in ceil(log2 k) bits.
struct KnuthCodeword {
  Word prefix;
  Word payload;

  friend bool operator==(const KnuthCodeword&, const KnuthCodeword&) = default;
};

std::size_t knuth_prefix_bits(std::size_t k);

// DomainError for odd k or k < 2.
KnuthCodeword ka_encode(const Word& x);

// CorruptCodewordError if the payload is unbalanced, the prefix has the
// wrong width, or the index decodes past k.
Word ka_decode(const KnuthCodeword& cw);

}  // namespace balanced

#endif  // BALANCED_KNUTH_HPP_
