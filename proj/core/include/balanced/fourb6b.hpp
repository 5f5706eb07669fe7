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

#ifndef BALANCED_FOURB6B_HPP_
#define BALANCED_FOURB6B_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>

#include "balanced/subset_codec.hpp"
#include "balanced/word.hpp"

// Table-free 4B6B balanced code.
//
// A nibble is Knuth-inverted up to some e in 1..4 and a two-bit suffix
// naming e is appended; e is the smallest index for which the six bits
// carry exactly three ones.  The suffix depends on the nibble's first bit:
//
//   first bit 0:  e=1 -> 01, e=2 -> 10, e=3 -> 00, e=4 -> 11
//   first bit 1:  e=1 -> 01, e=2 -> 10, e=3 -> 11, e=4 -> 00
//
// Since e >= 1 the first bit is always flipped, so the decoder recovers the
// original first bit as the complement of the codeword's first bit.
namespace balanced::fourb6b {

class Sextet {
 public:
  const Word& bits() const noexcept { return bits_; }

  friend bool operator==(const Sextet&, const Sextet&) = default;

 private:
  friend Sextet encode_nibble(const Word& nibble);
  explicit Sextet(Word bits) : bits_(std::move(bits)) {}

  Word bits_;
};

// Two-bit index suffix for e in 1..4.
Word index_suffix(std::uint8_t start_bit, std::size_t e);

// DomainError unless nibble has length 4.
Sextet encode_nibble(const Word& nibble);

// InvalidSextetError for anything outside the 16-codeword set.
Word decode_sextet(const Word& sextet);

// Encoded width of an r-bit prefix: 6 * ceil(r / 4).
std::size_t balanced_prefix_length(std::size_t r);

// Zero-pads p on the right to a multiple of 4 and encodes each nibble.
// DomainError for an empty prefix.
Word balance_prefix(const Word& p);

// Inverse of balance_prefix for a known original width r.  Padding bits
// must decode to zero.
Word recover_prefix(const Word& encoded, std::size_t r);

// Compressed fixed-length encoding whose prefix is replaced by its 4B6B
// image, so every packet with a prefix is balanced end to end.  Balanced
// information words still travel prefix-less.
Packet full_encode(const Word& x);
Word full_decode(const Packet& p, std::size_t k);

}  // namespace balanced::fourb6b

#endif  // BALANCED_FOURB6B_HPP_
