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

#include "balanced/fourb6b.hpp"

#include <array>
#include <string>

#include "balanced/errors.hpp"

namespace balanced::fourb6b {
namespace {

// kSuffix[start_bit][e - 1], two bits packed as an integer.
constexpr std::array<std::array<std::uint8_t, 4>, 2> kSuffix = {{
    {0b01, 0b10, 0b00, 0b11},
    {0b01, 0b10, 0b11, 0b00},
}};

std::size_t index_for_suffix(std::uint8_t start_bit, std::uint8_t suffix) {
  const auto& row = kSuffix[start_bit];
  for (std::size_t e = 1; e <= row.size(); ++e) {
    if (row[e - 1] == suffix) return e;
  }
  throw InternalError("suffix map is not a bijection");
}

}  // namespace

Word index_suffix(std::uint8_t start_bit, std::size_t e) {
  if (e < 1 || e > 4) {
    throw RangeError("4B6B index must be in 1..4, got " + std::to_string(e));
  }
  return Word::from_uint(kSuffix[start_bit ? 1 : 0][e - 1], 2);
}

Sextet encode_nibble(const Word& nibble) {
  if (nibble.size() != 4) {
    throw DomainError("4B6B input must be 4 bits, got " +
                      std::to_string(nibble.size()));
  }
  const std::uint8_t start = nibble[0];
  for (std::size_t e = 1; e <= 4; ++e) {
    Word body = invert_prefix(nibble, e);
    const Word suffix = index_suffix(start, e);
    if (body.weight() + suffix.weight() == 3) return Sextet(body + suffix);
  }
  throw InternalError("no balancing index for nibble " + nibble.to_string());
}

Word decode_sextet(const Word& sextet) {
  if (sextet.size() != 6 || sextet.weight() != 3) {
    throw InvalidSextetError("not a 4B6B codeword: " + sextet.to_string());
  }
  const Word body = sextet.slice(0, 4);
  const auto suffix = static_cast<std::uint8_t>(sextet.slice(4, 2).to_uint());
  const std::uint8_t start = body[0] ^ 1U;
  const std::size_t e = index_for_suffix(start, suffix);
  Word nibble = invert_prefix(body, e);
  if (encode_nibble(nibble).bits() != sextet) {
    throw InvalidSextetError("not a 4B6B codeword: " + sextet.to_string());
  }
  return nibble;
}

std::size_t balanced_prefix_length(std::size_t r) { return 6 * ((r + 3) / 4); }

Word balance_prefix(const Word& p) {
  if (p.empty()) throw DomainError("cannot 4B6B-encode an empty prefix");
  Word padded = p + Word((4 - p.size() % 4) % 4, 0);
  Word out;
  for (std::size_t i = 0; i < padded.size(); i += 4) {
    out.append(encode_nibble(padded.slice(i, 4)).bits());
  }
  return out;
}

Word recover_prefix(const Word& encoded, std::size_t r) {
  if (r == 0 || encoded.size() != balanced_prefix_length(r)) {
    throw CorruptPacketError("encoded prefix has " +
                             std::to_string(encoded.size()) +
                             " bits, expected " +
                             std::to_string(balanced_prefix_length(r)));
  }
  Word padded;
  for (std::size_t i = 0; i < encoded.size(); i += 6) {
    padded.append(decode_sextet(encoded.slice(i, 6)));
  }
  for (std::size_t i = r; i < padded.size(); ++i) {
    if (padded[i] != 0) {
      throw CorruptPacketError("non-zero padding in encoded prefix");
    }
  }
  return padded.slice(0, r);
}

Packet full_encode(const Word& x) {
  Packet fl = encode_packet(x, Scheme::kProposedFL);
  const std::size_t k = x.size();
  if (fl.bit_length() == k) return fl;
  const std::size_t r = fl.bit_length() - k;
  return Packet{balance_prefix(fl.bits.slice(0, r)) + fl.bits.slice(r, k)};
}

Word full_decode(const Packet& p, std::size_t k) {
  const std::size_t n = p.bit_length();
  if (n == k) return decode_packet(p, k, Scheme::kProposedFL);
  const std::size_t r = prefix_length(k, Scheme::kProposedFL);
  const std::size_t encoded = balanced_prefix_length(r);
  if (n != k + encoded) {
    throw CorruptPacketError("full-balance packet has " + std::to_string(n) +
                             " bits, expected " +
                             std::to_string(k + encoded));
  }
  const Word prefix = recover_prefix(p.bits.slice(0, encoded), r);
  return decode_packet(Packet{prefix + p.bits.slice(encoded, k)}, k,
                       Scheme::kProposedFL);
}

}  // namespace balanced::fourb6b
