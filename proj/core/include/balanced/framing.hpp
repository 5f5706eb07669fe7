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

#ifndef BALANCED_FRAMING_HPP_
#define BALANCED_FRAMING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "balanced/subset_codec.hpp"
#include "balanced/word.hpp"

// Stream container for encoded blocks.
//
//   offset  size  field
//   0       4     magic "BPK1"
//   4       2     k, little-endian
//   6       1     scheme wire value
//   7       1     pad flag (0 or 1)
//   8       8     payload bit count, little-endian
//   16      ...   packets
//
// Each packet is an unsigned LEB128 bit length followed by
// ceil(bit_length / 8) bytes, bits packed most-significant-first with the
// unused low bits of the last byte zero.  The explicit length plays the
// role of an end-of-packet symbol, so packets of different lengths (the
// prefix-less balanced case, variable-length prefixes) need no reserved
// bit pattern.
namespace balanced {

inline constexpr std::uint8_t kStreamMagic[4] = {'B', 'P', 'K', '1'};
inline constexpr std::size_t kStreamHeaderSize = 16;

struct StreamHeader {
  std::uint16_t k = 0;
  Scheme scheme = Scheme::kProposedFL;
  bool pad_mode = false;
  std::uint64_t payload_bit_count = 0;

  friend bool operator==(const StreamHeader&, const StreamHeader&) = default;
};

void write_header(const StreamHeader& header, std::vector<std::uint8_t>& out);

// StreamCorruptError (packet index npos) on bad magic, truncation, odd k
// or an unknown scheme.
StreamHeader read_header(std::span<const std::uint8_t> bytes);

void write_varint(std::uint64_t value, std::vector<std::uint8_t>& out);

// Reads one varint starting at `pos`, advancing it.  Returns false on
// truncation or an encoding longer than 64 bits.
bool read_varint(std::span<const std::uint8_t> bytes, std::size_t& pos,
                 std::uint64_t& value);

// MSB-first packing.
std::vector<std::uint8_t> pack_bits(const Word& w);
Word unpack_bits(std::span<const std::uint8_t> bytes, std::size_t bit_count);

void write_packet(const Packet& p, std::vector<std::uint8_t>& out);

// Splits `input` into k-bit blocks and frames one packet per block.
// Without pad_mode a length that is not a multiple of k raises
// InputLengthError; with it the last block is zero-filled.
std::vector<std::uint8_t> frame_stream(const Word& input, std::size_t k,
                                       Scheme scheme, bool pad_mode);

// Inverse of frame_stream.  StreamCorruptError names the failing packet.
Word deframe_stream(std::span<const std::uint8_t> stream);

}  // namespace balanced

#endif  // BALANCED_FRAMING_HPP_
