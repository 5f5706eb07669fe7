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

#include "balanced/framing.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "balanced/errors.hpp"

namespace balanced {
namespace {

constexpr std::size_t npos = StreamCorruptError::npos;

template <class T>
void put_le(T value, std::vector<std::uint8_t>& out) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
  }
}

template <class T>
T get_le(std::span<const std::uint8_t> bytes, std::size_t pos) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    v |= static_cast<T>(bytes[pos + i]) << (8 * i);
  }
  return v;
}

}  // namespace

void write_header(const StreamHeader& header, std::vector<std::uint8_t>& out) {
  out.insert(out.end(), std::begin(kStreamMagic), std::end(kStreamMagic));
  put_le<std::uint16_t>(header.k, out);
  out.push_back(static_cast<std::uint8_t>(header.scheme));
  out.push_back(header.pad_mode ? 1 : 0);
  put_le<std::uint64_t>(header.payload_bit_count, out);
}

StreamHeader read_header(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kStreamHeaderSize) {
    throw StreamCorruptError("stream shorter than its header", npos);
  }
  if (!std::equal(std::begin(kStreamMagic), std::end(kStreamMagic),
                  bytes.begin())) {
    throw StreamCorruptError("bad magic", npos);
  }
  StreamHeader h;
  h.k = get_le<std::uint16_t>(bytes, 4);
  const auto scheme = scheme_from_wire(bytes[6]);
  if (!scheme) {
    throw StreamCorruptError(
        "unknown scheme id " + std::to_string(bytes[6]), npos);
  }
  h.scheme = *scheme;
  if (bytes[7] > 1) throw StreamCorruptError("bad pad flag", npos);
  h.pad_mode = bytes[7] == 1;
  h.payload_bit_count = get_le<std::uint64_t>(bytes, 8);
  if (h.k < 4 || h.k % 2 != 0) {
    throw StreamCorruptError("invalid block length " + std::to_string(h.k),
                             npos);
  }
  return h;
}

void write_varint(std::uint64_t value, std::vector<std::uint8_t>& out) {
  while (value >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(value | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(value));
}

bool read_varint(std::span<const std::uint8_t> bytes, std::size_t& pos,
                 std::uint64_t& value) {
  value = 0;
  for (unsigned shift = 0; shift < 64; shift += 7) {
    if (pos >= bytes.size()) return false;
    const std::uint8_t b = bytes[pos++];
    const std::uint64_t chunk = b & 0x7F;
    if (shift == 63 && chunk > 1) return false;
    value |= chunk << shift;
    if ((b & 0x80) == 0) return true;
  }
  return false;
}

std::vector<std::uint8_t> pack_bits(const Word& w) {
  std::vector<std::uint8_t> out((w.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80U >> (i % 8));
  }
  return out;
}

Word unpack_bits(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
  if (bit_count > bytes.size() * 8) {
    throw RangeError("not enough bytes for " + std::to_string(bit_count) +
                     " bits");
  }
  std::vector<std::uint8_t> bits(bit_count);
  for (std::size_t i = 0; i < bit_count; ++i) {
    bits[i] = (bytes[i / 8] >> (7 - i % 8)) & 1U;
  }
  return Word(std::move(bits));
}

void write_packet(const Packet& p, std::vector<std::uint8_t>& out) {
  write_varint(p.bit_length(), out);
  const auto payload = pack_bits(p.bits);
  out.insert(out.end(), payload.begin(), payload.end());
}

std::vector<std::uint8_t> frame_stream(const Word& input, std::size_t k,
                                       Scheme scheme, bool pad_mode) {
  if (k < 4 || k % 2 != 0 || k > std::numeric_limits<std::uint16_t>::max()) {
    throw DomainError("block length must be even, >= 4 and fit 16 bits");
  }
  if (!pad_mode && input.size() % k != 0) {
    throw InputLengthError(std::to_string(input.size()) +
                           " input bits is not a multiple of k = " +
                           std::to_string(k));
  }
  std::vector<std::uint8_t> out;
  write_header(StreamHeader{static_cast<std::uint16_t>(k), scheme, pad_mode,
                            input.size()},
               out);
  for (std::size_t pos = 0; pos < input.size(); pos += k) {
    const std::size_t take = std::min(k, input.size() - pos);
    Word block = input.slice(pos, take);
    if (take < k) block.append(Word(k - take, 0));
    write_packet(encode_packet(block, scheme), out);
  }
  return out;
}

Word deframe_stream(std::span<const std::uint8_t> stream) {
  const StreamHeader h = read_header(stream);
  const std::size_t k = h.k;
  if (!h.pad_mode && h.payload_bit_count % k != 0) {
    throw StreamCorruptError("payload bit count is not a multiple of k", npos);
  }
  const std::uint64_t expected = (h.payload_bit_count + k - 1) / k;

  Word out;
  std::size_t pos = kStreamHeaderSize;
  std::uint64_t index = 0;
  for (; pos < stream.size(); ++index) {
    if (index >= expected) {
      throw StreamCorruptError("trailing data after the last packet", index);
    }
    std::uint64_t bit_length = 0;
    if (!read_varint(stream, pos, bit_length)) {
      throw StreamCorruptError("truncated or malformed packet length", index);
    }
    const std::uint64_t byte_count = bit_length / 8 + (bit_length % 8 != 0);
    if (byte_count > stream.size() - pos) {
      throw StreamCorruptError("truncated packet", index);
    }
    const auto body = stream.subspan(pos, byte_count);
    pos += byte_count;
    if (bit_length % 8 != 0) {
      const auto spare = static_cast<std::uint8_t>(0xFFU >> (bit_length % 8));
      if (body.back() & spare) {
        throw StreamCorruptError("non-zero bits after the packet end", index);
      }
    }
    try {
      out.append(decode_packet(Packet{unpack_bits(body, bit_length)}, k,
                               h.scheme));
    } catch (const std::exception& e) {
      throw StreamCorruptError(
          "packet " + std::to_string(index) + ": " + e.what(), index);
    }
  }
  if (index != expected) {
    throw StreamCorruptError("stream ends after " + std::to_string(index) +
                                 " of " + std::to_string(expected) +
                                 " packets",
                             index);
  }
  return out.slice(0, h.payload_bit_count);
}

}  // namespace balanced
