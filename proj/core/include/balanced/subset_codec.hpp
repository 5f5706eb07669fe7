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

#ifndef BALANCED_SUBSET_CODEC_HPP_
#define BALANCED_SUBSET_CODEC_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "balanced/word.hpp"

namespace balanced {

// Wire values are part of the stream header; do not renumber.
enum class Scheme : std::uint8_t {
  kKnuth = 0,
  kBaselineFL = 1,     // uncompressed subsets, balanced member ranked last
  kProposedFL = 2,     // compressed subsets, fixed-length rank prefix
  kProposedVL = 3,     // compressed subsets, rank in minimal bits
  kProposedFull = 4,   // kProposedFL with the prefix 4B6B-balanced
};

inline constexpr Scheme kAllSchemes[] = {
    Scheme::kKnuth, Scheme::kBaselineFL, Scheme::kProposedFL,
    Scheme::kProposedVL, Scheme::kProposedFull};

// CLI spelling: knuth, baseline-fl, proposed-fl, proposed-vl, proposed-full.
std::string_view scheme_name(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);
std::optional<Scheme> scheme_from_wire(std::uint8_t value);

// True for the schemes that send an already balanced word prefix-less.
bool is_compressed(Scheme s);

// The information words that Knuth's first-index rule maps onto y.
//
// Unbalanced members come first in ascending lexicographic order.  The
// baseline listing also carries the single balanced member, always last;
// the compressed listing drops it.
struct SubsetListing {
  Word y;
  std::vector<Word> members;
  bool includes_balanced = false;

  std::size_t size() const noexcept { return members.size(); }
};

// DomainError if y is not balanced (or has odd length).
SubsetListing subset_members(const Word& y, bool includes_balanced);

// Compressed-listing size read off the running sums of y: max - min of the
// bipolar partial sums, whose steps are +-1 per bit.
std::size_t subset_size_rds(const Word& y);

// Zero-based position of x inside the listing of its Knuth image.
std::size_t subset_rank(const Word& x, bool includes_balanced);

// A transmitted codeword c = p.y.  The explicit length stands in for the
// end-of-packet marker of a packet channel.
struct Packet {
  Word bits;

  std::size_t bit_length() const noexcept { return bits.size(); }

  friend bool operator==(const Packet&, const Packet&) = default;
};

// Prefix width for the scheme.  `lambda` (compressed listing size) is
// required for kProposedVL.  DomainError on odd k, k < 4, or a missing or
// out-of-range lambda.
std::size_t prefix_length(std::size_t k, Scheme scheme,
                          std::optional<std::size_t> lambda = std::nullopt);

Packet encode_packet(const Word& x, Scheme scheme);

// CorruptPacketError when the packet cannot be a codeword of `scheme` for
// block length k.
Word decode_packet(const Packet& p, std::size_t k, Scheme scheme);

// Subset table for all balanced words of length k in ascending order:
// one column per y, rows labelled with the fixed-length rank prefix.
struct SubsetTable {
  std::size_t k = 0;
  bool includes_balanced = false;
  std::vector<SubsetListing> columns;
  std::vector<Word> row_prefixes;
};

SubsetTable subset_table(std::size_t k, bool includes_balanced);

// Plain-text rendering, one line per row, columns separated by a single
// space and blank cells padded to the word width:
//
//   y    0011 0101 ... p
//   s(y) 1011 1101 ... 00
//        1111 1001 ... 01
std::string format_subset_table(const SubsetTable& table);

}  // namespace balanced

#endif  // BALANCED_SUBSET_CODEC_HPP_
