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

#include "balanced/subset_codec.hpp"

#include <algorithm>
#include <sstream>

#include "balanced/errors.hpp"
#include "balanced/fourb6b.hpp"
#include "balanced/knuth.hpp"

namespace balanced {
namespace {

void require_balanced(const Word& y, const char* what) {
  if (y.empty() || y.size() % 2 != 0 || !is_balanced(y)) {
    throw DomainError(std::string(what) + ": " + y.to_string() +
                      " is not a balanced even-length word");
  }
}

void require_block_length(std::size_t k) {
  if (k < 4 || k % 2 != 0) {
    throw DomainError("block length must be even and >= 4, got " +
                      std::to_string(k));
  }
}

std::size_t find_rank(const SubsetListing& listing, const Word& x) {
  const auto it =
      std::find(listing.members.begin(), listing.members.end(), x);
  if (it == listing.members.end()) {
    throw InternalError(x.to_string() + " missing from the listing of " +
                        listing.y.to_string());
  }
  return static_cast<std::size_t>(it - listing.members.begin());
}

Word rank_prefix(std::size_t rank, std::size_t width) {
  if (width < 64 && (rank >> width) != 0) {
    throw InternalError("rank " + std::to_string(rank) +
                        " does not fit a " + std::to_string(width) +
                        "-bit prefix");
  }
  return Word::from_uint(rank, width);
}

}  // namespace

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kKnuth: return "knuth";
    case Scheme::kBaselineFL: return "baseline-fl";
    case Scheme::kProposedFL: return "proposed-fl";
    case Scheme::kProposedVL: return "proposed-vl";
    case Scheme::kProposedFull: return "proposed-full";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (Scheme s : kAllSchemes) {
    if (scheme_name(s) == name) return s;
  }
  return std::nullopt;
}

std::optional<Scheme> scheme_from_wire(std::uint8_t value) {
  if (value > static_cast<std::uint8_t>(Scheme::kProposedFull)) {
    return std::nullopt;
  }
  return static_cast<Scheme>(value);
}

bool is_compressed(Scheme s) {
  return s == Scheme::kProposedFL || s == Scheme::kProposedVL ||
         s == Scheme::kProposedFull;
}

SubsetListing subset_members(const Word& y, bool includes_balanced) {
  require_balanced(y, "subset_members");
  SubsetListing listing{y, {}, includes_balanced};
  std::optional<Word> balanced_member;
  for (std::size_t j = 1; j <= y.size(); ++j) {
    Word candidate = invert_prefix(y, j);
    if (first_balancing_index(candidate) != j) continue;
    if (is_balanced(candidate)) {
      balanced_member = std::move(candidate);
    } else {
      listing.members.push_back(std::move(candidate));
    }
  }
  std::sort(listing.members.begin(), listing.members.end());
  if (!balanced_member) {
    throw InternalError("no balanced member associated with " +
                        y.to_string());
  }
  if (includes_balanced) listing.members.push_back(*balanced_member);
  return listing;
}

std::size_t subset_size_rds(const Word& y) {
  require_balanced(y, "subset_size_rds");
  const auto ext = rds_extrema(y);
  return static_cast<std::size_t>(ext.max_rds - ext.min_rds);
}

std::size_t subset_rank(const Word& x, bool includes_balanced) {
  const Word y = invert_prefix(x, first_balancing_index(x));
  return find_rank(subset_members(y, includes_balanced), x);
}

std::size_t prefix_length(std::size_t k, Scheme scheme,
                          std::optional<std::size_t> lambda) {
  require_block_length(k);
  switch (scheme) {
    case Scheme::kKnuth:
      return knuth_prefix_bits(k);
    case Scheme::kBaselineFL:
      return ceil_log2(k / 2 + 1);
    case Scheme::kProposedFL:
      return ceil_log2(k / 2);
    case Scheme::kProposedVL:
      if (!lambda || *lambda < 1 || *lambda > k / 2) {
        throw DomainError(
            "variable-length prefix needs a subset size in [1, k/2]");
      }
      return std::max<std::size_t>(1, ceil_log2(*lambda));
    case Scheme::kProposedFull:
      return fourb6b::balanced_prefix_length(ceil_log2(k / 2));
  }
  throw DomainError("unknown scheme");
}

Packet encode_packet(const Word& x, Scheme scheme) {
  const std::size_t k = x.size();
  require_block_length(k);

  if (scheme == Scheme::kKnuth) {
    auto cw = ka_encode(x);
    return Packet{cw.prefix + cw.payload};
  }
  if (scheme == Scheme::kProposedFull) return fourb6b::full_encode(x);

  if (is_compressed(scheme) && is_balanced(x)) return Packet{x};

  const Word y = invert_prefix(x, first_balancing_index(x));
  const bool with_balanced = scheme == Scheme::kBaselineFL;
  const SubsetListing listing = subset_members(y, with_balanced);
  const std::size_t rank = find_rank(listing, x);

  const std::size_t width =
      scheme == Scheme::kProposedVL
          ? prefix_length(k, scheme, listing.size())
          : prefix_length(k, scheme);
  return Packet{rank_prefix(rank, width) + y};
}

Word decode_packet(const Packet& p, std::size_t k, Scheme scheme) {
  require_block_length(k);
  const std::size_t n = p.bit_length();
  if (n < k) {
    throw CorruptPacketError("packet of " + std::to_string(n) +
                             " bits is shorter than k = " +
                             std::to_string(k));
  }
  const Word y = p.bits.slice(n - k, k);
  if (!is_balanced(y)) {
    throw CorruptPacketError("payload " + y.to_string() + " is not balanced");
  }

  if (scheme == Scheme::kKnuth) {
    if (n != k + knuth_prefix_bits(k)) {
      throw CorruptPacketError("Knuth packet has wrong length " +
                               std::to_string(n));
    }
    try {
      return ka_decode(KnuthCodeword{p.bits.slice(0, n - k), y});
    } catch (const CorruptCodewordError& e) {
      throw CorruptPacketError(e.what());
    }
  }
  if (scheme == Scheme::kProposedFull) return fourb6b::full_decode(p, k);

  if (is_compressed(scheme) && n == k) return y;

  const Word prefix = p.bits.slice(0, n - k);
  const bool with_balanced = scheme == Scheme::kBaselineFL;
  const SubsetListing listing = subset_members(y, with_balanced);

  const std::size_t expected =
      scheme == Scheme::kProposedVL
          ? prefix_length(k, scheme, listing.size())
          : prefix_length(k, scheme);
  if (prefix.size() != expected) {
    throw CorruptPacketError("prefix of " + std::to_string(prefix.size()) +
                             " bits, expected " + std::to_string(expected));
  }
  const std::uint64_t rank = prefix.to_uint();
  if (rank >= listing.size()) {
    throw CorruptPacketError("rank " + std::to_string(rank) +
                             " outside a subset of size " +
                             std::to_string(listing.size()));
  }
  return listing.members[rank];
}

SubsetTable subset_table(std::size_t k, bool includes_balanced) {
  require_block_length(k);
  if (k > 24) throw ResourceError("subset tables are limited to k <= 24");
  SubsetTable table;
  table.k = k;
  table.includes_balanced = includes_balanced;
  std::size_t rows = 0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
    Word y = Word::from_uint(v, k);
    if (!is_balanced(y)) continue;
    table.columns.push_back(subset_members(y, includes_balanced));
    rows = std::max(rows, table.columns.back().size());
  }
  const std::size_t width = prefix_length(
      k, includes_balanced ? Scheme::kBaselineFL : Scheme::kProposedFL);
  for (std::size_t r = 0; r < rows; ++r) {
    table.row_prefixes.push_back(Word::from_uint(r, width));
  }
  return table;
}

std::string format_subset_table(const SubsetTable& table) {
  const std::string blank(table.k, ' ');
  std::ostringstream out;
  out << "y   ";
  for (const auto& col : table.columns) out << ' ' << col.y.to_string();
  out << " p\n";
  for (std::size_t r = 0; r < table.row_prefixes.size(); ++r) {
    out << (r == 0 ? "s(y)" : "    ");
    for (const auto& col : table.columns) {
      out << ' '
          << (r < col.members.size() ? col.members[r].to_string() : blank);
    }
    out << ' ' << table.row_prefixes[r].to_string() << '\n';
  }
  return out.str();
}

}  // namespace balanced
