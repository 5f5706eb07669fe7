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

#include "balanced/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>

#include "balanced/bigint.hpp"
#include "balanced/enumeration.hpp"
#include "balanced/errors.hpp"
#include "balanced/fourb6b.hpp"
#include "balanced/subset_codec.hpp"
#include "balanced/word.hpp"

namespace balanced {
namespace {

using Probe = std::function<std::optional<std::string>()>;

CheckResult run(std::string name, const Probe& probe) {
  try {
    if (auto bad = probe()) {
      return {std::move(name), CheckStatus::kFail, *bad};
    }
    return {std::move(name), CheckStatus::kPass, {}};
  } catch (const std::exception& e) {
    return {std::move(name), CheckStatus::kFail,
            std::string("exception: ") + e.what()};
  }
}

std::string at_k(std::string_view what, std::size_t k) {
  return std::string(what) + " (k=" + std::to_string(k) + ")";
}

std::vector<Word> all_words(std::size_t k) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
    out.push_back(Word::from_uint(v, k));
  }
  return out;
}

std::optional<std::string> partition_probe(std::size_t k,
                                           bool includes_balanced) {
  std::map<Word, int> seen;
  for (const Word& y : all_words(k)) {
    if (!is_balanced(y)) continue;
    for (const Word& m : subset_members(y, includes_balanced).members) {
      ++seen[m];
    }
  }
  for (const Word& x : all_words(k)) {
    const int expected = (includes_balanced || !is_balanced(x)) ? 1 : 0;
    const int got = seen.count(x) ? seen[x] : 0;
    if (got != expected) {
      return x.to_string() + " appears in " + std::to_string(got) +
             " listings";
    }
  }
  return std::nullopt;
}

void add_word_checks(std::size_t k, std::vector<CheckResult>& out) {
  out.push_back(run(at_k("compressed listings partition unbalanced words", k),
                    [k] { return partition_probe(k, false); }));
  out.push_back(run(at_k("baseline listings partition all words", k),
                    [k] { return partition_probe(k, true); }));

  out.push_back(run(at_k("balanced words map to balanced images", k), [k] {
    for (const Word& x : all_words(k)) {
      if (!is_balanced(x)) continue;
      if (!is_balanced(invert_prefix(x, first_balancing_index(x)))) {
        return std::optional<std::string>(x.to_string());
      }
    }
    return std::optional<std::string>();
  }));

  out.push_back(run(at_k("one balanced member per baseline listing", k), [k] {
    for (const Word& y : all_words(k)) {
      if (!is_balanced(y)) continue;
      const auto listing = subset_members(y, true);
      const auto n = std::count_if(listing.members.begin(),
                                   listing.members.end(), is_balanced);
      if (n != 1 || !is_balanced(listing.members.back())) {
        return std::optional<std::string>(y.to_string());
      }
    }
    return std::optional<std::string>();
  }));

  out.push_back(run(at_k("subset size equals running-sum span", k), [k] {
    for (const Word& y : all_words(k)) {
      if (!is_balanced(y)) continue;
      if (subset_size_rds(y) != subset_members(y, false).size()) {
        return std::optional<std::string>(y.to_string());
      }
    }
    return std::optional<std::string>();
  }));

  out.push_back(run(at_k("compressed subset size in [1, k/2]", k), [k] {
    for (const Word& y : all_words(k)) {
      if (!is_balanced(y)) continue;
      const std::size_t n = subset_members(y, false).size();
      if (n < 1 || n > k / 2) {
        return std::optional<std::string>(y.to_string() + " has size " +
                                          std::to_string(n));
      }
    }
    return std::optional<std::string>();
  }));

  out.push_back(run(at_k("encode/decode roundtrip, every scheme", k), [k] {
    for (const Word& x : all_words(k)) {
      for (Scheme s : kAllSchemes) {
        if (decode_packet(encode_packet(x, s), k, s) != x) {
          return std::optional<std::string>(x.to_string() + " under " +
                                            std::string(scheme_name(s)));
        }
      }
    }
    return std::optional<std::string>();
  }));
}

void add_count_checks(std::size_t k, std::vector<CheckResult>& out) {
  out.push_back(run(at_k("count identities", k), [k] {
    const CountTable t = count_table(k);
    BigInt total = 0, weighted = 0;
    for (std::size_t l = 1; l <= t.max_lambda(); ++l) {
      total += t.at(l);
      weighted += BigInt(l) * t.at(l);
    }
    const BigInt c = binomial(k, k / 2);
    if (total != c) return std::optional<std::string>("sum N != C(k,k/2)");
    if (weighted != pow2(k) - c) {
      return std::optional<std::string>("sum lambda N != 2^k - C(k,k/2)");
    }
    return std::optional<std::string>();
  }));

  out.push_back(run(at_k("walk-count table equals brute force", k), [k] {
    const CountTable exact = count_table(k);
    const CountTable brute = count_table_bruteforce(k);
    for (std::size_t l = 1; l <= exact.max_lambda(); ++l) {
      if (exact.at(l) != brute.at(l)) {
        return std::optional<std::string>("lambda=" + std::to_string(l));
      }
    }
    return std::optional<std::string>();
  }));

  out.push_back(run(at_k("special values N(1)=2, N(k/2)=k, N(k/2-1)=k(k-4)",
                         k),
                    [k] {
    const CountTable t = count_table_bruteforce(k);
    if (t.at(1) != 2) return std::optional<std::string>("N(1)");
    if (t.at(k / 2) != k) return std::optional<std::string>("N(k/2)");
    if (k > 4 && t.at(k / 2 - 1) != BigInt(k * (k - 4))) {
      return std::optional<std::string>("N(k/2-1)");
    }
    return std::optional<std::string>();
  }));

  // The printed closed form 2 * 2^(k/2 - 1) for lambda = 2 only matches at
  // k = 4; record the measured value.
  const BigInt measured = count_table_bruteforce(k).at(2);
  const BigInt printed = pow2(k / 2);
  CheckResult note{at_k("N(2,k) against 2*2^(k/2-1)", k),
                   measured == printed ? CheckStatus::kPass
                                       : CheckStatus::kNote,
                   "N(2," + std::to_string(k) + ")=" + measured.str() +
                       " vs formula " + printed.str()};
  if (k == 4 && measured != printed) note.status = CheckStatus::kFail;
  out.push_back(std::move(note));
}

void add_4b6b_checks(std::vector<CheckResult>& out) {
  out.push_back(run("4B6B smallest-index rule reproduces the reference table",
                    [] {
    for (std::uint64_t v = 0; v < 16; ++v) {
      const Word n = Word::from_uint(v, 4);
      const auto got = fourb6b::encode_nibble(n).bits().to_string();
      if (got != kReference4B6B[v]) {
        return std::optional<std::string>(n.to_string() + " -> " + got);
      }
    }
    return std::optional<std::string>();
  }));
  out.push_back(run("4B6B codewords distinct, weight 3, decodable", [] {
    std::set<Word> seen;
    for (std::uint64_t v = 0; v < 16; ++v) {
      const Word n = Word::from_uint(v, 4);
      const Word s = fourb6b::encode_nibble(n).bits();
      if (s.weight() != 3 || !seen.insert(s).second ||
          fourb6b::decode_sextet(s) != n) {
        return std::optional<std::string>(n.to_string());
      }
    }
    return std::optional<std::string>();
  }));
}

}  // namespace

bool SelfCheckReport::passed() const {
  return std::none_of(results.begin(), results.end(), [](const auto& r) {
    return r.status == CheckStatus::kFail;
  });
}

SelfCheckReport selfcheck(std::size_t k_max) {
  if (k_max > kSelfCheckMaxK) {
    throw DomainError("selfcheck supports k_max <= " +
                      std::to_string(kSelfCheckMaxK));
  }
  SelfCheckReport report;
  report.k_max = k_max;
  auto& out = report.results;

  if (k_max >= 4) {
    out.push_back(run("k=4 baseline subset table reproduced", [] {
      const auto text = format_subset_table(subset_table(4, true));
      if (text != kReferenceBaselineTable4) return std::optional(text);
      return std::optional<std::string>();
    }));
    out.push_back(run("k=4 compressed subset table reproduced", [] {
      const auto text = format_subset_table(subset_table(4, false));
      if (text != kReferenceCompressedTable4) return std::optional(text);
      return std::optional<std::string>();
    }));
  }
  add_4b6b_checks(out);
  for (std::size_t k = 4; k <= k_max; k += 2) {
    add_word_checks(k, out);
    add_count_checks(k, out);
  }
  return report;
}

void print_report(std::ostream& out, const SelfCheckReport& report) {
  for (const auto& r : report.results) {
    switch (r.status) {
      case CheckStatus::kPass: out << "PASS  "; break;
      case CheckStatus::kFail: out << "FAIL  "; break;
      case CheckStatus::kNote: out << "NOTE  "; break;
    }
    out << r.name;
    if (!r.detail.empty()) out << "  " << r.detail;
    out << '\n';
  }
  out << (report.passed() ? "selfcheck passed" : "selfcheck FAILED")
      << " (k_max=" << report.k_max << ")\n";
}

}  // namespace balanced
