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

#ifndef BALANCED_SELFCHECK_HPP_
#define BALANCED_SELFCHECK_HPP_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace balanced {

// Reference transcriptions used by the self-check and the test suites.
inline constexpr std::string_view kReferenceBaselineTable4 =
    "y    0011 0101 0110 1001 1010 1100 p\n"
    "s(y) 1011 1101 1000 0001 0010 0000 00\n"
    "     1111 1001 1110 0111 0110 0100 01\n"
    "     1100      1010 0101      0011 10\n";

inline constexpr std::string_view kReferenceCompressedTable4 =
    "y    0011 0101 0110 1001 1010 1100 p\n"
    "s(y) 1011 1101 1000 0001 0010 0000 0\n"
    "     1111      1110 0111      0100 1\n";

// 4B6B codewords indexed by the input nibble's value.
inline constexpr std::array<std::string_view, 16> kReference4B6B = {
    "110010", "100101", "101001", "110100", "110001", "100110",
    "101010", "100011", "011100", "010110", "011010", "001101",
    "001011", "010101", "011001", "001110"};

enum class CheckStatus { kPass, kFail, kNote };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;  // counterexample on failure, observation for notes
};

struct SelfCheckReport {
  std::size_t k_max = 0;
  std::vector<CheckResult> results;

  bool passed() const;
};

inline constexpr std::size_t kSelfCheckMaxK = 16;

// Runs the exhaustive property suites for every even k in [4, k_max].
// DomainError if k_max > kSelfCheckMaxK.  Failures are report entries.
SelfCheckReport selfcheck(std::size_t k_max);

// One line per result: "PASS|FAIL|NOTE  name  detail".
void print_report(std::ostream& out, const SelfCheckReport& report);

}  // namespace balanced

#endif  // BALANCED_SELFCHECK_HPP_
