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

#ifndef BALANCED_ENUMERATION_HPP_
#define BALANCED_ENUMERATION_HPP_

#include <cstddef>
#include <vector>

#include "balanced/bigint.hpp"

// Counting balanced words by the size of their compressed subset.
//
// N(lambda, k) is the number of balanced words of length k whose running
// sum spans exactly lambda (equivalently, whose compressed subset has
// lambda members).  It is the second difference of T(B), the number of
// closed walks of length k on a path of B running-sum states:
//
//   N(lambda, k) = T(lambda + 1) - 2 T(lambda) + T(lambda - 1).
namespace balanced {

// Closed walks of `length` steps on a path graph with `states` vertices,
// i.e. the trace of the k-th power of the B x B tridiagonal 0/1 matrix.
struct WalkSpec {
  std::size_t states = 0;
  std::size_t length = 0;
};

// Exact trace via the reflection principle:
//   T(B) = (B + 1) * sum_m C(k, k/2 + m (B + 1)) - 2^k   (k even)
// which needs only one binomial row.
BigInt trace_closed_walks(const WalkSpec& spec);

// Same quantity by stepping the transfer matrix from every start state.
// O(k * B^2) big-integer additions; an independent route for cross-checks.
BigInt trace_closed_walks_transfer(const WalkSpec& spec);

// N(lambda, k) for lambda = 1..k/2.
class CountTable {
 public:
  CountTable(std::size_t k, std::vector<BigInt> counts);

  std::size_t k() const noexcept { return k_; }
  std::size_t max_lambda() const noexcept { return counts_.size(); }

  // RangeError outside [1, k/2].
  const BigInt& at(std::size_t lambda) const;

  const std::vector<BigInt>& counts() const noexcept { return counts_; }

 private:
  std::size_t k_;
  std::vector<BigInt> counts_;  // counts_[lambda - 1]
};

// Whole table from one binomial row.  DomainError for odd k or k < 2.
CountTable count_table(std::size_t k);

// DomainError unless k is even >= 2 and 1 <= lambda <= k/2.
BigInt n_lambda(std::size_t lambda, std::size_t k);

// Floating evaluation of the cosine form
//   N = 2^k [ sum_{i<=l+1} cos^k(pi i/(l+2)) - 2 sum_{i<=l} cos^k(pi i/(l+1))
//             + sum_{i<=l-1} cos^k(pi i/l) ].
// The alternating sum cancels about k bits, so the terms are carried in a
// binary float wide enough for the requested k.  RangeError above
// kClosedFormMaxK.
inline constexpr std::size_t kClosedFormMaxK = 1024;
double n_lambda_closed_form(std::size_t lambda, std::size_t k);

// All lambda at once; shares the per-B cosine sums.
std::vector<double> closed_form_table(std::size_t k);

// Direct count over every balanced word of length k.  ResourceError for
// k > kBruteForceMaxK.
inline constexpr std::size_t kBruteForceMaxK = 20;
BigInt n_lambda_bruteforce(std::size_t lambda, std::size_t k);
CountTable count_table_bruteforce(std::size_t k);

// Number of balanced words whose uncompressed (balanced-member-inclusive)
// subset has lambda_prime members, 2 <= lambda_prime <= k/2 + 1.  The
// walk window shifts by one, so this is N(lambda_prime - 1, k).
BigInt baseline_count(std::size_t lambda_prime, std::size_t k);

}  // namespace balanced

#endif  // BALANCED_ENUMERATION_HPP_
