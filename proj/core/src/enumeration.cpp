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

#include "balanced/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "balanced/errors.hpp"
#include "balanced/subset_codec.hpp"
#include "balanced/word.hpp"

namespace balanced {
namespace {

void require_even_k(std::size_t k) {
  if (k < 2 || k % 2 != 0) {
    throw DomainError("k must be even and >= 2, got " + std::to_string(k));
  }
}

void require_lambda(std::size_t lambda, std::size_t k) {
  require_even_k(k);
  if (lambda < 1 || lambda > k / 2) {
    throw DomainError("lambda = " + std::to_string(lambda) +
                      " outside [1, " + std::to_string(k / 2) + "]");
  }
}

// T(B) from a precomputed binomial row of length k + 1.
BigInt trace_from_row(std::size_t states, std::size_t k,
                      const std::vector<BigInt>& row) {
  if (states == 0 || k % 2 != 0) return 0;
  if (k == 0) return BigInt(states);
  const std::size_t period = states + 1;
  const std::size_t half = k / 2;
  BigInt sum = row[half];
  for (std::size_t off = period; off <= half; off += period) {
    sum += row[half + off];
    sum += row[half - off];
  }
  return BigInt(period) * sum - pow2(k);
}

template <class Float>
Float cosine_power_sum(std::size_t states, std::size_t k) {
  // 2^k * sum_{i=1..B} cos^k(pi i / (B + 1))
  const Float pi = boost::math::constants::pi<Float>();
  Float sum = 0;
  for (std::size_t i = 1; i <= states; ++i) {
    const Float c = cos(pi * Float(i) / Float(states + 1));
    sum += pow(Float(2) * c, static_cast<int>(k));
  }
  return sum;
}

template <class Float>
std::vector<double> closed_form_with(std::size_t k) {
  const std::size_t top = k / 2;
  std::vector<Float> traces(top + 2);
  for (std::size_t b = 0; b < traces.size(); ++b) {
    traces[b] = cosine_power_sum<Float>(b, k);
  }
  std::vector<double> out(top);
  for (std::size_t lambda = 1; lambda <= top; ++lambda) {
    const Float n =
        traces[lambda + 1] - 2 * traces[lambda] + traces[lambda - 1];
    out[lambda - 1] = n.template convert_to<double>();
  }
  return out;
}

using Float320 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<320,
                                         boost::multiprecision::digit_base_2>>;
using Float1152 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<1152,
                                         boost::multiprecision::digit_base_2>>;

}  // namespace

BigInt trace_closed_walks(const WalkSpec& spec) {
  if (spec.length % 2 != 0 || spec.states == 0) return 0;
  return trace_from_row(spec.states, spec.length,
                        binomial_row(spec.length));
}

BigInt trace_closed_walks_transfer(const WalkSpec& spec) {
  const std::size_t b = spec.states;
  BigInt trace = 0;
  std::vector<BigInt> cur(b), next(b);
  for (std::size_t start = 0; start < b; ++start) {
    std::fill(cur.begin(), cur.end(), BigInt(0));
    cur[start] = 1;
    for (std::size_t step = 0; step < spec.length; ++step) {
      for (std::size_t i = 0; i < b; ++i) {
        next[i] = 0;
        if (i > 0) next[i] += cur[i - 1];
        if (i + 1 < b) next[i] += cur[i + 1];
      }
      cur.swap(next);
    }
    trace += cur[start];
  }
  return trace;
}

CountTable::CountTable(std::size_t k, std::vector<BigInt> counts)
    : k_(k), counts_(std::move(counts)) {}

const BigInt& CountTable::at(std::size_t lambda) const {
  if (lambda < 1 || lambda > counts_.size()) {
    throw RangeError("lambda = " + std::to_string(lambda) +
                     " outside the table");
  }
  return counts_[lambda - 1];
}

CountTable count_table(std::size_t k) {
  require_even_k(k);
  const auto row = binomial_row(k);
  const std::size_t top = k / 2;
  std::vector<BigInt> traces(top + 2);
  for (std::size_t b = 0; b < traces.size(); ++b) {
    traces[b] = trace_from_row(b, k, row);
  }
  std::vector<BigInt> counts(top);
  for (std::size_t lambda = 1; lambda <= top; ++lambda) {
    counts[lambda - 1] =
        traces[lambda + 1] - 2 * traces[lambda] + traces[lambda - 1];
  }
  return CountTable(k, std::move(counts));
}

BigInt n_lambda(std::size_t lambda, std::size_t k) {
  require_lambda(lambda, k);
  const auto row = binomial_row(k);
  return trace_from_row(lambda + 1, k, row) -
         2 * trace_from_row(lambda, k, row) +
         trace_from_row(lambda - 1, k, row);
}

std::vector<double> closed_form_table(std::size_t k) {
  require_even_k(k);
  if (k > kClosedFormMaxK) {
    throw RangeError("closed form supports k <= " +
                     std::to_string(kClosedFormMaxK));
  }
  if (k <= 256) return closed_form_with<Float320>(k);
  return closed_form_with<Float1152>(k);
}

double n_lambda_closed_form(std::size_t lambda, std::size_t k) {
  require_lambda(lambda, k);
  if (k > kClosedFormMaxK) {
    throw RangeError("closed form supports k <= " +
                     std::to_string(kClosedFormMaxK));
  }
  auto one = [&]<class Float>() {
    const Float n = cosine_power_sum<Float>(lambda + 1, k) -
                    2 * cosine_power_sum<Float>(lambda, k) +
                    cosine_power_sum<Float>(lambda - 1, k);
    return n.template convert_to<double>();
  };
  if (k <= 256) return one.operator()<Float320>();
  return one.operator()<Float1152>();
}

CountTable count_table_bruteforce(std::size_t k) {
  require_even_k(k);
  if (k > kBruteForceMaxK) {
    throw ResourceError("brute-force enumeration is capped at k = " +
                        std::to_string(kBruteForceMaxK));
  }
  std::vector<BigInt> counts(k / 2);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
    if (static_cast<std::size_t>(std::popcount(v)) != k / 2) continue;
    const Word y = Word::from_uint(v, k);
    const std::size_t size = subset_members(y, false).size();
    if (size < 1 || size > k / 2) {
      throw InternalError("subset size out of bounds for " + y.to_string());
    }
    counts[size - 1] += 1;
  }
  return CountTable(k, std::move(counts));
}

BigInt n_lambda_bruteforce(std::size_t lambda, std::size_t k) {
  if (k > kBruteForceMaxK) {
    throw ResourceError("brute-force enumeration is capped at k = " +
                        std::to_string(kBruteForceMaxK));
  }
  require_lambda(lambda, k);
  return count_table_bruteforce(k).at(lambda);
}

BigInt baseline_count(std::size_t lambda_prime, std::size_t k) {
  if (lambda_prime < 2) {
    throw DomainError("baseline subsets have at least two members");
  }
  return n_lambda(lambda_prime - 1, k);
}

}  // namespace balanced
