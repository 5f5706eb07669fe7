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

#ifndef BALANCED_ANALYTICS_HPP_
#define BALANCED_ANALYTICS_HPP_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "balanced/bigint.hpp"
#include "balanced/enumeration.hpp"
#include "balanced/subset_codec.hpp"

// Average prefix lengths (redundancy) of the balancing schemes.
//
//   H0  full balanced set          k - log2 C(k, k/2)
//   H   compressed subsets         sum lambda N log2 lambda / (2^k - C)
//   H1  uncompressed subsets       2^-k sum lambda' N'(lambda') log2 lambda'
//   H2  bit recycling              sum_c P(c) AV(c)
//
// H' and H1' replace log2 lambda by Delta(lambda), the shortest balanced
// word length whose full set has at least lambda members.
//
// Every ratio of big integers goes through big_ratio(), so k = 1024 and
// beyond stay in range.
namespace balanced {

inline constexpr std::array<std::size_t, 9> kTable1BlockLengths = {
    4, 8, 16, 32, 64, 128, 256, 512, 1024};

double h0_exact(std::size_t k);
double h0_approx(std::size_t k);

double h_avg(std::size_t k);
double h1_avg(std::size_t k);
double h2_avg(std::size_t k);

// Smallest even m >= 0 with C(m, m/2) >= lambda.  DomainError for 0.
std::size_t delta_lambda(std::size_t lambda);

double h_prime(std::size_t k);
double h1_prime(std::size_t k);

// Weighted view of a CountTable: weight[lambda] = lambda * count(lambda)
// over lambda in [first_lambda, first_lambda + weights.size()), and the
// total they sum to (2^k - C(k, k/2) compressed, 2^k uncompressed).
struct PrefixEntropySpec {
  std::size_t k = 0;
  std::size_t first_lambda = 1;
  std::vector<BigInt> weights;
  BigInt normalizer;
};

PrefixEntropySpec compressed_weights(const CountTable& table);
PrefixEntropySpec uncompressed_weights(const CountTable& table);

// sum_lambda weight(lambda) * cost(lambda) / normalizer
template <class Cost>
double weighted_average(const PrefixEntropySpec& spec, Cost&& cost) {
  long double acc = 0;
  for (std::size_t i = 0; i < spec.weights.size(); ++i) {
    const std::size_t lambda = spec.first_lambda + i;
    acc += big_ratio(spec.weights[i], spec.normalizer) *
           static_cast<long double>(cost(lambda));
  }
  return static_cast<double>(acc);
}

struct RedundancyRow {
  std::size_t k = 0;
  double h0 = 0, h = 0, h1 = 0, h2 = 0;
};

struct BalancedPrefixRow {
  std::size_t k = 0;
  double h_prime = 0, h1_prime = 0, log2k = 0;
  std::size_t ceil_log2k = 0;
};

struct FixedPrefixRow {
  std::size_t k = 0;
  std::size_t knuth = 0, baseline = 0, proposed = 0;
};

RedundancyRow redundancy_row(std::size_t k);
BalancedPrefixRow balanced_prefix_row(std::size_t k);
FixedPrefixRow fixed_prefix_row(std::size_t k);

// Mean and variance of the prefix length a scheme emits for a uniformly
// random k-bit information word, using the scheme's integer length rule.
struct PrefixBitsMoments {
  double mean = 0;
  double variance = 0;
};
PrefixBitsMoments prefix_bits_moments(std::size_t k, Scheme scheme);

// CSV emitters.  Header row first; H values with four decimals.
void write_table1_csv(std::ostream& out, std::span<const std::size_t> ks);
void write_nlambda_csv(std::ostream& out, std::span<const std::size_t> ks);
void write_fig2_csv(std::ostream& out, std::span<const std::size_t> ks);
void write_fig3_csv(std::ostream& out, std::span<const std::size_t> ks);

}  // namespace balanced

#endif  // BALANCED_ANALYTICS_HPP_
