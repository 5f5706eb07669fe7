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

#include "balanced/analytics.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "balanced/errors.hpp"
#include "balanced/word.hpp"

namespace balanced {
namespace {

void require_block_length(std::size_t k) {
  if (k < 4 || k % 2 != 0) {
    throw DomainError("k must be even and >= 4, got " + std::to_string(k));
  }
}

double log2_lambda(std::size_t lambda) {
  return std::log2(static_cast<double>(lambda));
}

double h2_from_binomials(std::size_t k) {
  long double acc = 0;
  for (std::size_t c = 1; c <= k / 2; ++c) {
    // P(c) = 2^(c + 1 - k) C(k - 1 - c, k/2 - c)
    const long double p =
        big_ratio(binomial(k - 1 - c, k / 2 - c), pow2(k - 1 - c));
    const unsigned fl = floor_log2(c);
    const unsigned cl = ceil_log2(c);
    const long double d = static_cast<long double>(c - (std::size_t{1} << fl));
    const long double av =
        (static_cast<long double>(c) - 2 * d) * fl / std::ldexp(1.0L, fl) +
        2 * d * cl / std::ldexp(1.0L, cl);
    acc += p * av;
  }
  return static_cast<double>(acc);
}

std::string fixed4(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << v;
  return s.str();
}

}  // namespace

double h0_exact(std::size_t k) {
  if (k < 2 || k % 2 != 0) throw DomainError("k must be even and >= 2");
  return static_cast<double>(static_cast<long double>(k) -
                             log2_big(binomial(k, k / 2)));
}

double h0_approx(std::size_t k) {
  if (k < 2 || k % 2 != 0) throw DomainError("k must be even and >= 2");
  return 0.5 * std::log2(static_cast<double>(k)) + 0.326;
}

PrefixEntropySpec compressed_weights(const CountTable& table) {
  PrefixEntropySpec spec;
  spec.k = table.k();
  spec.first_lambda = 1;
  for (std::size_t lambda = 1; lambda <= table.max_lambda(); ++lambda) {
    spec.weights.push_back(BigInt(lambda) * table.at(lambda));
  }
  spec.normalizer = pow2(spec.k) - binomial(spec.k, spec.k / 2);
  return spec;
}

PrefixEntropySpec uncompressed_weights(const CountTable& table) {
  PrefixEntropySpec spec;
  spec.k = table.k();
  spec.first_lambda = 2;
  // A compressed subset of size lambda gains the balanced member.
  for (std::size_t lambda = 1; lambda <= table.max_lambda(); ++lambda) {
    spec.weights.push_back(BigInt(lambda + 1) * table.at(lambda));
  }
  spec.normalizer = pow2(spec.k);
  return spec;
}

double h_avg(std::size_t k) {
  require_block_length(k);
  return weighted_average(compressed_weights(count_table(k)), log2_lambda);
}

double h1_avg(std::size_t k) {
  require_block_length(k);
  return weighted_average(uncompressed_weights(count_table(k)), log2_lambda);
}

double h2_avg(std::size_t k) {
  require_block_length(k);
  return h2_from_binomials(k);
}

std::size_t delta_lambda(std::size_t lambda) {
  if (lambda == 0) throw DomainError("delta_lambda needs lambda >= 1");
  std::size_t m = 0;
  while (binomial(m, m / 2) < lambda) m += 2;
  return m;
}

double h_prime(std::size_t k) {
  require_block_length(k);
  return weighted_average(compressed_weights(count_table(k)), delta_lambda);
}

double h1_prime(std::size_t k) {
  require_block_length(k);
  return weighted_average(uncompressed_weights(count_table(k)), delta_lambda);
}

RedundancyRow redundancy_row(std::size_t k) {
  require_block_length(k);
  const CountTable table = count_table(k);
  RedundancyRow row;
  row.k = k;
  row.h0 = h0_exact(k);
  row.h = weighted_average(compressed_weights(table), log2_lambda);
  row.h1 = weighted_average(uncompressed_weights(table), log2_lambda);
  row.h2 = h2_from_binomials(k);
  return row;
}

BalancedPrefixRow balanced_prefix_row(std::size_t k) {
  require_block_length(k);
  const CountTable table = count_table(k);
  BalancedPrefixRow row;
  row.k = k;
  row.h_prime = weighted_average(compressed_weights(table), delta_lambda);
  row.h1_prime = weighted_average(uncompressed_weights(table), delta_lambda);
  row.log2k = std::log2(static_cast<double>(k));
  row.ceil_log2k = ceil_log2(k);
  return row;
}

FixedPrefixRow fixed_prefix_row(std::size_t k) {
  return FixedPrefixRow{k, prefix_length(k, Scheme::kKnuth),
                        prefix_length(k, Scheme::kBaselineFL),
                        prefix_length(k, Scheme::kProposedFL)};
}

PrefixBitsMoments prefix_bits_moments(std::size_t k, Scheme scheme) {
  require_block_length(k);
  auto moments_of = [](auto&& dist) {
    long double m1 = 0, m2 = 0;
    for (const auto& [prob, bits] : dist) {
      m1 += prob * bits;
      m2 += prob * bits * bits;
    }
    return PrefixBitsMoments{static_cast<double>(m1),
                             static_cast<double>(m2 - m1 * m1)};
  };

  const BigInt total = pow2(k);
  const BigInt balanced_words = binomial(k, k / 2);
  std::vector<std::pair<long double, long double>> dist;

  switch (scheme) {
    case Scheme::kKnuth:
    case Scheme::kBaselineFL:
      dist.emplace_back(1.0L, prefix_length(k, scheme));
      break;
    case Scheme::kProposedFL:
    case Scheme::kProposedFull: {
      const long double q = big_ratio(total - balanced_words, total);
      dist.emplace_back(q, prefix_length(k, scheme));
      break;
    }
    case Scheme::kProposedVL: {
      const CountTable table = count_table(k);
      for (std::size_t lambda = 1; lambda <= table.max_lambda(); ++lambda) {
        dist.emplace_back(big_ratio(BigInt(lambda) * table.at(lambda), total),
                          prefix_length(k, scheme, lambda));
      }
      break;
    }
  }
  return moments_of(dist);
}

void write_table1_csv(std::ostream& out, std::span<const std::size_t> ks) {
  out << "k,H0,H,H1,H2\n";
  for (std::size_t k : ks) {
    const RedundancyRow r = redundancy_row(k);
    out << r.k << ',' << fixed4(r.h0) << ',' << fixed4(r.h) << ','
        << fixed4(r.h1) << ',' << fixed4(r.h2) << '\n';
  }
}

void write_nlambda_csv(std::ostream& out, std::span<const std::size_t> ks) {
  out << "k,lambda,N\n";
  for (std::size_t k : ks) {
    const CountTable table = count_table(k);
    for (std::size_t lambda = 1; lambda <= table.max_lambda(); ++lambda) {
      out << k << ',' << lambda << ',' << table.at(lambda) << '\n';
    }
  }
}

void write_fig2_csv(std::ostream& out, std::span<const std::size_t> ks) {
  out << "k,H_prime,H1_prime,log2k,ceil_log2k\n";
  for (std::size_t k : ks) {
    const BalancedPrefixRow r = balanced_prefix_row(k);
    out << r.k << ',' << fixed4(r.h_prime) << ',' << fixed4(r.h1_prime)
        << ',' << fixed4(r.log2k) << ',' << r.ceil_log2k << '\n';
  }
}

void write_fig3_csv(std::ostream& out, std::span<const std::size_t> ks) {
  out << "k,knuth,baseline_fl,proposed_fl\n";
  for (std::size_t k : ks) {
    const FixedPrefixRow r = fixed_prefix_row(k);
    out << r.k << ',' << r.knuth << ',' << r.baseline << ',' << r.proposed
        << '\n';
  }
}

}  // namespace balanced
