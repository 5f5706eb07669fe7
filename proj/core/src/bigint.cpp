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

#include "balanced/bigint.hpp"

#include <cmath>
#include <cstdint>

#include "balanced/errors.hpp"

namespace balanced {
namespace {

struct Scaled {
  long double mantissa;  // in [2^63, 2^64)
  long long exponent;    // value ~= mantissa * 2^exponent
};

Scaled scale(const BigInt& v) {
  const auto top = static_cast<long long>(boost::multiprecision::msb(v));
  const long long shift = top > 63 ? top - 63 : 0;
  const BigInt head = v >> static_cast<unsigned>(shift);
  return Scaled{static_cast<long double>(head.convert_to<std::uint64_t>()),
                shift};
}

}  // namespace

BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigInt acc = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;
  }
  return acc;
}

std::vector<BigInt> binomial_row(std::size_t n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    row[i] = row[i - 1] * (n - i + 1) / i;
  }
  return row;
}

BigInt pow2(std::size_t e) {
  BigInt v = 1;
  v <<= static_cast<unsigned>(e);
  return v;
}

long double log2_big(const BigInt& v) {
  if (v <= 0) throw DomainError("log2 of a non-positive integer");
  const Scaled s = scale(v);
  return std::log2(s.mantissa) + static_cast<long double>(s.exponent);
}

long double big_ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("division by zero");
  if (num == 0) return 0.0L;
  const bool negative = (num < 0) != (den < 0);
  const Scaled a = scale(abs(num));
  const Scaled b = scale(abs(den));
  const long double r = std::ldexp(a.mantissa / b.mantissa,
                                   static_cast<int>(a.exponent - b.exponent));
  return negative ? -r : r;
}

}  // namespace balanced
