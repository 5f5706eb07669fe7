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

#ifndef BALANCED_BIGINT_HPP_
#define BALANCED_BIGINT_HPP_

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace balanced {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::size_t n, std::size_t r);

// C(n, 0), ..., C(n, n).
std::vector<BigInt> binomial_row(std::size_t n);

BigInt pow2(std::size_t e);

// log2 of a positive integer, accurate to long double precision for any
// magnitude.
long double log2_big(const BigInt& v);

// num / den as long double without overflowing on huge operands.  Results
// below the long double range flush to zero.
long double big_ratio(const BigInt& num, const BigInt& den);

}  // namespace balanced

#endif  // BALANCED_BIGINT_HPP_
