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

#include "balanced/knuth.hpp"

#include <string>

#include "balanced/errors.hpp"

namespace balanced {

std::size_t knuth_prefix_bits(std::size_t k) { return ceil_log2(k); }

KnuthCodeword ka_encode(const Word& x) {
  const std::size_t k = x.size();
  if (k < 2 || k % 2 != 0) {
    throw DomainError("Knuth encoding needs an even length >= 2, got " +
                      std::to_string(k));
  }
  const std::size_t e = first_balancing_index(x);
  return KnuthCodeword{Word::from_uint(e - 1, knuth_prefix_bits(k)),
                       invert_prefix(x, e)};
}

Word ka_decode(const KnuthCodeword& cw) {
  const std::size_t k = cw.payload.size();
  if (k < 2 || k % 2 != 0 || !is_balanced(cw.payload)) {
    throw CorruptCodewordError("payload " + cw.payload.to_string() +
                               " is not balanced");
  }
  if (cw.prefix.size() != knuth_prefix_bits(k)) {
    throw CorruptCodewordError("prefix width " +
                               std::to_string(cw.prefix.size()) +
                               " does not match k = " + std::to_string(k));
  }
  const std::size_t e = cw.prefix.to_uint() + 1;
  if (e > k) {
    throw CorruptCodewordError("decoded index " + std::to_string(e) +
                               " exceeds k = " + std::to_string(k));
  }
  return invert_prefix(cw.payload, e);
}

}  // namespace balanced
