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

#ifndef BALANCED_ERRORS_HPP_
#define BALANCED_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace balanced {

// Precondition on a value's domain was violated (odd length, unbalanced
// word where a balanced one is required, bad scheme/argument combination).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Index or numeric range violation.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A Knuth codeword whose payload or index cannot have come from the encoder.
class CorruptCodewordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A packet that fails structural or balance validation on decode.
class CorruptPacketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Six-bit group that is not one of the sixteen 4B6B codewords.
class InvalidSextetError : public CorruptPacketError {
 public:
  using CorruptPacketError::CorruptPacketError;
};

// Requested computation exceeds the supported size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input bit count is not a whole number of blocks.
class InputLengthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Framed stream could not be parsed or decoded.  packet_index() is the
// zero-based index of the offending packet, or npos for header failures.
class StreamCorruptError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  StreamCorruptError(const std::string& what, std::size_t packet_index)
      : std::runtime_error(what), packet_index_(packet_index) {}

  std::size_t packet_index() const noexcept { return packet_index_; }

 private:
  std::size_t packet_index_;
};

// Broken internal invariant. Seeing one of these is a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace balanced

#endif  // BALANCED_ERRORS_HPP_
