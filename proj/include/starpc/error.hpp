// Copyright 2026 The starpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STARPC_ERROR_HPP_
#define STARPC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace starpc {

// Numeric values are part of the C API (see starpc.h) and must not change.
enum class Errc {
  kInvalidArgument = 1,
  kOwnerMismatch = 2,
  kDivisionByZero = 3,
  kCharacteristicMismatch = 4,
  kNoSolution = 5,
  kAmbiguousSolution = 6,
  kInvalidAlpha = 7,
  kNoSystematicForm = 8,
  kCannotSystematize = 9,
  kEnumerationGuard = 10,
  kConfiguration = 11,
  kInfeasible = 12,
  kCorruptedResponse = 13,
  kInternal = 14,
  kParse = 15,
  kIo = 16,
};

std::string_view ErrcName(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void Fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline void Require(bool condition, Errc code, const std::string& message) {
  if (!condition) throw Error(code, message);
}

}  // namespace starpc

#endif  // STARPC_ERROR_HPP_
