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

#include "starpc/error.hpp"

namespace starpc {

std::string_view ErrcName(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument: return "invalid_argument";
    case Errc::kOwnerMismatch: return "owner_mismatch";
    case Errc::kDivisionByZero: return "division_by_zero";
    case Errc::kCharacteristicMismatch: return "characteristic_mismatch";
    case Errc::kNoSolution: return "no_solution";
    case Errc::kAmbiguousSolution: return "ambiguous_solution";
    case Errc::kInvalidAlpha: return "invalid_alpha";
    case Errc::kNoSystematicForm: return "no_systematic_form";
    case Errc::kCannotSystematize: return "cannot_systematize";
    case Errc::kEnumerationGuard: return "enumeration_guard";
    case Errc::kConfiguration: return "configuration";
    case Errc::kInfeasible: return "infeasible";
    case Errc::kCorruptedResponse: return "corrupted_response";
    case Errc::kInternal: return "internal";
    case Errc::kParse: return "parse";
    case Errc::kIo: return "io";
  }
  return "unknown";
}

}  // namespace starpc
