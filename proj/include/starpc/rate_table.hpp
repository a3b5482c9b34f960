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

// Formula-vs-measured rate tables over RS configurations on GF(p) with
// evaluation points 0, 1, ..., N-1.
//
// K = 1 rows run the replicated scheme and use (N - T) / N; other rows run
// the systematic scheme and use min(N - (G(K - 1) + T), K) / N.

#ifndef STARPC_RATE_TABLE_HPP_
#define STARPC_RATE_TABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starpc/wire.hpp"

namespace starpc {

struct Range {
  std::size_t lo = 1;
  std::size_t hi = 1;
};

struct RateTableSpec {
  std::uint32_t p = 11;
  std::size_t data_rows = 1;  // M
  Range n{8, 8};
  Range k{1, 3};
  Range t{1, 2};
  Range g{1, 2};
  std::uint64_t seed = 0;
};

struct RateRow {
  std::size_t n = 0, k = 0, t = 0, g = 0;
  std::optional<std::size_t> f;
  std::optional<std::size_t> s;
  std::string rate_formula;   // fraction or "infeasible"
  std::string rate_measured;  // fraction or "infeasible"
  std::string rate_decimal;   // decimal of the formula rate, empty if none
  std::string scheme;         // "replicated" or "systematic"
  bool verified = false;      // measured == formula and values match
};

// Skips combinations with K > N, T >= N or N > p.
std::vector<RateRow> RateTable(const RateTableSpec& spec);

std::string RateTableCsv(const std::vector<RateRow>& rows);
Json RateTableJson(const std::vector<RateRow>& rows);

}  // namespace starpc

#endif  // STARPC_RATE_TABLE_HPP_
