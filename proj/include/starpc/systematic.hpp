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

// Private computation of degree-G polynomials on the columns of
// systematically coded storage.
//
// Responses live in E = C^{*G} * D plus an error supported on the servers
// that were asked for a function; with F = min(d(E) - 1, K) such positions
// per iteration the errors are the wanted values and come out of a syndrome
// solve. B functions on K columns take S = KB / F iterations, filled
// row-major:
//
//   global slot t -> function t / K on column t % K
//   iteration s   -> slots [sF, (s + 1)F)

#ifndef STARPC_SYSTEMATIC_HPP_
#define STARPC_SYSTEMATIC_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "starpc/code.hpp"
#include "starpc/field.hpp"
#include "starpc/matrix.hpp"
#include "starpc/polynomial.hpp"
#include "starpc/protocol.hpp"
#include "starpc/rational.hpp"
#include "starpc/simnet.hpp"

namespace starpc {

// C^{*G} * D. Throws kConfiguration unless C contains the all-ones word.
LinearCode ResponseCode(const LinearCode& c, const LinearCode& d, int g);

// min(d(E) - 1, K); throws kInfeasible when that is 0.
std::size_t ComputeF(const LinearCode& e, std::size_t k,
                     std::uint64_t guard = kDefaultCodewordGuard);

struct SchedulePlan {
  std::size_t columns = 0;       // K
  std::size_t block_length = 0;  // B
  std::size_t per_iteration = 0; // F
  std::vector<std::vector<Slot>> iterations;

  std::size_t size() const noexcept { return iterations.size(); }
};

// Throws kConfiguration when F does not divide KB or F > K.
SchedulePlan BuildSchedule(std::size_t k, std::size_t b, std::size_t f);

// Least B >= 1 with F | KB.
std::size_t DefaultBlockLength(std::size_t k, std::size_t f);

// Like BuildQueries, but rejects slots outside the systematic servers.
std::vector<Polynomial> BuildIterationQueries(
    const MaskSet& masks, std::span<const Slot> slots,
    std::span<const Polynomial> functions, std::size_t k);

struct IterationDecode {
  std::vector<Symbol> syndrome;
  std::vector<Symbol> values;  // one per slot, in slot order
};

// `parity_check` is an N x (N - dim E) null-space basis of E over any
// subfield of `ext`. Throws kCorruptedResponse when no error on the slot
// positions explains the syndrome.
IterationDecode DecodeIteration(const Field& ext,
                                std::span<const Symbol> responses,
                                const Matrix& parity_check,
                                std::span<const Slot> slots);

struct SystematicConfig {
  LinearCode storage;    // systematic [N, K] over the base field
  LinearCode retrieval;  // [N, T] MDS over the base field
  std::uint32_t degree = 1;  // G
  std::size_t data_rows = 1; // M
  Field ext;
  std::optional<std::size_t> block_length;  // defaults to DefaultBlockLength
  Transport transport = Transport::kDirect;
  std::uint64_t guard = kDefaultCodewordGuard;
};

struct SystematicPlan {
  QuerySpace space;  // P_G in M variables
  LinearCode response_code;
  Matrix parity_check;  // null-space basis of E, over the base field
  std::size_t f = 0;
  SchedulePlan schedule;
};

// Validates the configuration and derives E, F, B and the schedule.
SystematicPlan PlanSystematic(const SystematicConfig& config);

struct SystematicResult {
  Matrix values;  // B x K, entry (b, k) = phi_b(x_k)
  SystematicPlan plan;
  SessionTranscript transcript;
};

// x is M x K over config.ext.
SystematicResult RunSystematic(const SystematicConfig& config,
                               std::span<const Polynomial> functions,
                               const Matrix& x, std::uint64_t seed);

// min(N - (G(K - 1) + T), K) / N; throws kInfeasible when G(K - 1) + T > N.
Rational RsRate(std::size_t n, std::size_t k, std::size_t t, std::size_t g);

}  // namespace starpc

#endif  // STARPC_SYSTEMATIC_HPP_
