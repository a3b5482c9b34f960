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

// Private computation over replicated storage. Every server holds X; each
// iteration the first N - T servers receive one function plus a mask, the
// rest receive masks only, and the responses are decoded with a systematic
// parity check of the retrieval code.

#ifndef STARPC_REPLICATED_HPP_
#define STARPC_REPLICATED_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "starpc/code.hpp"
#include "starpc/field.hpp"
#include "starpc/matrix.hpp"
#include "starpc/polynomial.hpp"
#include "starpc/protocol.hpp"
#include "starpc/simnet.hpp"

namespace starpc {

struct ReplicatedConfig {
  LinearCode retrieval;  // [N, T] MDS over the base field
  QuerySpace space;      // over the base field, arity M
  Field ext;             // field of the stored data
  std::size_t block_length = 0;  // B
  Transport transport = Transport::kDirect;

  std::size_t servers() const noexcept { return retrieval.length(); }
  std::size_t collusion() const noexcept { return retrieval.dimension(); }
  std::size_t batch() const noexcept { return servers() - collusion(); }
  std::size_t iterations() const noexcept { return block_length / batch(); }

  // Throws kConfiguration unless 1 <= T < N, D is MDS, (N - T) | B and the
  // fields line up.
  void Validate() const;
};

// Slots (n, offset + n) for n < N - T.
std::vector<Slot> ReplicatedSlots(std::size_t batch, std::size_t offset);

// rho_n = psi_n + phi_n for n < N - T, psi_n otherwise.
std::vector<Polynomial> BuildReplicatedQueries(
    const MaskSet& masks, std::span<const Polynomial> batch);

// responses * H_D, with H_D the systematic parity check of D over `ext`.
std::vector<Symbol> DecodeReplicated(const Field& ext,
                                     std::span<const Symbol> responses,
                                     const Matrix& parity_check);

struct ReplicatedResult {
  std::vector<Symbol> values;  // phi_b(X), b < B
  SessionTranscript transcript;
};

// x is M x 1 over config.ext.
ReplicatedResult RunReplicated(const ReplicatedConfig& config,
                               std::span<const Polynomial> functions,
                               const Matrix& x, std::uint64_t seed);

}  // namespace starpc

#endif  // STARPC_REPLICATED_HPP_
