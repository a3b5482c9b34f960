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

// Pieces shared by both private computation schemes: masks drawn from a
// retrieval code, per-iteration query assignment, and the session
// transcript.
//
// A mask set draws Q independent uniform codewords d^1..d^Q of the
// retrieval code D and gives server n the mask
//
//   psi_n = d^1(n) psi^1 + ... + d^Q(n) psi^Q
//
// where psi^1..psi^Q is the query-space basis. Any T coordinates of an MDS
// code of dimension T are uniform, so any T masks are uniform on Q^T.

#ifndef STARPC_PROTOCOL_HPP_
#define STARPC_PROTOCOL_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "starpc/code.hpp"
#include "starpc/field.hpp"
#include "starpc/polynomial.hpp"
#include "starpc/random.hpp"
#include "starpc/rational.hpp"

namespace starpc {

struct MaskSet {
  // messages[q] in F^T; codewords[q] = messages[q] * G_D in F^N.
  std::vector<std::vector<Symbol>> messages;
  std::vector<std::vector<Symbol>> codewords;
  // masks[n] = sum_q codewords[q][n] * basis[q].
  std::vector<Polynomial> masks;
};

// Draws Q uniform messages (one per basis element, in order) and builds the
// masks.
MaskSet MakeMasks(const LinearCode& retrieval, const QuerySpace& space,
                  Rng& rng);

// Deterministic variant used by enumeration and tests.
MaskSet MasksFromMessages(const LinearCode& retrieval, const QuerySpace& space,
                          std::vector<std::vector<Symbol>> messages);

// Server `server` adds function `function` to its mask in this iteration.
// Indices are zero-based.
struct Slot {
  std::size_t server = 0;
  std::size_t function = 0;

  friend bool operator==(const Slot&, const Slot&) = default;
};

// rho_n = psi_n + phi_b for each slot (n, b), rho_n = psi_n elsewhere.
// Throws kInvalidArgument when a server appears twice or an index is out of
// range.
std::vector<Polynomial> BuildQueries(const MaskSet& masks,
                                     std::span<const Slot> slots,
                                     std::span<const Polynomial> functions);

enum class SchemeKind { kReplicated, kSystematic };

std::string SchemeName(SchemeKind kind);

struct Accounting {
  std::uint64_t iterations = 0;
  // Base-field symbols: N query-space elements of dimension Q per iteration.
  std::uint64_t uploaded_base_symbols = 0;
  // Extension-field symbols: one response per server per iteration.
  std::uint64_t downloaded_ext_symbols = 0;

  friend bool operator==(const Accounting&, const Accounting&) = default;
};

struct IterationRecord {
  std::size_t index = 0;
  std::vector<std::vector<Symbol>> codewords;  // Q x N over the base field
  std::vector<Slot> slots;
  std::vector<Polynomial> queries;  // what server n received
  std::vector<Symbol> responses;    // extension field
  std::vector<Symbol> syndrome;     // systematic scheme only
  std::vector<Symbol> decoded;      // one value per slot
};

struct SessionTranscript {
  SchemeKind scheme = SchemeKind::kReplicated;
  std::uint64_t seed = 0;
  std::size_t servers = 0;         // N
  std::size_t data_columns = 0;    // K
  std::size_t block_length = 0;    // B
  std::size_t query_dimension = 0; // Q
  std::vector<IterationRecord> iterations;
  Accounting accounting;

  // K * B / (N * S).
  Rational rate() const;
};

}  // namespace starpc

#endif  // STARPC_PROTOCOL_HPP_
