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

// Config-driven sessions, transcripts and replay.
//
// Session config (JSON):
//
//   {
//     "scheme": "replicated" | "systematic",
//     "field": {"p": 2},                 base field, prime
//     "ext_field": {"p": 2, "m": 2},     data field, defaults to "field"
//     "N": 3, "T": 2, "M": 2, "G": 2,
//     "K": 3,                            systematic only
//     "B": 1,                            optional for systematic
//     "retrieval_code": {...},           defaults to RS_T(0, 1, ..., N-1)
//     "storage_code": {...},             defaults to RS_K(0, 1, ..., N-1)
//     "seed": 7,
//     "functions": [polynomial, ...],    defaults to seeded uniform draws
//     "data": [[element, ...], ...],     M x K, defaults to seeded draws
//     "transport": "direct" | "wire"
//   }
//
// Code descriptors use the wire format; the storage code is brought into
// systematic form when it is not already.

#ifndef STARPC_SESSION_HPP_
#define STARPC_SESSION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starpc/code.hpp"
#include "starpc/field.hpp"
#include "starpc/matrix.hpp"
#include "starpc/polynomial.hpp"
#include "starpc/privacy.hpp"
#include "starpc/protocol.hpp"
#include "starpc/simnet.hpp"
#include "starpc/systematic.hpp"
#include "starpc/wire.hpp"

namespace starpc {

inline constexpr const char* kToolName = "starpc";
inline constexpr const char* kToolVersion = "0.1.0";

struct SessionConfig {
  SchemeKind scheme = SchemeKind::kReplicated;
  Field base;
  Field ext;
  std::size_t data_rows = 1;  // M
  std::uint32_t degree = 1;   // G
  std::optional<std::size_t> block_length;
  LinearCode retrieval;
  std::optional<LinearCode> storage;  // systematic only
  std::uint64_t seed = 0;
  std::optional<std::vector<Polynomial>> functions;
  std::optional<Matrix> data;
  Transport transport = Transport::kDirect;
  Json source;  // normalized config, seed included

  std::size_t servers() const noexcept { return retrieval.length(); }
  std::size_t columns() const noexcept {
    return storage ? storage->dimension() : 1;
  }
};

// Throws kParse for malformed JSON and kConfiguration for inconsistent
// parameters.
SessionConfig ParseSessionConfig(const Json& j);
SessionConfig LoadSessionConfig(const std::string& path);

// Overrides the seed and keeps `source` in sync.
void SetSeed(SessionConfig& config, std::uint64_t seed);

// Lowercase hex SHA-256 of the compact normalized config.
std::string ConfigHash(const SessionConfig& config);

// P_G in M variables over the base field.
QuerySpace SessionQuerySpace(const SessionConfig& config);

// B for the replicated scheme, which has no default.
std::size_t ReplicatedBlockLength(const SessionConfig& config);

struct SessionResult {
  std::vector<Polynomial> functions;
  Matrix data;    // M x K
  Matrix values;  // B x K
  SessionTranscript transcript;
  std::optional<SystematicPlan> plan;  // systematic only
};

// The configured data, or an M x K seeded draw over the data field.
Matrix SessionData(const SessionConfig& config);

SessionResult RunSession(const SessionConfig& config);

// [phi_b(x_k)] evaluated directly on the data.
Matrix DirectValues(const Field& ext, const std::vector<Polynomial>& functions,
                    const Matrix& data);

Json TranscriptToJson(const SessionConfig& config, const SessionResult& result);
Json SummaryToJson(const SessionConfig& config, const SessionResult& result);

// Decodes the recorded responses of a transcript again. Returns one
// decoded vector per iteration.
std::vector<std::vector<Symbol>> ReplayDecode(const Json& transcript);

// Audit target for the session's scheme and schedule.
AuditTarget SessionAuditTarget(const SessionConfig& config);

Json PrivacyReportToJson(const Field& base, const PrivacyReport& report,
                         std::size_t pmf_limit = 4096);

}  // namespace starpc

#endif  // STARPC_SESSION_HPP_
