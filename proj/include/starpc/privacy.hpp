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

// Exact privacy audits by enumeration of the mask randomness.
//
// A colluding subset sees, per iteration, the queries rho_n for n in the
// subset. Queries are recorded as coordinate vectors in F^Q, so a view is a
// vector in F^{S' |subset| Q} for S' audited iterations. The audit builds the
// joint pmf of (requested functions, view) with the functions uniform on a
// support set, and compares it with the product of its marginals. The
// total-variation distance between the two is zero exactly when the view is
// independent of the request.

#ifndef STARPC_PRIVACY_HPP_
#define STARPC_PRIVACY_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "starpc/code.hpp"
#include "starpc/field.hpp"
#include "starpc/polynomial.hpp"
#include "starpc/protocol.hpp"
#include "starpc/rational.hpp"

namespace starpc {

inline constexpr std::uint64_t kDefaultAuditGuard = std::uint64_t{1} << 20;

using Pmf = std::map<std::vector<Symbol>, Rational>;

// Exact pmf of (psi_n : n in subset) as coordinate vectors, over all
// |F|^{TQ} draws. Throws kEnumerationGuard past `guard` draws.
Pmf MaskTupleDistribution(const LinearCode& retrieval, const QuerySpace& space,
                          std::span<const std::size_t> subset,
                          std::uint64_t guard = kDefaultAuditGuard);

// True iff pmf has `outcomes` entries, all equal to 1 / outcomes.
bool IsUniform(const Pmf& pmf, std::uint64_t outcomes);

// What the audit needs to know about a scheme: how masks are drawn and
// which server gets which function in each iteration.
struct AuditTarget {
  LinearCode retrieval;
  QuerySpace space;
  std::vector<std::vector<Slot>> iterations;
  std::size_t block_length = 0;
};

struct AuditOptions {
  std::uint64_t guard = kDefaultAuditGuard;
  // Full support Q^B is used when it has at most this many elements;
  // otherwise `support_samples` tuples are drawn from `seed`.
  std::uint64_t support_limit = 256;
  std::size_t support_samples = 64;
  std::uint64_t seed = 0;
};

enum class AuditMode { kJoint, kPerIteration };

std::string AuditModeName(AuditMode mode);

struct JointEntry {
  std::size_t request = 0;  // index into PrivacyReport::support
  std::vector<Symbol> view;
  Rational probability;
};

struct PrivacyReport {
  std::vector<std::size_t> subset;
  AuditMode mode = AuditMode::kJoint;
  std::vector<std::size_t> audited_iterations;
  // Each entry is a request: B coordinate vectors, concatenated.
  std::vector<std::vector<Symbol>> support;
  bool sampled_support = false;
  std::uint64_t draws = 0;  // randomness outcomes per audited unit
  Pmf mask_tuple;           // one iteration's mask tuple at the subset
  std::vector<JointEntry> joint;  // joint mode only
  // One value per audited unit (the whole session in joint mode).
  std::vector<Rational> divergences;
  Rational divergence;  // max over units
  bool independent = false;
};

// Throws kEnumerationGuard when even a single iteration exceeds the guard.
PrivacyReport AuditPrivacy(const AuditTarget& target,
                           std::span<const std::size_t> subset,
                           const AuditOptions& options = {});

// All size-t subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> Subsets(std::size_t n, std::size_t t);

// One-time-pad check on V = F^dim: W = U + Z with U uniform and independent
// of Z. `z` is indexed by the base-|F| packing of vectors in V.
struct OtpReport {
  bool uniform = false;      // W is uniform
  bool independent = false;  // W is independent of Z
};

OtpReport OtpCheck(const Field& field, std::size_t dim,
                   std::span<const Rational> z);

// Deterministic grid of pmfs on `outcomes` points: point masses, uniform,
// ramps and seeded random rationals. At least `count` entries.
std::vector<std::vector<Rational>> OtpGrid(std::size_t outcomes,
                                           std::size_t count = 24,
                                           std::uint64_t seed = 0);

}  // namespace starpc

#endif  // STARPC_PRIVACY_HPP_
