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

// Linear codes, star (Schur) products and Reed-Solomon codes.
//
// Codes are compared through their canonical generator, the rref of any
// generator matrix: two codes are equal iff their canonical generators are
// identical entry by entry.

#ifndef STARPC_CODE_HPP_
#define STARPC_CODE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "starpc/field.hpp"
#include "starpc/matrix.hpp"

namespace starpc {

// Upper bound on the number of codewords EnumerateMinDistance will visit.
inline constexpr std::uint64_t kDefaultCodewordGuard = std::uint64_t{1} << 24;

enum class CodeKind { kGeneric, kReedSolomon };

class LinearCode {
 public:
  // `generator` must have full row rank and at least one row.
  explicit LinearCode(Matrix generator);

  // Code spanned by the rows of `rows`; the stored generator is the
  // canonical (rref) basis.
  static LinearCode Span(const Matrix& rows);

  // Attaches Reed-Solomon evaluation data. The caller vouches that the
  // code equals RS_K(alpha); ReedSolomonCode and the star operations are the
  // intended users.
  LinearCode WithEvaluationVector(std::vector<Symbol> alpha) const;

  const Field& field() const noexcept { return generator_.field(); }
  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.rows(); }
  const Matrix& generator() const noexcept { return generator_; }

  CodeKind kind() const noexcept {
    return alpha_ ? CodeKind::kReedSolomon : CodeKind::kGeneric;
  }
  // Empty unless kind() == kReedSolomon.
  std::span<const Symbol> alpha() const noexcept;

  const Matrix& canonical_generator() const;

  // N x (N-K) matrix H with generator * H = 0 (null space basis).
  const Matrix& parity_check() const;

  // Closed form N-K+1 for Reed-Solomon codes; otherwise exhaustive
  // enumeration bounded by `guard` codewords. Cached after first success.
  std::size_t min_distance(std::uint64_t guard = kDefaultCodewordGuard) const;

  bool is_mds(std::uint64_t guard = kDefaultCodewordGuard) const {
    return min_distance(guard) == length() - dimension() + 1;
  }

  // Generator * message for a row vector of dimension() symbols.
  std::vector<Symbol> encode(std::span<const Symbol> message) const;

  // Same canonical generator.
  friend bool operator==(const LinearCode& a, const LinearCode& b);

 private:
  struct Cache;

  Matrix generator_;
  std::optional<std::vector<Symbol>> alpha_;
  std::shared_ptr<Cache> cache_;
};

// [N, 1] all-ones code.
LinearCode RepetitionCode(std::size_t n, const Field& field);

// RS_K(alpha): generator row q is [alpha_1^q, ..., alpha_N^q].
// Throws kInvalidAlpha on repeated points.
LinearCode ReedSolomonCode(const Field& field, std::span<const Symbol> alpha,
                           std::size_t k);

// Span of c * d over generator-row pairs, returned in canonical form.
LinearCode StarProduct(const LinearCode& c, const LinearCode& d);

// C^{*G}; G >= 1.
LinearCode StarPower(const LinearCode& c, int g);

// Minimum Hamming weight over all nonzero codewords, by enumeration.
// Throws kEnumerationGuard when |field|^K exceeds `guard`.
std::size_t EnumerateMinDistance(const LinearCode& c,
                                 std::uint64_t guard = kDefaultCodewordGuard);

// Parity check H with identity top (N-K)x(N-K) block, so that
// (c + [e, 0..0]) * H = e for every codeword c. Throws kNoSystematicForm
// when the top block of the null-space basis is singular.
Matrix SystematicParityCheck(const LinearCode& c);

// Equivalent generator whose left K x K block is the identity. Columns are
// never permuted; throws kCannotSystematize when the first K columns are
// dependent.
LinearCode SystematicGenerator(const LinearCode& c);

bool IsSystematic(const LinearCode& c);

// Same generator with entries embedded into `target`.
LinearCode ExtendField(const LinearCode& c, const Field& target);

// True iff the all-ones word is a codeword.
bool ContainsRepetition(const LinearCode& c);

}  // namespace starpc

#endif  // STARPC_CODE_HPP_
