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

// Exact Gaussian elimination over finite fields.

#ifndef STARPC_LINALG_HPP_
#define STARPC_LINALG_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "starpc/matrix.hpp"

namespace starpc {

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Reduced row-echelon form. Pivots are chosen as the leftmost column with a
// nonzero entry at or below the current row, taking the topmost such row.
RrefResult Rref(const Matrix& m);

std::size_t Rank(const Matrix& m);

// Columns form a basis of {v : m * v = 0}; one column per non-pivot column
// of m, in increasing order of that free column.
Matrix NullSpace(const Matrix& m);

// Unique e with e * a = s. Throws kNoSolution when inconsistent and
// kAmbiguousSolution when a has dependent rows.
std::vector<Symbol> SolveLinear(const Matrix& a, std::span<const Symbol> s);

// Throws kNoSolution when m is singular.
Matrix Inverse(const Matrix& m);

// Nonzero rows of rref(m).
Matrix RowBasis(const Matrix& m);

// True iff v lies in the row space of m.
bool InRowSpace(const Matrix& m, std::span<const Symbol> v);

}  // namespace starpc

#endif  // STARPC_LINALG_HPP_
