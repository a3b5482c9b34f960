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

#include "starpc/linalg.hpp"

#include <algorithm>

#include "starpc/error.hpp"

namespace starpc {

RrefResult Rref(const Matrix& m) {
  Matrix a = m;
  const Field& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t r = pivot_row;
    while (r < a.rows() && a(r, col) == 0) ++r;
    if (r == a.rows()) continue;
    if (r != pivot_row) {
      std::swap_ranges(a.row(r).begin(), a.row(r).end(),
                       a.row(pivot_row).begin());
    }
    const Symbol scale = f.inv(a(pivot_row, col));
    for (auto& x : a.row(pivot_row)) x = f.mul(x, scale);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pivot_row) continue;
      const Symbol factor = a(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < a.cols(); ++j) {
        a(i, j) = f.sub(a(i, j), f.mul(factor, a(pivot_row, j)));
      }
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return RrefResult{std::move(a), pivots.size(), std::move(pivots)};
}

std::size_t Rank(const Matrix& m) { return Rref(m).rank; }

Matrix NullSpace(const Matrix& m) {
  const auto [reduced, rank, pivots] = Rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix out(f, m.cols(), m.cols() - rank);
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    out(free, k) = 1;
    for (std::size_t j = 0; j < rank; ++j) {
      out(pivots[j], k) = f.neg(reduced(j, free));
    }
    ++k;
  }
  return out;
}

std::vector<Symbol> SolveLinear(const Matrix& a, std::span<const Symbol> s) {
  Require(s.size() == a.cols(), Errc::kInvalidArgument,
          "right-hand side length does not match matrix columns");
  // e * a = s  <=>  a^T e^T = s^T; eliminate on [a^T | s^T].
  const Field& f = a.field();
  Matrix aug(f, a.cols(), a.rows() + 1);
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < a.rows(); ++j) aug(i, j) = a(j, i);
    aug(i, a.rows()) = s[i];
  }
  const auto [reduced, rank, pivots] = Rref(aug);
  if (!pivots.empty() && pivots.back() == a.rows()) {
    Fail(Errc::kNoSolution, "linear system is inconsistent");
  }
  if (rank < a.rows()) {
    Fail(Errc::kAmbiguousSolution,
         "linear system has dependent rows; solution is not unique");
  }
  std::vector<Symbol> e(a.rows());
  for (std::size_t j = 0; j < rank; ++j) e[pivots[j]] = reduced(j, a.rows());
  return e;
}

Matrix Inverse(const Matrix& m) {
  Require(m.rows() == m.cols(), Errc::kInvalidArgument,
          "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const Field& f = m.field();
  if (n == 0) return Matrix(f, 0, 0);
  Matrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto result = Rref(aug);
  if (result.rank < n || result.pivots[n - 1] != n - 1) {
    Fail(Errc::kNoSolution, "matrix is singular");
  }
  std::vector<std::size_t> right(n);
  for (std::size_t j = 0; j < n; ++j) right[j] = n + j;
  return result.reduced.select_cols(right);
}

Matrix RowBasis(const Matrix& m) {
  auto result = Rref(m);
  std::vector<std::size_t> keep(result.rank);
  for (std::size_t i = 0; i < result.rank; ++i) keep[i] = i;
  return result.reduced.select_rows(keep);
}

bool InRowSpace(const Matrix& m, std::span<const Symbol> v) {
  Require(v.size() == m.cols(), Errc::kInvalidArgument,
          "vector length does not match matrix columns");
  const std::size_t before = Rank(m);
  const Matrix extended =
      m.stack(Matrix(m.field(), 1, v.size(), {v.begin(), v.end()}));
  return Rank(extended) == before;
}

}  // namespace starpc
