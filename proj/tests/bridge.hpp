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

// Conversions from library types to oracle types, plus small test helpers.

#ifndef STARPC_TESTS_BRIDGE_HPP_
#define STARPC_TESTS_BRIDGE_HPP_

#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "starpc/code.hpp"
#include "starpc/error.hpp"
#include "starpc/field.hpp"
#include "starpc/matrix.hpp"
#include "starpc/polynomial.hpp"
#include "starpc/random.hpp"

namespace testing_util {

inline oracle::Gf ToOracle(const starpc::Field& f) {
  return {f.characteristic(), f.degree(), f.modulus()};
}

inline oracle::Mat ToOracle(const starpc::Matrix& m) {
  oracle::Mat out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out[r].assign(m.row(r).begin(), m.row(r).end());
  }
  return out;
}

inline oracle::Poly ToOracle(const starpc::Polynomial& p) {
  oracle::Poly out;
  for (const auto& [m, c] : p.terms()) out[m.exponents()] = c;
  return out;
}

inline std::vector<starpc::Symbol> Iota(std::size_t n) {
  std::vector<starpc::Symbol> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<starpc::Symbol>(i);
  return v;
}

inline starpc::Matrix RandomMatrix(const starpc::Field& f, std::size_t rows,
                                   std::size_t cols, starpc::Rng& rng) {
  starpc::Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = static_cast<starpc::Symbol>(starpc::UniformBelow(rng, f.order()));
    }
  }
  return m;
}

// Every M x K matrix over f, in odometer order.
inline void ForEachMatrix(const starpc::Field& f, std::size_t rows,
                          std::size_t cols,
                          const std::function<void(const starpc::Matrix&)>& fn) {
  starpc::Matrix m(f, rows, cols);
  const std::size_t n = rows * cols;
  while (true) {
    fn(m);
    std::size_t i = 0;
    for (; i < n; ++i) {
      auto& e = m(i / cols, i % cols);
      if (++e < f.order()) break;
      e = 0;
    }
    if (i == n) return;
  }
}

}  // namespace testing_util

// Asserts that `stmt` throws starpc::Error with the given code.
#define EXPECT_STARPC_ERROR(stmt, errc)                                  \
  do {                                                                   \
    try {                                                                \
      stmt;                                                              \
      ADD_FAILURE() << "expected " #errc " from " #stmt;                 \
    } catch (const starpc::Error& e) {                                   \
      EXPECT_EQ(e.code(), errc) << e.what();                             \
    }                                                                    \
  } while (0)

#endif  // STARPC_TESTS_BRIDGE_HPP_
