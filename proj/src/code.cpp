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

#include "starpc/code.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "starpc/error.hpp"
#include "starpc/linalg.hpp"

namespace starpc {

struct LinearCode::Cache {
  std::once_flag canonical_once;
  std::optional<Matrix> canonical;
  std::once_flag parity_once;
  std::optional<Matrix> parity;
  std::mutex distance_mu;
  std::optional<std::size_t> distance;
};

LinearCode::LinearCode(Matrix generator)
    : generator_(std::move(generator)), cache_(std::make_shared<Cache>()) {
  Require(generator_.rows() >= 1 && generator_.cols() >= 1,
          Errc::kInvalidArgument, "a code needs at least one row and column");
  Require(Rank(generator_) == generator_.rows(), Errc::kInvalidArgument,
          "generator matrix must have full row rank");
}

LinearCode LinearCode::Span(const Matrix& rows) {
  Matrix basis = RowBasis(rows);
  Require(basis.rows() >= 1, Errc::kInvalidArgument,
          "rows span the zero code");
  return LinearCode(std::move(basis));
}

LinearCode LinearCode::WithEvaluationVector(std::vector<Symbol> alpha) const {
  Require(alpha.size() == length(), Errc::kInvalidAlpha,
          "evaluation vector length must equal the code length");
  LinearCode out = *this;
  out.alpha_ = std::move(alpha);
  // Cached values carry over: same code, same generator.
  return out;
}

std::span<const Symbol> LinearCode::alpha() const noexcept {
  if (!alpha_) return {};
  return *alpha_;
}

const Matrix& LinearCode::canonical_generator() const {
  std::call_once(cache_->canonical_once,
                 [this] { cache_->canonical = RowBasis(generator_); });
  return *cache_->canonical;
}

const Matrix& LinearCode::parity_check() const {
  std::call_once(cache_->parity_once,
                 [this] { cache_->parity = NullSpace(generator_); });
  return *cache_->parity;
}

std::size_t LinearCode::min_distance(std::uint64_t guard) const {
  std::lock_guard<std::mutex> lock(cache_->distance_mu);
  if (!cache_->distance) {
    cache_->distance = kind() == CodeKind::kReedSolomon
                           ? length() - dimension() + 1
                           : EnumerateMinDistance(*this, guard);
  }
  return *cache_->distance;
}

std::vector<Symbol> LinearCode::encode(std::span<const Symbol> message) const {
  return RowTimes(message, generator_);
}

bool operator==(const LinearCode& a, const LinearCode& b) {
  return a.field() == b.field() && a.length() == b.length() &&
         a.dimension() == b.dimension() &&
         a.canonical_generator() == b.canonical_generator();
}

LinearCode RepetitionCode(std::size_t n, const Field& field) {
  Require(n >= 1, Errc::kInvalidArgument, "repetition code length must be >= 1");
  return LinearCode(Matrix(field, 1, n, std::vector<Symbol>(n, 1)));
}

LinearCode ReedSolomonCode(const Field& field, std::span<const Symbol> alpha,
                           std::size_t k) {
  const std::size_t n = alpha.size();
  Require(k >= 1 && k <= n, Errc::kInvalidArgument,
          "Reed-Solomon dimension must satisfy 1 <= K <= N");
  std::set<Symbol> seen;
  for (Symbol a : alpha) {
    Require(field.contains(a), Errc::kInvalidAlpha,
            "evaluation point outside " + field.name());
    Require(seen.insert(a).second, Errc::kInvalidAlpha,
            "evaluation points must be pairwise distinct");
  }
  Matrix g(field, k, n);
  for (std::size_t j = 0; j < n; ++j) {
    Symbol power = 1;
    for (std::size_t q = 0; q < k; ++q) {
      g(q, j) = power;
      power = field.mul(power, alpha[j]);
    }
  }
  return LinearCode(std::move(g))
      .WithEvaluationVector({alpha.begin(), alpha.end()});
}

namespace {

// Both operands RS over the same evaluation vector: the product is
// RS_{min(K+L-1, N)}. Checked against an explicit Vandermonde basis before
// the flag is attached.
LinearCode TagReedSolomon(LinearCode product, const LinearCode& c,
                          const LinearCode& d) {
  if (c.kind() != CodeKind::kReedSolomon ||
      d.kind() != CodeKind::kReedSolomon ||
      !std::equal(c.alpha().begin(), c.alpha().end(), d.alpha().begin(),
                  d.alpha().end())) {
    return product;
  }
  const std::size_t expected =
      std::min(c.dimension() + d.dimension() - 1, c.length());
  const LinearCode rs = ReedSolomonCode(c.field(), c.alpha(), expected);
  Require(rs == product, Errc::kInternal,
          "star product of RS codes is not the expected RS code");
  return product.WithEvaluationVector({c.alpha().begin(), c.alpha().end()});
}

}  // namespace

LinearCode StarProduct(const LinearCode& c, const LinearCode& d) {
  Require(c.field() == d.field(), Errc::kOwnerMismatch,
          "star product of codes over different fields");
  Require(c.length() == d.length(), Errc::kInvalidArgument,
          "star product of codes with different lengths");
  const Field& f = c.field();
  const std::size_t n = c.length();
  const Matrix& gc = c.generator();
  const Matrix& gd = d.generator();
  Matrix rows(f, gc.rows() * gd.rows(), n);
  std::size_t r = 0;
  for (std::size_t i = 0; i < gc.rows(); ++i) {
    for (std::size_t j = 0; j < gd.rows(); ++j, ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        rows(r, k) = f.mul(gc(i, k), gd(j, k));
      }
    }
  }
  return TagReedSolomon(LinearCode::Span(rows), c, d);
}

LinearCode StarPower(const LinearCode& c, int g) {
  Require(g >= 1, Errc::kInvalidArgument, "star power requires G >= 1");
  LinearCode out = c;
  for (int i = 1; i < g; ++i) out = StarProduct(out, c);
  return out;
}

std::size_t EnumerateMinDistance(const LinearCode& c, std::uint64_t guard) {
  const Field& f = c.field();
  const std::size_t n = c.length();
  const std::uint32_t p = f.characteristic();
  const std::uint32_t m = f.degree();

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    total *= f.order();
    Require(total <= guard, Errc::kEnumerationGuard,
            "min_distance enumeration exceeds the guard of " +
                std::to_string(guard) + " codewords");
  }

  // GF(p)-basis of the code: beta^j * g_i with beta = x. Each odometer step
  // adds exactly one basis word, wrapping digits return to their start
  // because p copies of a word sum to zero.
  std::vector<std::vector<Symbol>> basis;
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    Symbol beta = 1;
    for (std::uint32_t j = 0; j < m; ++j) {
      std::vector<Symbol> w(n);
      for (std::size_t k = 0; k < n; ++k) {
        w[k] = f.mul(beta, c.generator()(i, k));
      }
      basis.push_back(std::move(w));
      beta *= p;  // next power of x in packed form
    }
  }

  std::vector<Symbol> word(n, 0);
  std::vector<std::uint32_t> counter(basis.size(), 0);
  std::size_t weight = 0;
  std::size_t best = n + 1;
  for (std::uint64_t step = 1; step < total; ++step) {
    std::size_t digit = 0;
    while (true) {
      const auto& w = basis[digit];
      for (std::size_t k = 0; k < n; ++k) {
        const Symbol before = word[k];
        word[k] = f.add(before, w[k]);
        weight += (word[k] != 0) - (before != 0);
      }
      if (++counter[digit] < p) break;
      counter[digit] = 0;
      ++digit;
    }
    best = std::min(best, weight);
    if (best == 1) break;
  }
  return best;
}

Matrix SystematicParityCheck(const LinearCode& c) {
  const Matrix& h = c.parity_check();
  const std::size_t r = h.cols();
  std::vector<std::size_t> top(r);
  for (std::size_t i = 0; i < r; ++i) top[i] = i;
  Matrix top_inv(c.field(), 0, 0);
  try {
    top_inv = Inverse(h.select_rows(top));
  } catch (const Error& e) {
    if (e.code() != Errc::kNoSolution) throw;
    Fail(Errc::kNoSystematicForm,
         "top block of the parity check is singular; no systematic form");
  }
  return h * top_inv;
}

LinearCode SystematicGenerator(const LinearCode& c) {
  const auto result = Rref(c.generator());
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    if (result.pivots[i] != i) {
      Fail(Errc::kCannotSystematize,
           "first K columns of the generator are linearly dependent");
    }
  }
  LinearCode out(result.reduced);
  if (c.kind() == CodeKind::kReedSolomon) {
    return out.WithEvaluationVector({c.alpha().begin(), c.alpha().end()});
  }
  return out;
}

bool IsSystematic(const LinearCode& c) {
  const Matrix& g = c.generator();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.rows(); ++j) {
      if (g(i, j) != (i == j ? 1U : 0U)) return false;
    }
  }
  return true;
}

LinearCode ExtendField(const LinearCode& c, const Field& target) {
  LinearCode out(c.generator().embed(target));
  if (c.kind() == CodeKind::kReedSolomon) {
    return out.WithEvaluationVector({c.alpha().begin(), c.alpha().end()});
  }
  return out;
}

bool ContainsRepetition(const LinearCode& c) {
  const std::vector<Symbol> ones(c.length(), 1);
  return InRowSpace(c.generator(), ones);
}

}  // namespace starpc
