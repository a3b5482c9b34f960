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

// Slow reference implementations used to check the library. Nothing here
// calls into starpc arithmetic; only plain integers and vectors.

#ifndef STARPC_TESTS_ORACLES_HPP_
#define STARPC_TESTS_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<std::uint32_t>;
using Mat = std::vector<Vec>;

// GF(p^m) with elements packed as sum c_i p^i; schoolbook multiplication
// followed by long division by the monic modulus.
struct Gf {
  std::uint32_t p;
  std::uint32_t m;
  Vec modulus;  // m + 1 little-endian coefficients, empty when m == 1

  std::uint32_t order() const {
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) q *= p;
    return q;
  }

  Vec digits(std::uint32_t a) const {
    Vec d(m);
    for (auto& x : d) {
      x = a % p;
      a /= p;
    }
    return d;
  }

  std::uint32_t pack(const Vec& d) const {
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    Vec da = digits(a), db = digits(b);
    for (std::uint32_t i = 0; i < m; ++i) da[i] = (da[i] + db[i]) % p;
    return pack(da);
  }

  std::uint32_t neg(std::uint32_t a) const {
    Vec d = digits(a);
    for (auto& x : d) x = (p - x) % p;
    return pack(d);
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (m == 1) {
      return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    }
    const Vec da = digits(a), db = digits(b);
    Vec prod(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      for (std::uint32_t j = 0; j < m; ++j) {
        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      }
    }
    for (std::size_t k = prod.size(); k-- > m;) {
      const std::uint32_t c = prod[k];
      if (c == 0) continue;
      for (std::uint32_t i = 0; i <= m; ++i) {
        const std::size_t idx = k - m + i;
        prod[idx] = (prod[idx] + (p - c) * modulus[i] % p) % p;
      }
    }
    prod.resize(m);
    return pack(prod);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  // Exhaustive search.
  std::uint32_t inv(std::uint32_t a) const {
    for (std::uint32_t x = 1; x < order(); ++x) {
      if (mul(a, x) == 1) return x;
    }
    return 0;
  }
};

inline Vec VecTimesMat(const Gf& f, const Vec& v, const Mat& a) {
  Vec out(a.empty() ? 0 : a[0].size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = f.add(out[j], f.mul(v[i], a[i][j]));
    }
  }
  return out;
}

// Gaussian elimination, any pivot order.
inline std::size_t Rank(const Gf& f, Mat a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const std::uint32_t inv = f.inv(a[rank][c]);
    for (auto& x : a[rank]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::uint32_t factor = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        a[r][k] = f.sub(a[r][k], f.mul(factor, a[rank][k]));
      }
    }
    ++rank;
  }
  return rank;
}

inline bool InSpan(const Gf& f, const Mat& rows, const Vec& v) {
  Mat with = rows;
  with.push_back(v);
  return Rank(f, rows) == Rank(f, with);
}

// Same row space: equal ranks and every row of each lies in the other.
inline bool SameSpan(const Gf& f, const Mat& a, const Mat& b) {
  Mat both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = Rank(f, both);
  return r == Rank(f, a) && r == Rank(f, b);
}

// Minimum weight over all q^K messages.
inline std::size_t MinDistance(const Gf& f, const Mat& g) {
  const std::size_t k = g.size();
  const std::size_t n = g[0].size();
  Vec msg(k, 0);
  std::size_t best = n + 1;
  while (true) {
    std::size_t i = 0;
    while (i < k && ++msg[i] == f.order()) msg[i++] = 0;
    if (i == k) break;
    const Vec c = VecTimesMat(f, msg, g);
    std::size_t w = 0;
    for (auto x : c) w += x != 0;
    if (w < best) best = w;
  }
  return best;
}

// Rows [alpha_1^i ... alpha_N^i] for i < k.
inline Mat RsGenerator(const Gf& f, const Vec& alpha, std::size_t k) {
  Mat g(k, Vec(alpha.size()));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < alpha.size(); ++j) g[i][j] = f.pow(alpha[j], i);
  }
  return g;
}

// Coordinatewise products of all row pairs.
inline Mat StarRows(const Gf& f, const Mat& a, const Mat& b) {
  Mat out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Vec z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = f.mul(x[i], y[i]);
      out.push_back(z);
    }
  }
  return out;
}

// Sparse polynomial: exponent vector -> coefficient in GF(p).
using Poly = std::map<Vec, std::uint32_t>;

// Evaluates at x over `ext` by repeated multiplication; coefficients are
// prime-subfield elements, which pack to themselves.
inline std::uint32_t Evaluate(const Gf& ext, const Poly& poly, const Vec& x) {
  std::uint32_t acc = 0;
  for (const auto& [exps, c] : poly) {
    std::uint32_t term = c;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      term = ext.mul(term, ext.pow(x[i], exps[i]));
    }
    acc = ext.add(acc, term);
  }
  return acc;
}

}  // namespace oracle

#endif  // STARPC_TESTS_ORACLES_HPP_
