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

#include "starpc/privacy.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "starpc/error.hpp"
#include "starpc/random.hpp"

namespace starpc {

namespace {

using boost::multiprecision::cpp_int;

// base^exp, or nullopt past `limit`.
std::optional<std::uint64_t> BoundedPower(std::uint64_t base, std::uint64_t exp,
                                          std::uint64_t limit) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > limit / base) return std::nullopt;
    out *= base;
  }
  return out <= limit ? std::optional(out) : std::nullopt;
}

// Odometer over vectors in [0, radix)^len. Returns false after the last one.
bool Advance(std::vector<Symbol>& digits, std::uint32_t radix) {
  for (auto& d : digits) {
    if (++d < radix) return true;
    d = 0;
  }
  return false;
}

// Coordinates of the masks at `subset` for one iteration's messages.
// messages is laid out [q][t]; output is [subset index][q].
void MaskView(const Field& f, const Matrix& g, std::span<const std::size_t> subset,
              std::size_t q_dim, const Symbol* messages, Symbol* out) {
  const std::size_t t_dim = g.rows();
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t q = 0; q < q_dim; ++q) {
      Symbol acc = 0;
      for (std::size_t t = 0; t < t_dim; ++t) {
        acc = f.add(acc, f.mul(messages[q * t_dim + t], g(t, subset[i])));
      }
      out[i * q_dim + q] = acc;
    }
  }
}

struct UnitResult {
  std::vector<std::map<std::vector<Symbol>, std::uint64_t>> counts;
  Rational divergence;
};

// Enumerates every draw for the listed iterations and every request.
UnitResult EnumerateUnit(const AuditTarget& target,
                         std::span<const std::size_t> subset,
                         std::span<const std::size_t> iterations,
                         const std::vector<std::vector<Symbol>>& support) {
  const Field& f = target.retrieval.field();
  const Matrix& g = target.retrieval.generator();
  const std::size_t q_dim = target.space.dimension();
  const std::size_t t_dim = target.retrieval.dimension();
  const std::size_t view_per_iter = subset.size() * q_dim;
  const std::size_t view_len = iterations.size() * view_per_iter;

  // Request-dependent part of the view.
  std::vector<std::vector<Symbol>> offsets(support.size(),
                                           std::vector<Symbol>(view_len, 0));
  for (std::size_t r = 0; r < support.size(); ++r) {
    for (std::size_t j = 0; j < iterations.size(); ++j) {
      for (const Slot& slot : target.iterations[iterations[j]]) {
        const auto it = std::find(subset.begin(), subset.end(), slot.server);
        if (it == subset.end()) continue;
        const std::size_t i = static_cast<std::size_t>(it - subset.begin());
        for (std::size_t q = 0; q < q_dim; ++q) {
          offsets[r][j * view_per_iter + i * q_dim + q] =
              support[r][slot.function * q_dim + q];
        }
      }
    }
  }

  UnitResult out;
  out.counts.resize(support.size());
  const std::size_t per_iter = q_dim * t_dim;
  std::vector<Symbol> draw(iterations.size() * per_iter, 0);
  std::vector<Symbol> masks(view_len), view(view_len);
  do {
    for (std::size_t j = 0; j < iterations.size(); ++j) {
      MaskView(f, g, subset, q_dim, draw.data() + j * per_iter,
               masks.data() + j * view_per_iter);
    }
    for (std::size_t r = 0; r < support.size(); ++r) {
      for (std::size_t k = 0; k < view_len; ++k) {
        view[k] = f.add(masks[k], offsets[r][k]);
      }
      ++out.counts[r][view];
    }
  } while (Advance(draw, f.order()));

  // TV(joint, product) = sum_{r,v} |L c_r(v) - c(v)| / (2 L total), with
  // L = |support| and total = L * draws.
  std::map<std::vector<Symbol>, std::uint64_t> marginal;
  std::uint64_t draws = 0;
  for (const auto& [v, c] : out.counts[0]) draws += c;
  for (const auto& counts : out.counts) {
    for (const auto& [v, c] : counts) marginal[v] += c;
  }
  const cpp_int l = support.size();
  cpp_int sum = 0;
  for (const auto& [v, total_v] : marginal) {
    for (const auto& counts : out.counts) {
      const auto it = counts.find(v);
      const cpp_int c = it == counts.end() ? 0 : it->second;
      const cpp_int diff = l * c - cpp_int(total_v);
      sum += diff < 0 ? cpp_int(-diff) : diff;
    }
  }
  out.divergence = Rational(sum) / Rational(2 * l * l * cpp_int(draws));
  return out;
}

std::vector<std::vector<Symbol>> FullSupport(std::uint32_t order,
                                             std::size_t len) {
  std::vector<std::vector<Symbol>> out;
  std::vector<Symbol> digits(len, 0);
  do {
    out.push_back(digits);
  } while (Advance(digits, order));
  return out;
}

std::vector<std::vector<Symbol>> SampledSupport(std::uint32_t order,
                                                std::size_t len,
                                                std::size_t count,
                                                std::uint64_t seed) {
  Rng rng = Substream(seed, Stream::kSupport, 0);
  std::set<std::vector<Symbol>> seen;
  std::vector<std::vector<Symbol>> out;
  while (out.size() < count) {
    std::vector<Symbol> v(len);
    for (auto& s : v) s = static_cast<Symbol>(UniformBelow(rng, order));
    if (seen.insert(v).second) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Pmf MaskTupleDistribution(const LinearCode& retrieval, const QuerySpace& space,
                          std::span<const std::size_t> subset,
                          std::uint64_t guard) {
  const Field& f = retrieval.field();
  Require(f == space.coefficient_field(), Errc::kOwnerMismatch,
          "retrieval code and query space use different base fields");
  for (std::size_t n : subset) {
    Require(n < retrieval.length(), Errc::kInvalidArgument,
            "subset index " + std::to_string(n) + " out of range");
  }
  const std::size_t len = retrieval.dimension() * space.dimension();
  const auto draws = BoundedPower(f.order(), len, guard);
  Require(draws.has_value(), Errc::kEnumerationGuard,
          "mask enumeration needs " + std::to_string(f.order()) + "^" +
              std::to_string(len) + " draws, above the guard of " +
              std::to_string(guard));

  std::map<std::vector<Symbol>, std::uint64_t> counts;
  std::vector<Symbol> draw(len, 0);
  std::vector<Symbol> view(subset.size() * space.dimension());
  do {
    MaskView(f, retrieval.generator(), subset, space.dimension(), draw.data(),
             view.data());
    ++counts[view];
  } while (Advance(draw, f.order()));

  Pmf out;
  for (const auto& [v, c] : counts) out[v] = Rational(c) / Rational(*draws);
  return out;
}

bool IsUniform(const Pmf& pmf, std::uint64_t outcomes) {
  if (pmf.size() != outcomes) return false;
  const Rational p = Rational(1) / Rational(outcomes);
  return std::all_of(pmf.begin(), pmf.end(),
                     [&](const auto& e) { return e.second == p; });
}

std::string AuditModeName(AuditMode mode) {
  return mode == AuditMode::kJoint ? "joint" : "per_iteration";
}

PrivacyReport AuditPrivacy(const AuditTarget& target,
                           std::span<const std::size_t> subset,
                           const AuditOptions& options) {
  const Field& f = target.retrieval.field();
  const std::size_t n = target.retrieval.length();
  const std::size_t q_dim = target.space.dimension();
  Require(f == target.space.coefficient_field(), Errc::kOwnerMismatch,
          "retrieval code and query space use different base fields");
  Require(!subset.empty(), Errc::kInvalidArgument, "empty colluding subset");
  std::set<std::size_t> distinct(subset.begin(), subset.end());
  Require(distinct.size() == subset.size(), Errc::kInvalidArgument,
          "colluding subset has repeated servers");
  Require(*distinct.rbegin() < n, Errc::kInvalidArgument,
          "colluding subset names server " +
              std::to_string(*distinct.rbegin()) + " of " + std::to_string(n));
  Require(!target.iterations.empty() && target.block_length > 0,
          Errc::kInvalidArgument, "audit target has no iterations");

  PrivacyReport report;
  report.subset.assign(subset.begin(), subset.end());

  const std::size_t req_len = target.block_length * q_dim;
  const auto full = BoundedPower(f.order(), req_len, options.support_limit);
  if (full) {
    report.support = FullSupport(f.order(), req_len);
  } else {
    report.support = SampledSupport(
        f.order(), req_len,
        std::min<std::uint64_t>(options.support_samples, options.support_limit),
        options.seed);
    report.sampled_support = true;
  }
  const std::uint64_t l = report.support.size();

  const std::size_t per_iter = target.retrieval.dimension() * q_dim;
  const std::size_t s_count = target.iterations.size();
  const std::uint64_t budget = options.guard / l;
  const auto joint_draws = BoundedPower(f.order(), per_iter * s_count, budget);
  const auto iter_draws = BoundedPower(f.order(), per_iter, budget);
  Require(iter_draws.has_value(), Errc::kEnumerationGuard,
          "audit needs " + std::to_string(l) + " requests x " +
              std::to_string(f.order()) + "^" + std::to_string(per_iter) +
              " draws per iteration, above the guard of " +
              std::to_string(options.guard));

  report.mask_tuple =
      MaskTupleDistribution(target.retrieval, target.space, subset, options.guard);

  if (joint_draws) {
    report.mode = AuditMode::kJoint;
    report.draws = *joint_draws;
    for (std::size_t s = 0; s < s_count; ++s) report.audited_iterations.push_back(s);
    UnitResult unit =
        EnumerateUnit(target, subset, report.audited_iterations, report.support);
    const Rational total = Rational(l) * Rational(report.draws);
    for (std::size_t r = 0; r < unit.counts.size(); ++r) {
      for (auto& [v, c] : unit.counts[r]) {
        report.joint.push_back({r, v, Rational(c) / total});
      }
    }
    report.divergences.push_back(unit.divergence);
  } else {
    report.mode = AuditMode::kPerIteration;
    report.draws = *iter_draws;
    for (std::size_t s = 0; s < s_count; ++s) {
      const std::size_t one[] = {s};
      report.audited_iterations.push_back(s);
      report.divergences.push_back(
          EnumerateUnit(target, subset, one, report.support).divergence);
    }
  }
  report.divergence =
      *std::max_element(report.divergences.begin(), report.divergences.end());
  report.independent = report.divergence == 0;
  return report;
}

std::vector<std::vector<std::size_t>> Subsets(std::size_t n, std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  if (t > n) return out;
  std::vector<std::size_t> cur(t);
  for (std::size_t i = 0; i < t; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = t;
    while (i > 0 && cur[i - 1] == n - t + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < t; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

OtpReport OtpCheck(const Field& field, std::size_t dim,
                   std::span<const Rational> z) {
  const auto size = BoundedPower(field.order(), dim, std::uint64_t{1} << 16);
  Require(size.has_value(), Errc::kEnumerationGuard, "V is too large");
  const std::size_t v = *size;
  Require(z.size() == v, Errc::kInvalidArgument,
          "pmf has " + std::to_string(z.size()) + " entries, |V| is " +
              std::to_string(v));
  Rational total = 0;
  for (const auto& p : z) {
    Require(p >= 0, Errc::kInvalidArgument, "negative probability");
    total += p;
  }
  Require(total == 1, Errc::kInvalidArgument, "pmf does not sum to 1");

  // Vector addition on packed indices.
  auto add = [&](std::size_t a, std::size_t b) {
    std::size_t out = 0, scale = 1;
    for (std::size_t i = 0; i < dim; ++i) {
      const auto da = static_cast<Symbol>(a % field.order());
      const auto db = static_cast<Symbol>(b % field.order());
      out += field.add(da, db) * scale;
      a /= field.order();
      b /= field.order();
      scale *= field.order();
    }
    return out;
  };

  const Rational pu = Rational(1) / Rational(v);
  std::vector<std::vector<Rational>> joint(v, std::vector<Rational>(v, 0));
  for (std::size_t zi = 0; zi < v; ++zi) {
    for (std::size_t u = 0; u < v; ++u) joint[zi][add(zi, u)] += z[zi] * pu;
  }
  std::vector<Rational> w(v, 0);
  for (std::size_t zi = 0; zi < v; ++zi) {
    for (std::size_t wi = 0; wi < v; ++wi) w[wi] += joint[zi][wi];
  }
  OtpReport out;
  out.uniform = std::all_of(w.begin(), w.end(),
                            [&](const Rational& p) { return p == pu; });
  out.independent = true;
  for (std::size_t zi = 0; zi < v && out.independent; ++zi) {
    for (std::size_t wi = 0; wi < v; ++wi) {
      if (joint[zi][wi] != z[zi] * w[wi]) {
        out.independent = false;
        break;
      }
    }
  }
  return out;
}

std::vector<std::vector<Rational>> OtpGrid(std::size_t outcomes,
                                           std::size_t count,
                                           std::uint64_t seed) {
  Require(outcomes > 0, Errc::kInvalidArgument, "empty outcome set");
  std::vector<std::vector<Rational>> grid;
  auto normalized = [&](const std::vector<std::uint64_t>& weights) {
    std::uint64_t sum = 0;
    for (auto w : weights) sum += w;
    std::vector<Rational> out;
    out.reserve(weights.size());
    for (auto w : weights) out.emplace_back(Rational(w) / Rational(sum));
    return out;
  };
  for (std::size_t i = 0; i < outcomes; ++i) {
    std::vector<std::uint64_t> w(outcomes, 0);
    w[i] = 1;
    grid.push_back(normalized(w));
  }
  grid.push_back(normalized(std::vector<std::uint64_t>(outcomes, 1)));
  {
    std::vector<std::uint64_t> up(outcomes), square(outcomes);
    for (std::size_t i = 0; i < outcomes; ++i) {
      up[i] = i + 1;
      square[i] = (i + 1) * (i + 1);
    }
    grid.push_back(normalized(up));
    grid.push_back(normalized(square));
  }
  Rng rng = Substream(seed, Stream::kSupport, outcomes);
  while (grid.size() < count) {
    std::vector<std::uint64_t> w(outcomes);
    std::uint64_t sum = 0;
    for (auto& x : w) sum += (x = UniformBelow(rng, 10));
    if (sum == 0) continue;
    grid.push_back(normalized(w));
  }
  return grid;
}

}  // namespace starpc
