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

#include "starpc/systematic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "starpc/error.hpp"
#include "starpc/linalg.hpp"
#include "starpc/random.hpp"

namespace starpc {

LinearCode ResponseCode(const LinearCode& c, const LinearCode& d, int g) {
  Require(ContainsRepetition(c), Errc::kConfiguration,
          "storage code does not contain the all-ones word");
  return StarProduct(StarPower(c, g), d);
}

std::size_t ComputeF(const LinearCode& e, std::size_t k, std::uint64_t guard) {
  const std::size_t f = std::min(e.min_distance(guard) - 1, k);
  Require(f > 0, Errc::kInfeasible,
          "response code has minimum distance 1, no position can be decoded");
  return f;
}

SchedulePlan BuildSchedule(std::size_t k, std::size_t b, std::size_t f) {
  Require(k > 0 && b > 0, Errc::kConfiguration, "K and B must be positive");
  Require(f > 0 && f <= k, Errc::kConfiguration,
          "F=" + std::to_string(f) + " must lie in [1, K=" + std::to_string(k) +
              "]");
  Require((k * b) % f == 0, Errc::kConfiguration,
          "F=" + std::to_string(f) + " does not divide KB=" +
              std::to_string(k * b));
  SchedulePlan plan{k, b, f, {}};
  const std::size_t s_count = k * b / f;
  plan.iterations.resize(s_count);
  for (std::size_t s = 0; s < s_count; ++s) {
    auto& slots = plan.iterations[s];
    slots.reserve(f);
    for (std::size_t t = s * f; t < (s + 1) * f; ++t) {
      slots.push_back({t % k, t / k});
    }
  }
  return plan;
}

std::size_t DefaultBlockLength(std::size_t k, std::size_t f) {
  Require(k > 0 && f > 0, Errc::kInvalidArgument, "K and F must be positive");
  return f / std::gcd(k, f);
}

std::vector<Polynomial> BuildIterationQueries(
    const MaskSet& masks, std::span<const Slot> slots,
    std::span<const Polynomial> functions, std::size_t k) {
  for (const Slot& s : slots) {
    Require(s.server < k, Errc::kInvalidArgument,
            "slot server " + std::to_string(s.server) +
                " is not a systematic server (K=" + std::to_string(k) + ")");
  }
  return BuildQueries(masks, slots, functions);
}

IterationDecode DecodeIteration(const Field& ext,
                                std::span<const Symbol> responses,
                                const Matrix& parity_check,
                                std::span<const Slot> slots) {
  Require(responses.size() == parity_check.rows(), Errc::kInvalidArgument,
          "response length does not match the parity check");
  const Matrix h =
      parity_check.field() == ext ? parity_check : parity_check.embed(ext);
  IterationDecode out;
  out.syndrome = RowTimes(responses, h);
  if (slots.empty()) {
    Require(std::all_of(out.syndrome.begin(), out.syndrome.end(),
                        [](Symbol v) { return v == 0; }),
            Errc::kCorruptedResponse,
            "nonzero syndrome in an iteration with no assigned positions");
    return out;
  }
  std::vector<std::size_t> rows;
  rows.reserve(slots.size());
  for (const Slot& s : slots) rows.push_back(s.server);
  try {
    out.values = SolveLinear(h.select_rows(rows), out.syndrome);
  } catch (const Error& e) {
    if (e.code() == Errc::kNoSolution) {
      Fail(Errc::kCorruptedResponse,
           "syndrome is not explained by errors on the assigned positions");
    }
    if (e.code() == Errc::kAmbiguousSolution) {
      Fail(Errc::kInternal,
           "parity-check rows at the assigned positions are dependent");
    }
    throw;
  }
  return out;
}

SystematicPlan PlanSystematic(const SystematicConfig& config) {
  const LinearCode& c = config.storage;
  const LinearCode& d = config.retrieval;
  const Field& base = c.field();
  Require(base == d.field(), Errc::kConfiguration,
          "storage and retrieval codes use different fields");
  Require(c.length() == d.length(), Errc::kConfiguration,
          "storage and retrieval codes have different lengths");
  const std::size_t n = c.length();
  const std::size_t t = d.dimension();
  Require(t >= 1 && t < n, Errc::kConfiguration,
          "need 1 <= T < N, got T=" + std::to_string(t) +
              " N=" + std::to_string(n));
  Require(config.degree >= 1, Errc::kConfiguration, "G must be at least 1");
  Require(config.data_rows >= 1, Errc::kConfiguration, "M must be at least 1");
  Require(config.ext.characteristic() == base.characteristic() &&
              config.ext.degree() % base.degree() == 0,
          Errc::kConfiguration,
          config.ext.name() + " does not extend " + base.name());
  Require(IsSystematic(c), Errc::kConfiguration,
          "storage code generator is not in systematic form");
  Require(d.is_mds(config.guard), Errc::kConfiguration,
          "retrieval code is not MDS");

  LinearCode e = ResponseCode(c, d, static_cast<int>(config.degree));
  const std::size_t f = ComputeF(e, c.dimension(), config.guard);
  const std::size_t b =
      config.block_length.value_or(DefaultBlockLength(c.dimension(), f));
  SchedulePlan schedule = BuildSchedule(c.dimension(), b, f);
  Matrix h = NullSpace(e.canonical_generator());
  return {QuerySpace::Polynomials(base, config.data_rows, config.degree),
          std::move(e), std::move(h), f, std::move(schedule)};
}

SystematicResult RunSystematic(const SystematicConfig& config,
                               std::span<const Polynomial> functions,
                               const Matrix& x, std::uint64_t seed) {
  SystematicPlan plan = PlanSystematic(config);
  const std::size_t n = config.storage.length();
  const std::size_t k = config.storage.dimension();
  const std::size_t b = plan.schedule.block_length;
  Require(functions.size() == b, Errc::kInvalidArgument,
          "expected B=" + std::to_string(b) + " functions");
  Require(x.field() == config.ext && x.rows() == config.data_rows &&
              x.cols() == k,
          Errc::kInvalidArgument,
          "data must be an M x K matrix over " + config.ext.name());
  for (const auto& phi : functions) plan.space.coordinates(phi);

  const Field& base = config.storage.field();
  const Matrix h = plan.parity_check.embed(config.ext);
  Fleet fleet(config.ext, base, EncodeStorage(x, config.storage),
              config.transport);

  SystematicResult out{Matrix(config.ext, b, k), std::move(plan), {}};
  SessionTranscript& tr = out.transcript;
  tr.scheme = SchemeKind::kSystematic;
  tr.seed = seed;
  tr.servers = n;
  tr.data_columns = k;
  tr.block_length = b;
  tr.query_dimension = out.plan.space.dimension();

  const auto& iterations = out.plan.schedule.iterations;
  for (std::size_t s = 0; s < iterations.size(); ++s) {
    Rng rng = Substream(seed, Stream::kIteration, s);
    MaskSet masks = MakeMasks(config.retrieval, out.plan.space, rng);
    IterationRecord rec;
    rec.index = s;
    rec.slots = iterations[s];
    rec.queries = BuildIterationQueries(masks, rec.slots, functions, k);
    rec.responses = fleet.Exchange(rec.queries);
    auto decoded = DecodeIteration(config.ext, rec.responses, h, rec.slots);
    for (std::size_t i = 0; i < rec.slots.size(); ++i) {
      out.values(rec.slots[i].function, rec.slots[i].server) = decoded.values[i];
    }
    rec.syndrome = std::move(decoded.syndrome);
    rec.decoded = std::move(decoded.values);
    rec.codewords = std::move(masks.codewords);

    tr.accounting.iterations += 1;
    tr.accounting.uploaded_base_symbols += rec.queries.size() * tr.query_dimension;
    tr.accounting.downloaded_ext_symbols += rec.responses.size();
    tr.iterations.push_back(std::move(rec));
  }
  return out;
}

Rational RsRate(std::size_t n, std::size_t k, std::size_t t, std::size_t g) {
  Require(n > 0 && k > 0, Errc::kInvalidArgument, "N and K must be positive");
  const std::size_t used = g * (k - 1) + t;
  Require(used <= n, Errc::kInfeasible,
          "G(K-1)+T=" + std::to_string(used) + " exceeds N=" +
              std::to_string(n));
  return Rational(std::min(n - used, k)) / Rational(n);
}

}  // namespace starpc
