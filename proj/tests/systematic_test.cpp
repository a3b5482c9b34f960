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

#include <gtest/gtest.h>

#include <map>

#include "bridge.hpp"
#include "starpc/linalg.hpp"
#include "starpc/session.hpp"

namespace starpc {
namespace {

using testing_util::ForEachMatrix;
using testing_util::Iota;
using testing_util::RandomMatrix;
using testing_util::ToOracle;

SystematicConfig RsConfig(std::uint32_t p, std::size_t n, std::size_t k,
                          std::size_t t, std::uint32_t g, std::size_t m = 1) {
  const Field f = Field::Prime(p);
  return {SystematicGenerator(ReedSolomonCode(f, Iota(n), k)),
          ReedSolomonCode(f, Iota(n), t),
          g,
          m,
          f,
          std::nullopt,
          Transport::kDirect,
          kDefaultCodewordGuard};
}

std::vector<Polynomial> Draw(const QuerySpace& space, std::size_t b,
                             std::uint64_t seed) {
  Rng rng = Substream(seed, Stream::kFunctions, 0);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < b; ++i) out.push_back(space.sample(rng));
  return out;
}

TEST(SystematicTest, ComputeFForReedSolomon) {
  auto cfg = RsConfig(11, 8, 3, 2, 1);
  auto e = ResponseCode(cfg.storage, cfg.retrieval, 1);
  EXPECT_EQ(e.min_distance(), 5U);
  EXPECT_EQ(ComputeF(e, 3), 3U);
  e = ResponseCode(cfg.storage, cfg.retrieval, 2);
  EXPECT_EQ(e.dimension(), 6U);
  EXPECT_EQ(e.min_distance(), 3U);
  EXPECT_EQ(ComputeF(e, 3), 2U);
}

TEST(SystematicTest, ComputeFIsInfeasibleAtDistanceOne) {
  const Field f = Field::Prime(5);
  const LinearCode full(Matrix::Identity(f, 3));
  EXPECT_STARPC_ERROR(ComputeF(full, 2), Errc::kInfeasible);
}

TEST(SystematicTest, ScheduleForFourteenServers) {
  const auto cfg = RsConfig(17, 14, 8, 1, 1);
  auto with_b = cfg;
  with_b.block_length = 3;
  const SystematicPlan plan = PlanSystematic(with_b);
  EXPECT_EQ(plan.f, 6U);
  ASSERT_EQ(plan.schedule.size(), 4U);
  // Iteration (one-based) in which function b is computed on column k.
  std::vector<std::vector<int>> when(3, std::vector<int>(8, 0));
  for (std::size_t s = 0; s < plan.schedule.size(); ++s) {
    for (const Slot& slot : plan.schedule.iterations[s]) {
      when[slot.function][slot.server] = static_cast<int>(s) + 1;
    }
  }
  EXPECT_EQ(when[0], (std::vector<int>{1, 1, 1, 1, 1, 1, 2, 2}));
  EXPECT_EQ(when[1], (std::vector<int>{2, 2, 2, 2, 3, 3, 3, 3}));
  EXPECT_EQ(when[2], (std::vector<int>{3, 3, 4, 4, 4, 4, 4, 4}));
}

TEST(SystematicTest, ScheduleIsABijection) {
  for (std::size_t k = 1; k <= 7; ++k) {
    for (std::size_t f = 1; f <= k; ++f) {
      for (std::size_t b = 1; b <= 6; ++b) {
        if ((k * b) % f != 0) {
          EXPECT_STARPC_ERROR(BuildSchedule(k, b, f), Errc::kConfiguration);
          continue;
        }
        const SchedulePlan plan = BuildSchedule(k, b, f);
        EXPECT_EQ(plan.size(), k * b / f);
        std::map<std::pair<std::size_t, std::size_t>, int> hits;
        for (const auto& slots : plan.iterations) {
          ASSERT_EQ(slots.size(), f);
          std::vector<bool> used(k, false);
          for (const Slot& s : slots) {
            ASSERT_LT(s.server, k);
            ASSERT_LT(s.function, b);
            EXPECT_FALSE(used[s.server]);
            used[s.server] = true;
            ++hits[{s.function, s.server}];
          }
        }
        EXPECT_EQ(hits.size(), k * b);
      }
    }
  }
  EXPECT_STARPC_ERROR(BuildSchedule(3, 1, 4), Errc::kConfiguration);
}

TEST(SystematicTest, DefaultBlockLength) {
  EXPECT_EQ(DefaultBlockLength(8, 6), 3U);
  EXPECT_EQ(DefaultBlockLength(3, 2), 2U);
  EXPECT_EQ(DefaultBlockLength(3, 3), 1U);
}

TEST(SystematicTest, RsRateValues) {
  EXPECT_EQ(RsRate(8, 3, 2, 1), Rational(3, 8));
  EXPECT_EQ(RsRate(8, 3, 2, 2), Rational(1, 4));
  EXPECT_EQ(RsRate(6, 2, 1, 1), Rational(1, 3));
  EXPECT_EQ(RsRate(8, 4, 2, 2), Rational(0));
  EXPECT_STARPC_ERROR(RsRate(8, 3, 2, 4), Errc::kInfeasible);
}

TEST(SystematicTest, ZeroRateConfigurationIsInfeasible) {
  const auto cfg = RsConfig(11, 8, 4, 2, 2);
  EXPECT_STARPC_ERROR(PlanSystematic(cfg), Errc::kInfeasible);
}

TEST(SystematicTest, RunMatchesDirectEvaluation) {
  for (auto [g, m] : {std::pair{1U, 1U}, std::pair{2U, 2U}, std::pair{1U, 3U}}) {
    const auto cfg = RsConfig(11, 8, 3, 2, g, m);
    const SystematicPlan plan = PlanSystematic(cfg);
    const auto fns = Draw(plan.space, plan.schedule.block_length, g * 10 + m);
    Rng rng = Substream(m, Stream::kData, 0);
    const Matrix x = RandomMatrix(cfg.ext, m, 3, rng);
    const auto res = RunSystematic(cfg, fns, x, 31);
    EXPECT_EQ(res.values, DirectValues(cfg.ext, fns, x));
    EXPECT_EQ(res.transcript.rate(), RsRate(8, 3, 2, g));
  }
}

TEST(SystematicTest, ExtensionFieldData) {
  const Field f = Field::Prime(3);
  SystematicConfig cfg{SystematicGenerator(ReedSolomonCode(f, Iota(3), 2)),
                       ReedSolomonCode(f, Iota(3), 1),
                       1,
                       1,
                       Field::Standard(3, 2),
                       std::nullopt,
                       Transport::kWire,
                       kDefaultCodewordGuard};
  const SystematicPlan plan = PlanSystematic(cfg);
  EXPECT_EQ(plan.f, 1U);
  const auto fns = Draw(plan.space, plan.schedule.block_length, 3);
  ForEachMatrix(cfg.ext, 1, 2, [&](const Matrix& x) {
    EXPECT_EQ(RunSystematic(cfg, fns, x, 5).values,
              DirectValues(cfg.ext, fns, x));
  });
}

TEST(SystematicTest, ResponsesLieInResponseCodePlusSlotErrors) {
  const auto cfg = RsConfig(11, 8, 3, 2, 2, 2);
  const SystematicPlan plan = PlanSystematic(cfg);
  const auto fns = Draw(plan.space, plan.schedule.block_length, 8);
  Rng rng = Substream(8, Stream::kData, 0);
  const Matrix x = RandomMatrix(cfg.ext, 2, 3, rng);
  const auto res = RunSystematic(cfg, fns, x, 77);
  const Field& f = cfg.ext;
  for (const auto& rec : res.transcript.iterations) {
    auto word = rec.responses;
    for (std::size_t i = 0; i < rec.slots.size(); ++i) {
      auto& w = word[rec.slots[i].server];
      w = f.sub(w, rec.decoded[i]);
    }
    for (Symbol v : RowTimes(word, plan.parity_check)) EXPECT_EQ(v, 0U);
  }
}

TEST(SystematicTest, DecodeWithoutSlots) {
  const auto cfg = RsConfig(7, 6, 2, 1, 1);
  const SystematicPlan plan = PlanSystematic(cfg);
  const auto word = plan.response_code.encode(std::vector<Symbol>{3, 1});
  const auto d = DecodeIteration(cfg.ext, word, plan.parity_check, {});
  EXPECT_TRUE(d.values.empty());
  for (Symbol v : d.syndrome) EXPECT_EQ(v, 0U);
  auto bad = word;
  bad[5] = cfg.ext.add(bad[5], 1);
  EXPECT_STARPC_ERROR(DecodeIteration(cfg.ext, bad, plan.parity_check, {}),
                      Errc::kCorruptedResponse);
}

TEST(SystematicTest, ErrorOutsideSlotsIsReported) {
  const auto cfg = RsConfig(7, 6, 2, 1, 1);
  const SystematicPlan plan = PlanSystematic(cfg);
  auto word = plan.response_code.encode(std::vector<Symbol>{2, 5});
  word[0] = cfg.ext.add(word[0], 6);
  const std::vector<Slot> slots = {{0, 0}};
  EXPECT_EQ(DecodeIteration(cfg.ext, word, plan.parity_check, slots).values,
            (std::vector<Symbol>{6}));
  word[4] = cfg.ext.add(word[4], 1);
  EXPECT_STARPC_ERROR(DecodeIteration(cfg.ext, word, plan.parity_check, slots),
                      Errc::kCorruptedResponse);
}

TEST(SystematicTest, MonomialResponsesSpanStarPower) {
  // Span of (y_n^g)_n over all data equals C^{*2} when C contains 1.
  const Field f = Field::Prime(5);
  const LinearCode c = SystematicGenerator(ReedSolomonCode(f, Iota(4), 2));
  const auto o = ToOracle(f);
  oracle::Mat vectors;
  ForEachMatrix(f, 1, 2, [&](const Matrix& x) {
    const auto y = RowTimes(x.row(0), c.generator());
    for (std::uint64_t g = 1; g <= 2; ++g) {
      std::vector<Symbol> v;
      for (Symbol yn : y) v.push_back(f.pow(yn, g));
      vectors.push_back(v);
    }
  });
  EXPECT_TRUE(oracle::SameSpan(o, vectors, ToOracle(StarPower(c, 2).generator())));
}

TEST(SystematicTest, PlannerRejectsBadStorage) {
  auto cfg = RsConfig(11, 8, 3, 2, 1);
  cfg.storage = ReedSolomonCode(Field::Prime(11), Iota(8), 3);
  EXPECT_STARPC_ERROR(PlanSystematic(cfg), Errc::kConfiguration);
  cfg.storage = LinearCode(Matrix(Field::Prime(11), {{1, 0, 0, 0, 0, 0, 0, 1},
                                                     {0, 1, 0, 0, 0, 0, 0, 1}}));
  EXPECT_STARPC_ERROR(PlanSystematic(cfg), Errc::kConfiguration);
  cfg = RsConfig(11, 8, 3, 2, 1);
  cfg.retrieval = ReedSolomonCode(Field::Prime(11), Iota(7), 2);
  EXPECT_STARPC_ERROR(PlanSystematic(cfg), Errc::kConfiguration);
}

TEST(SystematicTest, RepetitionStorageMatchesReplicatedRate) {
  const Field f = Field::Prime(2);
  SystematicConfig cfg{RepetitionCode(3, f),
                       LinearCode(Matrix(f, {{1, 0, 1}, {0, 1, 1}})),
                       2,
                       2,
                       Field::Standard(2, 2),
                       std::nullopt,
                       Transport::kDirect,
                       kDefaultCodewordGuard};
  const SystematicPlan plan = PlanSystematic(cfg);
  EXPECT_EQ(plan.f, 1U);
  const auto fns = Draw(plan.space, 1, 2);
  const auto res = RunSystematic(cfg, fns, Matrix(cfg.ext, 2, 1, {2, 3}), 1);
  EXPECT_EQ(res.transcript.rate(), Rational(1, 3));
  EXPECT_EQ(res.values, DirectValues(cfg.ext, fns, Matrix(cfg.ext, 2, 1, {2, 3})));
}

}  // namespace
}  // namespace starpc
