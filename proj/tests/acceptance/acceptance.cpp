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


// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "starpc/code.hpp"
#include "starpc/error.hpp"
#include "starpc/field.hpp"
#include "starpc/privacy.hpp"
#include "starpc/random.hpp"
#include "starpc/replicated.hpp"
#include "starpc/session.hpp"
#include "starpc/systematic.hpp"

namespace starpc {
namespace {

// Sessions from criteria 1-4, checked again under criterion 10.
struct Ledger {
  std::vector<SessionTranscript> sessions;
};

Ledger g_ledger;

class Failure : public std::exception {
 public:
  explicit Failure(std::string what) : what_(std::move(what)) {}
  const char* what() const noexcept override { return what_.c_str(); }

 private:
  std::string what_;
};

void Expect(bool ok, const std::string& message) {
  if (!ok) throw Failure(message);
}

template <typename T>
std::string Str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::vector<Symbol> Points(std::size_t n) {
  std::vector<Symbol> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Symbol>(i);
  return v;
}

Matrix RandomData(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = static_cast<Symbol>(UniformBelow(rng, f.order()));
    }
  }
  return m;
}

std::vector<Polynomial> RandomFunctions(const QuerySpace& space, std::size_t b,
                                        Rng& rng) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < b; ++i) out.push_back(space.sample(rng));
  return out;
}

LinearCode SmallRetrieval() {
  return LinearCode(Matrix(Field::Prime(2), {{1, 0, 1}, {0, 1, 1}}));
}

std::string Criterion1() {
  const Field f2 = Field::Prime(2);
  const ReplicatedConfig cfg{SmallRetrieval(), QuerySpace::Polynomials(f2, 2, 2),
                             Field::Standard(2, 2), 1, Transport::kDirect};
  Rng rng = Substream(1, Stream::kFunctions, 0);
  std::size_t runs = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto fns = RandomFunctions(cfg.space, 1, rng);
    for (Symbol a = 0; a < 4; ++a) {
      for (Symbol b = 0; b < 4; ++b) {
        const Matrix x(cfg.ext, 2, 1, {a, b});
        const auto res = RunReplicated(cfg, fns, x, 1000 * trial + 4 * a + b);
        const Symbol want = fns[0].evaluate(cfg.ext, std::vector<Symbol>{a, b});
        Expect(res.values == std::vector<Symbol>{want},
               "wrong value at trial " + Str(trial));
        Expect(res.transcript.rate() == Rational(1, 3), "rate is not 1/3");
        g_ledger.sessions.push_back(res.transcript);
        ++runs;
      }
    }
  }
  return Str(runs) + " sessions, rate 1/3";
}

std::string Criterion2() {
  const Field base = Field::Prime(7);
  const Field ext = Field::Standard(7, 2);
  const QuerySpace space = QuerySpace::Polynomials(base, 2, 2);
  std::size_t runs = 0;
  for (auto [n, t] : {std::pair{3, 1}, std::pair{4, 1}, std::pair{4, 2},
                      std::pair{5, 2}, std::pair{5, 3}}) {
    const std::size_t b = n - t;
    const ReplicatedConfig cfg{ReedSolomonCode(base, Points(n), t), space, ext,
                               b, Transport::kDirect};
    Rng rng = Substream(n * 10 + t, Stream::kData, 0);
    for (int trial = 0; trial < 50; ++trial) {
      const Matrix x = RandomData(ext, 2, 1, rng);
      const auto fns = RandomFunctions(space, b, rng);
      const auto res = RunReplicated(cfg, fns, x, trial);
      const Matrix values(ext, b, 1, res.values);
      Expect(values == DirectValues(ext, fns, x),
             "wrong values for N=" + Str(n) + " T=" + Str(t));
      Expect(res.transcript.rate() == Rational(n - t, n),
             "rate " + FormatFraction(res.transcript.rate()) + " for N=" +
                 Str(n) + " T=" + Str(t));
      g_ledger.sessions.push_back(res.transcript);
      ++runs;
    }
  }
  return Str(runs) + " sessions over 5 (N,T) pairs";
}

std::string Criterion3() {
  std::size_t checks = 0;
  for (const Field& f : {Field::Prime(7), Field::Standard(2, 3)}) {
    for (std::size_t n = 1; n <= f.order(); ++n) {
      const auto alpha = Points(n);
      for (std::size_t k = 1; k <= n; ++k) {
        const LinearCode rk = ReedSolomonCode(f, alpha, k);
        for (std::size_t l = 1; l <= n; ++l) {
          const LinearCode want = ReedSolomonCode(f, alpha, std::min(k + l - 1, n));
          const LinearCode got = StarProduct(rk, ReedSolomonCode(f, alpha, l));
          Expect(got.canonical_generator() == want.canonical_generator(),
                 f.name() + " N=" + Str(n) + " RS_" + Str(k) + " * RS_" + Str(l));
          ++checks;
        }
        for (std::size_t g = 1; g <= 4; ++g) {
          const LinearCode want =
              ReedSolomonCode(f, alpha, std::min(g * (k - 1) + 1, n));
          Expect(StarPower(rk, static_cast<int>(g)).canonical_generator() ==
                     want.canonical_generator(),
                 f.name() + " N=" + Str(n) + " RS_" + Str(k) + "^" + Str(g));
          ++checks;
        }
      }
    }
  }
  return Str(checks) + " identities over GF(7) and GF(8)";
}

std::string Criterion4() {
  const Field f = Field::Prime(11);
  const std::size_t n = 8;
  std::size_t configs = 0, boundary = 0;
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t g = 1; g * (k - 1) + 1 <= n; ++g) {
      for (std::size_t t = 1; g * (k - 1) + t <= n; ++t) {
        const Rational formula =
            Rational(std::min(n - (g * (k - 1) + t), k)) / Rational(n);
        Expect(RsRate(n, k, t, g) == formula, "rs_rate disagrees");
        const SystematicConfig cfg{
            SystematicGenerator(ReedSolomonCode(f, Points(n), k)),
            ReedSolomonCode(f, Points(n), t),
            static_cast<std::uint32_t>(g),
            1,
            f,
            std::nullopt,
            Transport::kDirect,
            kDefaultCodewordGuard};
        const std::string tag =
            "K=" + Str(k) + " T=" + Str(t) + " G=" + Str(g);
        if (formula == 0) {
          // No position is decodable: the session cannot run.
          bool infeasible = false;
          try {
            PlanSystematic(cfg);
          } catch (const Error& e) {
            infeasible = e.code() == Errc::kInfeasible;
          }
          Expect(infeasible, tag + " should be infeasible");
          ++boundary;
          continue;
        }
        const SystematicPlan plan = PlanSystematic(cfg);
        Rng rng = Substream(k * 100 + t * 10 + g, Stream::kData, 0);
        for (int trial = 0; trial < 20; ++trial) {
          const Matrix x = RandomData(f, 1, k, rng);
          const auto fns =
              RandomFunctions(plan.space, plan.schedule.block_length, rng);
          const auto res = RunSystematic(cfg, fns, x, trial);
          Expect(res.transcript.rate() == formula,
                 tag + " rate " + FormatFraction(res.transcript.rate()) +
                     " != " + FormatFraction(formula));
          Expect(res.values == DirectValues(f, fns, x), tag + " wrong values");
          g_ledger.sessions.push_back(res.transcript);
        }
        ++configs;
      }
    }
  }
  return Str(configs) + " configs x 20 sessions, " + Str(boundary) +
         " zero-rate configs rejected as infeasible";
}

std::string Criterion5() {
  const auto start = std::chrono::steady_clock::now();
  const AuditTarget target{SmallRetrieval(),
                           QuerySpace::Polynomials(Field::Prime(2), 1, 2),
                           {ReplicatedSlots(1, 0)},
                           1};
  for (const auto& subset : Subsets(3, 2)) {
    const auto r = AuditPrivacy(target, subset);
    Expect(r.mode == AuditMode::kJoint && r.draws == 16 && r.support.size() == 4,
           "audit was not an exhaustive joint enumeration");
    Expect(r.independent && r.divergence == 0,
           "2-subset leaks: divergence " + FormatFraction(r.divergence));
  }
  const std::vector<std::size_t> all = {0, 1, 2};
  const auto leak = AuditPrivacy(target, all);
  Expect(leak.divergence > 0, "3-subset shows no dependence");
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  Expect(secs < 5.0, "audit took " + Str(secs) + " s");
  return "three 2-subsets independent, 3-subset divergence " +
         FormatFraction(leak.divergence) + ", " + Str(secs) + " s";
}

std::string Criterion6() {
  std::size_t codes = 0;
  for (const Field& f :
       {Field::Prime(5), Field::Prime(7), Field::Standard(2, 3)}) {
    for (std::size_t n = 1; n <= f.order(); ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        const LinearCode rs = ReedSolomonCode(f, Points(n), k);
        const std::size_t d = EnumerateMinDistance(rs);
        Expect(d == n - k + 1, f.name() + " RS[" + Str(n) + "," + Str(k) +
                                   "] has distance " + Str(d));
        ++codes;
      }
    }
  }
  return Str(codes) + " RS codes enumerated";
}

std::string Criterion7() {
  const SchedulePlan plan = BuildSchedule(8, 3, 6);
  Expect(plan.size() == 4, "S=" + Str(plan.size()));
  const std::vector<std::vector<int>> want = {{1, 1, 1, 1, 1, 1, 2, 2},
                                              {2, 2, 2, 2, 3, 3, 3, 3},
                                              {3, 3, 4, 4, 4, 4, 4, 4}};
  std::vector<std::vector<int>> got(3, std::vector<int>(8, 0));
  for (std::size_t s = 0; s < plan.size(); ++s) {
    for (const Slot& slot : plan.iterations[s]) {
      Expect(got[slot.function][slot.server] == 0, "slot assigned twice");
      got[slot.function][slot.server] = static_cast<int>(s) + 1;
    }
  }
  Expect(got == want, "iteration labels differ");
  return "3x8 labels match, S=4";
}

std::string Criterion8() {
  std::size_t checks = 0;
  auto run = [&](const Field& f, std::size_t dim) {
    std::size_t outcomes = 1;
    for (std::size_t i = 0; i < dim; ++i) outcomes *= f.order();
    const auto grid = OtpGrid(outcomes, 24, dim);
    Expect(grid.size() >= 20, "grid too small");
    for (const auto& z : grid) {
      const auto r = OtpCheck(f, dim, z);
      Expect(r.uniform && r.independent,
             f.name() + "^" + Str(dim) + " fails the pad check");
      ++checks;
    }
  };
  for (std::size_t k = 1; k <= 3; ++k) run(Field::Prime(2), k);
  run(Field::Prime(3), 1);
  run(Field::Prime(3), 2);
  return Str(checks) + " Z distributions";
}

std::string Criterion9() {
  const Field f2 = Field::Prime(2);
  const Field gf4 = Field::Standard(2, 2);
  const QuerySpace space = QuerySpace::Polynomials(f2, 2, 2);
  const ReplicatedConfig rep{SmallRetrieval(), space, gf4, 1, Transport::kDirect};
  const SystematicConfig sys{RepetitionCode(3, f2), SmallRetrieval(), 2, 2, gf4,
                             std::nullopt, Transport::kDirect,
                             kDefaultCodewordGuard};
  Rng rng = Substream(9, Stream::kData, 0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Matrix x = RandomData(gf4, 2, 1, rng);
    const auto fns = RandomFunctions(space, 1, rng);
    const auto a = RunReplicated(rep, fns, x, seed);
    const auto b = RunSystematic(sys, fns, x, seed);
    Expect(b.values.entries() == a.values, "values differ at seed " + Str(seed));
    Expect(a.transcript.rate() == Rational(1, 3) &&
               b.transcript.rate() == Rational(1, 3),
           "rates differ from 1/3");
    Expect(a.transcript.iterations[0].queries ==
               b.transcript.iterations[0].queries,
           "queries differ at seed " + Str(seed));
  }
  return "50 seeds agree, rate 1/3";
}

std::string Criterion10() {
  Expect(!g_ledger.sessions.empty(), "no sessions recorded");
  for (const auto& tr : g_ledger.sessions) {
    const std::uint64_t s = tr.iterations.size();
    Expect(tr.accounting.iterations == s, "iteration count");
    Expect(tr.accounting.uploaded_base_symbols == s * tr.servers * tr.query_dimension,
           "upload != S*N*Q");
    Expect(tr.accounting.downloaded_ext_symbols == s * tr.servers,
           "download != S*N");
  }
  return Str(g_ledger.sessions.size()) + " sessions";
}

}  // namespace
}  // namespace starpc

int main() {
  const std::vector<std::pair<const char*, std::function<std::string()>>> criteria = {
      {"replicated GF(2)/GF(4), N=3 T=2, all data, rate 1/3", starpc::Criterion1},
      {"replicated rate (N-T)/N", starpc::Criterion2},
      {"RS star product and star power identities", starpc::Criterion3},
      {"systematic RS rate law over GF(11), N=8", starpc::Criterion4},
      {"exhaustive privacy audit", starpc::Criterion5},
      {"brute-force RS minimum distance", starpc::Criterion6},
      {"schedule K=8 B=3 F=6", starpc::Criterion7},
      {"one-time pad convolution", starpc::Criterion8},
      {"K=1 systematic equals replicated", starpc::Criterion9},
      {"upload and download accounting", starpc::Criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, fn] = criteria[i];
    std::string detail;
    bool ok = false;
    try {
      detail = fn();
      ok = true;
    } catch (const std::exception& e) {
      detail = e.what();
    }
    std::printf("%s %zu: %s (%s)\n", ok ? "PASS" : "FAIL", i + 1, name,
                detail.c_str());
    std::fflush(stdout);
    failed += ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
