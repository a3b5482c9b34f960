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

#include "starpc/rate_table.hpp"

#include <sstream>

#include "starpc/error.hpp"
#include "starpc/rational.hpp"
#include "starpc/session.hpp"
#include "starpc/systematic.hpp"

namespace starpc {

namespace {

Json RowConfig(const RateTableSpec& spec, std::size_t n, std::size_t k,
               std::size_t t, std::size_t g) {
  Json j = {{"scheme", k == 1 ? "replicated" : "systematic"},
            {"field", {{"p", spec.p}}},
            {"N", n},
            {"T", t},
            {"M", spec.data_rows},
            {"G", g},
            {"seed", spec.seed}};
  if (k > 1) j["K"] = k;
  return j;
}

void Measure(const RateTableSpec& spec, RateRow& row, const Rational& formula) {
  try {
    const SessionConfig config =
        ParseSessionConfig(RowConfig(spec, row.n, row.k, row.t, row.g));
    const SessionResult r = RunSession(config);
    const Rational measured = r.transcript.rate();
    row.f = r.plan ? r.plan->f : row.n - row.t;
    row.s = r.transcript.iterations.size();
    row.rate_measured = FormatFraction(measured);
    row.verified = measured == formula &&
                   r.values == DirectValues(config.ext, r.functions, r.data);
  } catch (const Error& e) {
    if (e.code() != Errc::kInfeasible) throw;
    row.rate_measured = "infeasible";
    row.verified = formula == 0;
  }
}

}  // namespace

std::vector<RateRow> RateTable(const RateTableSpec& spec) {
  std::vector<RateRow> rows;
  for (std::size_t n = spec.n.lo; n <= spec.n.hi; ++n) {
    if (n > spec.p) continue;
    for (std::size_t k = spec.k.lo; k <= spec.k.hi; ++k) {
      if (k == 0 || k > n) continue;
      for (std::size_t t = spec.t.lo; t <= spec.t.hi; ++t) {
        if (t == 0 || t >= n) continue;
        for (std::size_t g = spec.g.lo; g <= spec.g.hi; ++g) {
          if (g == 0) continue;
          RateRow row;
          row.n = n;
          row.k = k;
          row.t = t;
          row.g = g;
          row.scheme = k == 1 ? "replicated" : "systematic";
          std::optional<Rational> formula;
          if (k == 1) {
            formula = Rational(n - t) / Rational(n);
          } else if (g * (k - 1) + t <= n) {
            formula = RsRate(n, k, t, g);
          }
          if (!formula) {
            row.rate_formula = row.rate_measured = "infeasible";
            row.verified = true;
          } else {
            row.rate_formula = FormatFraction(*formula);
            row.rate_decimal = FormatDecimal(*formula);
            Measure(spec, row, *formula);
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

std::string RateTableCsv(const std::vector<RateRow>& rows) {
  std::ostringstream out;
  out << "N,K,T,G,F,S,rate_formula,rate_measured,rate_decimal,scheme\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.k << ',' << r.t << ',' << r.g << ',';
    if (r.f) out << *r.f;
    out << ',';
    if (r.s) out << *r.s;
    out << ',' << r.rate_formula << ',' << r.rate_measured << ','
        << r.rate_decimal << ',' << r.scheme << '\n';
  }
  return out.str();
}

Json RateTableJson(const std::vector<RateRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j = {{"N", r.n},
              {"K", r.k},
              {"T", r.t},
              {"G", r.g},
              {"rate_formula", r.rate_formula},
              {"rate_measured", r.rate_measured},
              {"rate_decimal", r.rate_decimal},
              {"scheme", r.scheme},
              {"verified", r.verified}};
    j["F"] = r.f ? Json(*r.f) : Json(nullptr);
    j["S"] = r.s ? Json(*r.s) : Json(nullptr);
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace starpc
