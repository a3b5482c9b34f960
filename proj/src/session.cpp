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

#include "starpc/session.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "starpc/error.hpp"
#include "starpc/random.hpp"
#include "starpc/rational.hpp"
#include "starpc/replicated.hpp"

namespace starpc {

namespace {

const std::set<std::string> kConfigKeys = {
    "scheme", "field", "ext_field", "N",    "T",         "M",
    "G",      "K",     "B",         "seed", "functions", "data",
    "transport", "retrieval_code", "storage_code", "description"};

template <typename T>
T Get(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    Fail(Errc::kParse, std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
std::optional<T> Maybe(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return Get<T>(j, key);
}

std::vector<Symbol> DefaultAlpha(const Field& base, std::size_t n) {
  Require(n <= base.order(), Errc::kConfiguration,
          "default evaluation points need N <= |F| (N=" + std::to_string(n) +
              ", |F|=" + std::to_string(base.order()) + ")");
  std::vector<Symbol> alpha(n);
  for (std::size_t i = 0; i < n; ++i) alpha[i] = static_cast<Symbol>(i);
  return alpha;
}

SchemeKind ParseScheme(const std::string& s) {
  if (s == "replicated") return SchemeKind::kReplicated;
  if (s == "systematic") return SchemeKind::kSystematic;
  Fail(Errc::kParse, "unknown scheme '" + s + "'");
}

Json SlotsToJson(const std::vector<Slot>& slots) {
  Json out = Json::array();
  for (const Slot& s : slots) {
    out.push_back({{"server", s.server}, {"function", s.function}});
  }
  return out;
}

std::vector<Slot> SlotsFromJson(const Json& j) {
  std::vector<Slot> out;
  for (const auto& s : j) {
    out.push_back({Get<std::size_t>(s, "server"), Get<std::size_t>(s, "function")});
  }
  return out;
}

Json RateToJson(const Rational& r) {
  return {{"fraction", FormatFraction(r)}, {"decimal", FormatDecimal(r)}};
}

Json ParametersToJson(const SessionConfig& config, const SessionResult& r) {
  Json j = {{"N", config.servers()},
            {"K", r.transcript.data_columns},
            {"T", config.retrieval.dimension()},
            {"M", config.data_rows},
            {"G", config.degree},
            {"B", r.transcript.block_length},
            {"Q", r.transcript.query_dimension},
            {"S", r.transcript.iterations.size()}};
  if (r.plan) j["F"] = r.plan->f;
  return j;
}

Json AccountingToJson(const Accounting& a) {
  return {{"iterations", a.iterations},
          {"uploaded_base_symbols", a.uploaded_base_symbols},
          {"downloaded_ext_symbols", a.downloaded_ext_symbols}};
}

Json Header(const SessionConfig& config) {
  return {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
          {"seed", config.seed},
          {"config_hash", ConfigHash(config)},
          {"scheme", SchemeName(config.scheme)}};
}

Json PmfToJson(const Field& f, const Pmf& pmf) {
  Json out = Json::array();
  for (const auto& [v, p] : pmf) {
    out.push_back({{"tuple", SymbolsToJson(f, v)}, {"p", FormatFraction(p)}});
  }
  return out;
}

}  // namespace

SessionConfig ParseSessionConfig(const Json& j) {
  Require(j.is_object(), Errc::kParse, "session config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    Require(kConfigKeys.contains(key), Errc::kParse,
            "unknown config key '" + key + "'");
  }
  Require(j.contains("scheme") && j.contains("field"), Errc::kParse,
          "session config needs 'scheme' and 'field'");
  const SchemeKind scheme = ParseScheme(Get<std::string>(j, "scheme"));
  const Field base = FieldFromJson(j.at("field"));
  Require(base.is_prime_field(), Errc::kConfiguration,
          "base field must be a prime field, got " + base.name());
  const Field ext = j.contains("ext_field") ? FieldFromJson(j.at("ext_field"))
                                            : base;
  const auto m = Maybe<std::size_t>(j, "M").value_or(1);
  const auto g = Maybe<std::uint32_t>(j, "G").value_or(1);
  Require(m >= 1 && g >= 1, Errc::kConfiguration, "M and G must be positive");
  const auto n = Maybe<std::size_t>(j, "N");
  const auto t = Maybe<std::size_t>(j, "T");

  std::optional<LinearCode> retrieval;
  if (j.contains("retrieval_code")) {
    retrieval = CodeFromJson(j.at("retrieval_code"), base);
  } else {
    Require(n && t, Errc::kConfiguration,
            "need 'retrieval_code' or both 'N' and 'T'");
    retrieval = ReedSolomonCode(base, DefaultAlpha(base, *n), *t);
  }
  Require(retrieval->field() == base, Errc::kConfiguration,
          "retrieval code must be over the base field");
  Require(!n || *n == retrieval->length(), Errc::kConfiguration,
          "N does not match the retrieval code length");
  Require(!t || *t == retrieval->dimension(), Errc::kConfiguration,
          "T does not match the retrieval code dimension");

  std::optional<LinearCode> storage;
  const auto k = Maybe<std::size_t>(j, "K");
  if (scheme == SchemeKind::kSystematic) {
    if (j.contains("storage_code")) {
      storage = CodeFromJson(j.at("storage_code"), base);
    } else {
      Require(k.has_value(), Errc::kConfiguration,
              "need 'storage_code' or 'K' for the systematic scheme");
      storage = ReedSolomonCode(base, DefaultAlpha(base, retrieval->length()), *k);
    }
    Require(storage->field() == base, Errc::kConfiguration,
            "storage code must be over the base field");
    if (!IsSystematic(*storage)) storage = SystematicGenerator(*storage);
    Require(!k || *k == storage->dimension(), Errc::kConfiguration,
            "K does not match the storage code dimension");
  } else {
    Require(!j.contains("storage_code") && (!k || *k == 1),
            Errc::kConfiguration, "the replicated scheme stores X on every server");
  }

  std::optional<std::vector<Polynomial>> functions;
  if (j.contains("functions")) {
    Require(j.at("functions").is_array(), Errc::kParse,
            "'functions' must be an array of polynomials");
    functions.emplace();
    for (const auto& p : j.at("functions")) {
      functions->push_back(PolynomialFromJson(p, base, m));
    }
  }
  std::optional<Matrix> data;
  if (j.contains("data")) data = MatrixFromJson(j.at("data"), ext);

  Transport transport = Transport::kDirect;
  if (j.contains("transport")) {
    const auto s = Get<std::string>(j, "transport");
    Require(s == "direct" || s == "wire", Errc::kParse,
            "transport must be 'direct' or 'wire'");
    if (s == "wire") transport = Transport::kWire;
  }

  Json source = j;
  const auto seed = Maybe<std::uint64_t>(j, "seed").value_or(0);
  source["seed"] = seed;
  return SessionConfig{scheme,
                       base,
                       ext,
                       m,
                       g,
                       Maybe<std::size_t>(j, "B"),
                       std::move(*retrieval),
                       std::move(storage),
                       seed,
                       std::move(functions),
                       std::move(data),
                       transport,
                       std::move(source)};
}

SessionConfig LoadSessionConfig(const std::string& path) {
  std::ifstream in(path);
  Require(in.good(), Errc::kIo, "cannot open config '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    Fail(Errc::kParse, "config '" + path + "': " + e.what());
  }
  return ParseSessionConfig(j);
}

void SetSeed(SessionConfig& config, std::uint64_t seed) {
  config.seed = seed;
  config.source["seed"] = seed;
}

std::string ConfigHash(const SessionConfig& config) {
  const std::string text = config.source.dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  Require(EVP_Digest(text.data(), text.size(), md.data(), &len, EVP_sha256(),
                     nullptr) == 1,
          Errc::kInternal, "SHA-256 failed");
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

QuerySpace SessionQuerySpace(const SessionConfig& config) {
  return QuerySpace::Polynomials(config.base, config.data_rows, config.degree);
}

std::size_t ReplicatedBlockLength(const SessionConfig& config) {
  return config.block_length.value_or(config.retrieval.length() -
                                      config.retrieval.dimension());
}

Matrix DirectValues(const Field& ext, const std::vector<Polynomial>& functions,
                    const Matrix& data) {
  Matrix out(ext, functions.size(), data.cols());
  for (std::size_t k = 0; k < data.cols(); ++k) {
    const auto column = data.column(k);
    for (std::size_t b = 0; b < functions.size(); ++b) {
      out(b, k) = functions[b].evaluate(ext, column);
    }
  }
  return out;
}

Matrix SessionData(const SessionConfig& config) {
  if (config.data) return *config.data;
  Matrix data(config.ext, config.data_rows, config.columns());
  Rng rng = Substream(config.seed, Stream::kData, 0);
  for (std::size_t r = 0; r < data.rows(); ++r) {
    for (std::size_t c = 0; c < data.cols(); ++c) {
      data(r, c) = static_cast<Symbol>(UniformBelow(rng, config.ext.order()));
    }
  }
  return data;
}

SessionResult RunSession(const SessionConfig& config) {
  const QuerySpace space = SessionQuerySpace(config);
  std::optional<SystematicConfig> sys;
  std::optional<SystematicPlan> plan;
  std::size_t b = 0;
  if (config.scheme == SchemeKind::kSystematic) {
    sys = SystematicConfig{*config.storage, config.retrieval, config.degree,
                           config.data_rows, config.ext, config.block_length,
                           config.transport};
    plan = PlanSystematic(*sys);
    b = plan->schedule.block_length;
  } else {
    b = ReplicatedBlockLength(config);
  }

  std::vector<Polynomial> functions;
  if (config.functions) {
    functions = *config.functions;
  } else {
    Rng rng = Substream(config.seed, Stream::kFunctions, 0);
    for (std::size_t i = 0; i < b; ++i) functions.push_back(space.sample(rng));
  }

  Matrix data = SessionData(config);

  if (sys) {
    auto run = RunSystematic(*sys, functions, data, config.seed);
    return {std::move(functions), std::move(data), std::move(run.values),
            std::move(run.transcript), std::move(run.plan)};
  }
  ReplicatedConfig rep{config.retrieval, space, config.ext, b, config.transport};
  auto run = RunReplicated(rep, functions, data, config.seed);
  Matrix values(config.ext, b, 1, std::move(run.values));
  return {std::move(functions), std::move(data), std::move(values),
          std::move(run.transcript), std::nullopt};
}

Json TranscriptToJson(const SessionConfig& config, const SessionResult& r) {
  Json j = Header(config);
  j["config"] = config.source;
  j["parameters"] = ParametersToJson(config, r);
  j["field"] = FieldToJson(config.base);
  j["ext_field"] = FieldToJson(config.ext);
  j["retrieval_code"] = CodeToJson(config.retrieval);
  if (config.storage) j["storage_code"] = CodeToJson(*config.storage);
  if (r.plan) {
    j["response_code"] = CodeToJson(r.plan->response_code);
    Json schedule = Json::array();
    for (const auto& it : r.plan->schedule.iterations) {
      schedule.push_back(SlotsToJson(it));
    }
    j["schedule"] = schedule;
  }
  Json functions = Json::array();
  for (const auto& f : r.functions) functions.push_back(PolynomialToJson(f));
  j["functions"] = functions;
  j["data"] = MatrixToJson(r.data);

  Json iterations = Json::array();
  for (const auto& rec : r.transcript.iterations) {
    Json codewords = Json::array();
    for (const auto& c : rec.codewords) {
      codewords.push_back(SymbolsToJson(config.base, c));
    }
    Json queries = Json::array();
    Json responses = Json::array();
    for (std::size_t n = 0; n < rec.queries.size(); ++n) {
      queries.push_back(QueryToJson({n, rec.queries[n]}));
      responses.push_back(ResponseToJson(config.ext, {n, rec.responses[n]}));
    }
    Json it = {{"index", rec.index},
               {"codewords", codewords},
               {"slots", SlotsToJson(rec.slots)},
               {"queries", queries},
               {"responses", responses},
               {"decoded", SymbolsToJson(config.ext, rec.decoded)}};
    if (config.scheme == SchemeKind::kSystematic) {
      it["syndrome"] = SymbolsToJson(config.ext, rec.syndrome);
    }
    iterations.push_back(std::move(it));
  }
  j["iterations"] = iterations;
  j["values"] = MatrixToJson(r.values);
  j["accounting"] = AccountingToJson(r.transcript.accounting);
  j["rate"] = RateToJson(r.transcript.rate());
  return j;
}

Json SummaryToJson(const SessionConfig& config, const SessionResult& r) {
  Json j = Header(config);
  j["parameters"] = ParametersToJson(config, r);
  j["accounting"] = AccountingToJson(r.transcript.accounting);
  j["rate"] = RateToJson(r.transcript.rate());
  j["verified"] = r.values == DirectValues(config.ext, r.functions, r.data);
  return j;
}

std::vector<std::vector<Symbol>> ReplayDecode(const Json& transcript) {
  Require(transcript.is_object() && transcript.contains("config") &&
              transcript.contains("iterations"),
          Errc::kParse, "not a session transcript");
  const SessionConfig config = ParseSessionConfig(transcript.at("config"));
  std::optional<Matrix> h;
  if (config.scheme == SchemeKind::kSystematic) {
    SystematicConfig sys{*config.storage, config.retrieval, config.degree,
                         config.data_rows, config.ext, config.block_length,
                         config.transport};
    h = PlanSystematic(sys).parity_check;
  } else {
    h = SystematicParityCheck(config.retrieval);
  }

  std::vector<std::vector<Symbol>> out;
  for (const auto& it : transcript.at("iterations")) {
    std::vector<Symbol> responses;
    for (const auto& r : it.at("responses")) {
      const auto msg = ResponseFromJson(r, config.ext);
      Require(msg.server == responses.size(), Errc::kParse,
              "responses are not in server order");
      responses.push_back(msg.value);
    }
    const auto slots = SlotsFromJson(it.at("slots"));
    if (config.scheme == SchemeKind::kSystematic) {
      out.push_back(DecodeIteration(config.ext, responses, *h, slots).values);
    } else {
      out.push_back(DecodeReplicated(config.ext, responses, *h));
    }
  }
  return out;
}

AuditTarget SessionAuditTarget(const SessionConfig& config) {
  const QuerySpace space = SessionQuerySpace(config);
  if (config.scheme == SchemeKind::kSystematic) {
    SystematicConfig sys{*config.storage, config.retrieval, config.degree,
                         config.data_rows, config.ext, config.block_length,
                         config.transport};
    SystematicPlan plan = PlanSystematic(sys);
    return {config.retrieval, space, plan.schedule.iterations,
            plan.schedule.block_length};
  }
  ReplicatedConfig rep{config.retrieval, space, config.ext,
                       ReplicatedBlockLength(config), config.transport};
  rep.Validate();
  std::vector<std::vector<Slot>> iterations;
  for (std::size_t s = 0; s < rep.iterations(); ++s) {
    iterations.push_back(ReplicatedSlots(rep.batch(), s * rep.batch()));
  }
  return {config.retrieval, space, std::move(iterations), rep.block_length};
}

Json PrivacyReportToJson(const Field& base, const PrivacyReport& report,
                         std::size_t pmf_limit) {
  Json support = Json::array();
  if (report.support.size() <= pmf_limit) {
    for (const auto& s : report.support) support.push_back(SymbolsToJson(base, s));
  }
  const std::size_t view_len =
      report.mask_tuple.empty() ? 0 : report.mask_tuple.begin()->first.size();
  std::uint64_t outcomes = 1;
  bool fits = true;
  for (std::size_t i = 0; i < view_len && fits; ++i) {
    if (outcomes > (std::uint64_t{1} << 40) / base.order()) fits = false;
    outcomes *= base.order();
  }
  Json divergences = Json::array();
  for (const auto& d : report.divergences) divergences.push_back(FormatFraction(d));

  Json j = {{"subset", report.subset},
            {"mode", AuditModeName(report.mode)},
            {"audited_iterations", report.audited_iterations},
            {"support_size", report.support.size()},
            {"support", report.sampled_support ? "sampled support" : "full support"},
            {"draws", report.draws},
            {"mask_tuple_uniform", fits && IsUniform(report.mask_tuple, outcomes)},
            {"divergence", {{"fraction", FormatFraction(report.divergence)},
                            {"decimal", FormatDecimal(report.divergence)}}},
            {"divergences", divergences},
            {"verdict", report.independent ? "private" : "leaking"}};
  if (report.support.size() <= pmf_limit) j["requests"] = support;
  if (report.mask_tuple.size() <= pmf_limit) {
    j["mask_tuple_pmf"] = PmfToJson(base, report.mask_tuple);
  }
  if (report.mode == AuditMode::kJoint && report.joint.size() <= pmf_limit) {
    Json joint = Json::array();
    for (const auto& e : report.joint) {
      joint.push_back({{"request", e.request},
                       {"view", SymbolsToJson(base, e.view)},
                       {"p", FormatFraction(e.probability)}});
    }
    j["joint_pmf"] = joint;
  }
  return j;
}

}  // namespace starpc
