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

#include "starpc/starpc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "starpc/code.hpp"
#include "starpc/error.hpp"
#include "starpc/privacy.hpp"
#include "starpc/rate_table.hpp"
#include "starpc/session.hpp"
#include "starpc/simnet.hpp"
#include "starpc/wire.hpp"

struct starpc_session {
  starpc::SessionConfig config;
  std::optional<starpc::SessionResult> result;
};

struct starpc_code {
  starpc::LinearCode code;
};

namespace {

using starpc::Errc;
using starpc::Json;

thread_local std::string last_error;

starpc_status Record(starpc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
starpc_status Guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return STARPC_OK;
  } catch (const starpc::Error& e) {
    return Record(static_cast<starpc_status>(e.code()), e.what());
  } catch (const Json::exception& e) {
    return Record(STARPC_E_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return Record(STARPC_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Record(STARPC_E_INTERNAL, e.what());
  }
}

void RequireOut(const void* p) {
  starpc::Require(p != nullptr, Errc::kInvalidArgument, "null pointer argument");
}

Json ParseText(const char* text, const char* what) {
  starpc::Require(text != nullptr, Errc::kInvalidArgument,
                  std::string("missing ") + what);
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    starpc::Fail(Errc::kParse, std::string(what) + ": " + e.what());
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Json WithScheme(Json j, const char* scheme) {
  if (scheme == nullptr) return j;
  starpc::Require(j.is_object(), Errc::kParse, "config must be a JSON object");
  if (!j.contains("scheme")) {
    j["scheme"] = scheme;
  } else {
    starpc::Require(j.at("scheme") == scheme, Errc::kConfiguration,
                    "config is for the " + j.at("scheme").dump() +
                        " scheme, command expects \"" + scheme + "\"");
  }
  return j;
}

}  // namespace

extern "C" {

const char* starpc_version(void) { return starpc::kToolVersion; }

const char* starpc_status_name(starpc_status status) {
  if (status == STARPC_OK) return "ok";
  return starpc::ErrcName(static_cast<Errc>(status)).data();
}

const char* starpc_last_error(void) { return last_error.c_str(); }

void starpc_string_free(char* s) { std::free(s); }

starpc_status starpc_session_create(const char* config_json, const char* scheme,
                                    starpc_session** out) {
  return Guarded([&] {
    RequireOut(out);
    *out = nullptr;
    Json j = WithScheme(ParseText(config_json, "session config"), scheme);
    *out = new starpc_session{starpc::ParseSessionConfig(j), std::nullopt};
  });
}

starpc_status starpc_session_set_seed(starpc_session* session, uint64_t seed) {
  return Guarded([&] {
    RequireOut(session);
    starpc::SetSeed(session->config, seed);
    session->result.reset();
  });
}

starpc_status starpc_session_run(starpc_session* session) {
  return Guarded([&] {
    RequireOut(session);
    session->result = starpc::RunSession(session->config);
  });
}

starpc_status starpc_session_transcript(const starpc_session* session,
                                        char** json_out) {
  return Guarded([&] {
    RequireOut(session);
    RequireOut(json_out);
    starpc::Require(session->result.has_value(), Errc::kInvalidArgument,
                    "session has not been run");
    *json_out =
        Dup(starpc::TranscriptToJson(session->config, *session->result).dump(2));
  });
}

starpc_status starpc_session_summary(const starpc_session* session,
                                     char** json_out) {
  return Guarded([&] {
    RequireOut(session);
    RequireOut(json_out);
    starpc::Require(session->result.has_value(), Errc::kInvalidArgument,
                    "session has not been run");
    *json_out =
        Dup(starpc::SummaryToJson(session->config, *session->result).dump(2));
  });
}

void starpc_session_destroy(starpc_session* session) { delete session; }

starpc_status starpc_replay(const char* transcript_json, char** json_out) {
  return Guarded([&] {
    RequireOut(json_out);
    const Json t = ParseText(transcript_json, "transcript");
    const auto decoded = starpc::ReplayDecode(t);
    const auto ext = starpc::FieldFromJson(t.at("ext_field"));
    Json rows = Json::array();
    bool matches = decoded.size() == t.at("iterations").size();
    for (std::size_t s = 0; s < decoded.size(); ++s) {
      Json row = starpc::SymbolsToJson(ext, decoded[s]);
      if (matches) matches = row == t.at("iterations")[s].at("decoded");
      rows.push_back(std::move(row));
    }
    *json_out = Dup(Json{{"decoded", rows}, {"matches", matches}}.dump(2));
  });
}

starpc_status starpc_code_from_json(const char* json, starpc_code** out) {
  return Guarded([&] {
    RequireOut(out);
    *out = nullptr;
    *out = new starpc_code{starpc::CodeFromJson(ParseText(json, "code"))};
  });
}

starpc_status starpc_code_star(const starpc_code* a, const starpc_code* b,
                               starpc_code** out) {
  return Guarded([&] {
    RequireOut(a);
    RequireOut(b);
    RequireOut(out);
    *out = new starpc_code{starpc::StarProduct(a->code, b->code)};
  });
}

starpc_status starpc_code_star_power(const starpc_code* c, int g,
                                     starpc_code** out) {
  return Guarded([&] {
    RequireOut(c);
    RequireOut(out);
    *out = new starpc_code{starpc::StarPower(c->code, g)};
  });
}

starpc_status starpc_code_min_distance(const starpc_code* c, uint64_t guard,
                                       size_t* out) {
  return Guarded([&] {
    RequireOut(c);
    RequireOut(out);
    *out = c->code.min_distance(guard == 0 ? starpc::kDefaultCodewordGuard
                                           : guard);
  });
}

starpc_status starpc_code_to_json(const starpc_code* c, char** json_out) {
  return Guarded([&] {
    RequireOut(c);
    RequireOut(json_out);
    *json_out = Dup(starpc::CodeToJson(c->code).dump(2));
  });
}

void starpc_code_destroy(starpc_code* c) { delete c; }

starpc_status starpc_audit(const char* config_json, const char* options_json,
                           char** json_out) {
  return Guarded([&] {
    RequireOut(json_out);
    const starpc::SessionConfig config =
        starpc::ParseSessionConfig(ParseText(config_json, "session config"));
    const Json opts = options_json == nullptr
                          ? Json::object()
                          : ParseText(options_json, "audit options");
    starpc::Require(opts.is_object(), Errc::kParse,
                    "audit options must be a JSON object");

    starpc::AuditOptions options;
    options.guard = opts.value("guard", starpc::kDefaultAuditGuard);
    options.seed = opts.value("seed", config.seed);
    const bool expect_leak = opts.value("expect_leak", false);

    std::vector<std::vector<std::size_t>> subsets;
    if (opts.contains("subset")) {
      subsets.push_back(opts.at("subset").get<std::vector<std::size_t>>());
    } else {
      const std::size_t t =
          opts.value("all_subsets", config.retrieval.dimension());
      subsets = starpc::Subsets(config.servers(), t);
      starpc::Require(!subsets.empty(), Errc::kInvalidArgument,
                      "no subsets of size " + std::to_string(t));
    }

    const starpc::AuditTarget target = starpc::SessionAuditTarget(config);
    Json reports = Json::array();
    bool all_private = true;
    for (const auto& subset : subsets) {
      const auto report = starpc::AuditPrivacy(target, subset, options);
      all_private = all_private && report.independent;
      reports.push_back(starpc::PrivacyReportToJson(config.base, report));
    }
    Json out = {{"tool", {{"name", starpc::kToolName},
                          {"version", starpc::kToolVersion}}},
                {"seed", config.seed},
                {"config_hash", starpc::ConfigHash(config)},
                {"scheme", starpc::SchemeName(config.scheme)},
                {"guard", options.guard},
                {"expect_leak", expect_leak},
                {"all_private", all_private},
                {"pass", expect_leak ? !all_private : all_private},
                {"reports", reports}};
    *json_out = Dup(out.dump(2));
  });
}

starpc_status starpc_rate_table(const char* spec_json, int csv, char** out) {
  return Guarded([&] {
    RequireOut(out);
    const Json j = spec_json == nullptr ? Json::object()
                                        : ParseText(spec_json, "rate-table spec");
    starpc::Require(j.is_object(), Errc::kParse,
                    "rate-table spec must be a JSON object");
    starpc::RateTableSpec spec;
    auto range = [&](const char* key, starpc::Range& r) {
      if (!j.contains(key)) return;
      const auto& v = j.at(key);
      if (v.is_array()) {
        const auto lohi = v.get<std::vector<std::size_t>>();
        starpc::Require(lohi.size() == 2 && lohi[0] <= lohi[1], Errc::kParse,
                        std::string("range '") + key + "' must be [lo, hi]");
        r = {lohi[0], lohi[1]};
      } else {
        const auto x = v.get<std::size_t>();
        r = {x, x};
      }
    };
    spec.p = j.value("p", spec.p);
    spec.data_rows = j.value("M", spec.data_rows);
    spec.seed = j.value("seed", spec.seed);
    range("N", spec.n);
    range("K", spec.k);
    range("T", spec.t);
    range("G", spec.g);
    const auto rows = starpc::RateTable(spec);
    *out = Dup(csv ? starpc::RateTableCsv(rows)
                   : starpc::RateTableJson(rows).dump(2));
  });
}

starpc_status starpc_encode(const char* config_json, char** json_out) {
  return Guarded([&] {
    RequireOut(json_out);
    const starpc::SessionConfig config =
        starpc::ParseSessionConfig(ParseText(config_json, "session config"));
    const starpc::LinearCode storage =
        config.storage ? *config.storage
                       : starpc::RepetitionCode(config.servers(), config.base);
    const starpc::Matrix data = starpc::SessionData(config);
    const auto shares = starpc::EncodeStorage(data, storage);
    Json js = Json::array();
    for (const auto& s : shares) {
      js.push_back({{"server", s.index},
                    {"share", starpc::SymbolsToJson(config.ext, s.share)}});
    }
    Json out = {{"tool", {{"name", starpc::kToolName},
                          {"version", starpc::kToolVersion}}},
                {"seed", config.seed},
                {"config_hash", starpc::ConfigHash(config)},
                {"ext_field", starpc::FieldToJson(config.ext)},
                {"storage_code", starpc::CodeToJson(storage)},
                {"data", starpc::MatrixToJson(data)},
                {"shares", js}};
    *json_out = Dup(out.dump(2));
  });
}

}  // extern "C"
