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

// starpc command-line front end. Talks to the library only through the C
// interface.
//
// Exit codes: 0 success, 1 audit verdict failed, 2 error (JSON on stderr).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starpc/starpc.h"

namespace {

using Json = nlohmann::json;

struct CliError {
  starpc_status status;
  std::string message;
};

// Owns a string returned by the C API.
struct CString {
  char* p = nullptr;
  ~CString() { starpc_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

void Check(starpc_status s) {
  if (s != STARPC_OK) throw CliError{s, starpc_last_error()};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{STARPC_E_IO, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void Emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  if (!out) throw CliError{STARPC_E_IO, "cannot write '" + path + "'"};
}

// Config text with the seed replaced when one was given on the command line.
std::string ConfigText(const std::string& path, std::optional<std::uint64_t> seed) {
  std::string text = ReadFile(path);
  if (!seed) return text;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw CliError{STARPC_E_PARSE, "config '" + path + "': " + e.what()};
  }
  if (!j.is_object()) {
    throw CliError{STARPC_E_PARSE, "config must be a JSON object"};
  }
  j["seed"] = *seed;
  return j.dump();
}

// "8" or "4:8".
Json ParseRange(const std::string& text, const char* name) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) return std::stoull(text);
    return Json::array({std::stoull(text.substr(0, colon)),
                        std::stoull(text.substr(colon + 1))});
  } catch (const std::exception&) {
    throw CliError{STARPC_E_PARSE,
                   std::string("--") + name + " expects N or LO:HI, got '" +
                       text + "'"};
  }
}

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string summary_out;
  std::string format = "json";
  std::optional<std::size_t> all_subsets;
  std::vector<std::size_t> subset;
  bool expect_leak = false;
  std::optional<std::uint64_t> guard;
  std::uint32_t p = 11;
  std::size_t m = 1;
  std::string n = "8", k = "1:3", t = "1:2", g = "1:2";
  std::string transcript;
};

int RunSession(const Options& o, const char* scheme) {
  const std::string text = ReadFile(o.config);
  starpc_session* session = nullptr;
  Check(starpc_session_create(text.c_str(), scheme, &session));
  struct Closer {
    starpc_session* s;
    ~Closer() { starpc_session_destroy(s); }
  } closer{session};
  if (o.seed) Check(starpc_session_set_seed(session, *o.seed));
  Check(starpc_session_run(session));
  CString transcript, summary;
  Check(starpc_session_transcript(session, &transcript.p));
  Check(starpc_session_summary(session, &summary.p));
  if (!o.out.empty()) Emit(transcript.str(), o.out);
  Emit(summary.str(), o.summary_out);
  return 0;
}

int Audit(const Options& o) {
  const std::string text = ConfigText(o.config, o.seed);
  Json opts = Json::object();
  if (!o.subset.empty()) opts["subset"] = o.subset;
  if (o.all_subsets) opts["all_subsets"] = *o.all_subsets;
  if (o.guard) opts["guard"] = *o.guard;
  opts["expect_leak"] = o.expect_leak;
  CString report;
  Check(starpc_audit(text.c_str(), opts.dump().c_str(), &report.p));
  Emit(report.str(), o.out);
  return Json::parse(report.str()).at("pass").get<bool>() ? 0 : 1;
}

int RateTable(const Options& o) {
  Json spec = {{"p", o.p},
               {"M", o.m},
               {"N", ParseRange(o.n, "n")},
               {"K", ParseRange(o.k, "k")},
               {"T", ParseRange(o.t, "t")},
               {"G", ParseRange(o.g, "g")},
               {"seed", o.seed.value_or(0)}};
  CString table;
  Check(starpc_rate_table(spec.dump().c_str(), o.format == "csv", &table.p));
  Emit(table.str(), o.out);
  return 0;
}

// Config: {"a": code, "b": code} for a * b, or {"code": code, "power": G}.
int CodeStar(const Options& o) {
  Json j;
  try {
    j = Json::parse(ReadFile(o.config));
  } catch (const Json::exception& e) {
    throw CliError{STARPC_E_PARSE, std::string("code-star config: ") + e.what()};
  }
  auto load = [&](const char* key) {
    if (!j.contains(key)) {
      throw CliError{STARPC_E_PARSE,
                     std::string("code-star config needs '") + key + "'"};
    }
    starpc_code* c = nullptr;
    Check(starpc_code_from_json(j.at(key).dump().c_str(), &c));
    return c;
  };
  std::vector<starpc_code*> owned;
  struct Closer {
    std::vector<starpc_code*>& v;
    ~Closer() {
      for (auto* c : v) starpc_code_destroy(c);
    }
  } closer{owned};

  starpc_code* result = nullptr;
  if (j.contains("power")) {
    owned.push_back(load("code"));
    Check(starpc_code_star_power(owned[0], j.at("power").get<int>(), &result));
  } else {
    owned.push_back(load("a"));
    owned.push_back(load("b"));
    Check(starpc_code_star(owned[0], owned[1], &result));
  }
  owned.push_back(result);
  std::size_t distance = 0;
  Check(starpc_code_min_distance(result, o.guard.value_or(0), &distance));
  CString code;
  Check(starpc_code_to_json(result, &code.p));
  Json out = Json::parse(code.str());
  const std::size_t n = out.at("N"), k = out.at("K");
  Json report = {{"tool", {{"name", "starpc"}, {"version", starpc_version()}}},
                 {"code", out},
                 {"min_distance", distance},
                 {"mds", distance == n - k + 1}};
  Emit(report.dump(2), o.out);
  return 0;
}

int Encode(const Options& o) {
  const std::string text = ConfigText(o.config, o.seed);
  CString shares;
  Check(starpc_encode(text.c_str(), &shares.p));
  Emit(shares.str(), o.out);
  return 0;
}

int Replay(const Options& o) {
  const std::string text = ReadFile(o.transcript);
  CString result;
  Check(starpc_replay(text.c_str(), &result.p));
  Emit(result.str(), o.out);
  return Json::parse(result.str()).at("matches").get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Private computation over coded storage"};
  app.set_version_flag("--version", std::string(starpc_version()));
  app.require_subcommand(1);
  Options o;

  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("--config", o.config, "Config JSON")->required()
        ->check(CLI::ExistingFile);
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "Override the config seed");
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", o.out, "Output path (default stdout)");
  };

  auto* rep = app.add_subcommand("run-replicated", "Run the replicated scheme");
  auto* sys = app.add_subcommand("run-systematic", "Run the systematic scheme");
  for (auto* cmd : {rep, sys}) {
    add_config(cmd);
    add_seed(cmd);
    cmd->add_option("--out", o.out, "Transcript path");
    cmd->add_option("--summary", o.summary_out, "Summary path (default stdout)");
  }

  auto* audit = app.add_subcommand("audit", "Exact privacy audit");
  add_config(audit);
  add_seed(audit);
  add_out(audit);
  auto* all = audit->add_option("--all-subsets", o.all_subsets,
                                "Audit every colluding subset of this size");
  audit->add_option("--subset", o.subset, "One colluding subset, zero-based")
      ->delimiter(',')
      ->excludes(all);
  audit->add_flag("--expect-leak", o.expect_leak,
                  "Pass when some subset leaks");
  audit->add_option("--guard-limit", o.guard, "Enumeration bound");

  auto* rate = app.add_subcommand("rate-table", "Formula vs measured rates");
  add_seed(rate);
  add_out(rate);
  rate->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  rate->add_option("--p", o.p, "Field characteristic");
  rate->add_option("--m", o.m, "Data height M");
  rate->add_option("--n", o.n, "N or LO:HI");
  rate->add_option("--k", o.k, "K or LO:HI");
  rate->add_option("--t", o.t, "T or LO:HI");
  rate->add_option("--g", o.g, "G or LO:HI");

  auto* star = app.add_subcommand("code-star", "Star product or power of codes");
  add_config(star);
  add_out(star);
  star->add_option("--guard-limit", o.guard, "Codeword enumeration bound");

  auto* encode = app.add_subcommand("encode", "Storage shares for a config");
  add_config(encode);
  add_seed(encode);
  add_out(encode);

  auto* replay = app.add_subcommand("replay", "Re-decode a transcript");
  replay->add_option("--transcript", o.transcript)->required()
      ->check(CLI::ExistingFile);
  add_out(replay);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (rep->parsed()) return RunSession(o, "replicated");
    if (sys->parsed()) return RunSession(o, "systematic");
    if (audit->parsed()) return Audit(o);
    if (rate->parsed()) return RateTable(o);
    if (star->parsed()) return CodeStar(o);
    if (encode->parsed()) return Encode(o);
    if (replay->parsed()) return Replay(o);
  } catch (const CliError& e) {
    Json err = {{"error",
                 {{"status", static_cast<int>(e.status)},
                  {"code", starpc_status_name(e.status)},
                  {"message", e.message}}}};
    std::cerr << err.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    Json err = {{"error",
                 {{"status", static_cast<int>(STARPC_E_INTERNAL)},
                  {"code", "internal"},
                  {"message", e.what()}}}};
    std::cerr << err.dump() << '\n';
    return 2;
  }
  return 2;
}
