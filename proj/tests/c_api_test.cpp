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

#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

using Json = nlohmann::json;

std::string ReadConfig(const std::string& name) {
  std::ifstream in(std::string(STARPC_CONFIG_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Takes ownership of a string returned by the library.
Json Take(char* s) {
  Json j = Json::parse(s);
  starpc_string_free(s);
  return j;
}

TEST(CApiTest, VersionAndStatusNames) {
  EXPECT_STREQ(starpc_version(), "0.1.0");
  EXPECT_STREQ(starpc_status_name(STARPC_OK), "ok");
  EXPECT_STREQ(starpc_status_name(STARPC_E_CONFIGURATION), "configuration");
  EXPECT_STREQ(starpc_status_name(STARPC_E_ENUMERATION_GUARD), "enumeration_guard");
}

TEST(CApiTest, SessionLifecycle) {
  starpc_session* s = nullptr;
  ASSERT_EQ(starpc_session_create(ReadConfig("replicated_gf4.json").c_str(), nullptr, &s),
            STARPC_OK);
  char* out = nullptr;
  EXPECT_EQ(starpc_session_summary(s, &out), STARPC_E_INVALID_ARGUMENT);
  EXPECT_NE(std::string(starpc_last_error()), "");
  ASSERT_EQ(starpc_session_run(s), STARPC_OK);
  ASSERT_EQ(starpc_session_summary(s, &out), STARPC_OK);
  const Json summary = Take(out);
  EXPECT_EQ(summary["rate"]["fraction"], "1/3");
  EXPECT_EQ(summary["verified"], true);

  ASSERT_EQ(starpc_session_transcript(s, &out), STARPC_OK);
  const std::string first(out);
  starpc_string_free(out);
  ASSERT_EQ(starpc_session_set_seed(s, 1), STARPC_OK);
  ASSERT_EQ(starpc_session_run(s), STARPC_OK);
  ASSERT_EQ(starpc_session_transcript(s, &out), STARPC_OK);
  EXPECT_EQ(first, std::string(out));
  starpc_string_free(out);

  ASSERT_EQ(starpc_replay(first.c_str(), &out), STARPC_OK);
  EXPECT_EQ(Take(out)["matches"], true);
  starpc_session_destroy(s);
  starpc_session_destroy(nullptr);
}

TEST(CApiTest, SchemeHintMustAgree) {
  starpc_session* s = nullptr;
  EXPECT_EQ(starpc_session_create(ReadConfig("replicated_gf4.json").c_str(),
                                  "systematic", &s),
            STARPC_E_CONFIGURATION);
  EXPECT_EQ(s, nullptr);
  EXPECT_EQ(starpc_session_create("{", nullptr, &s), STARPC_E_PARSE);
  EXPECT_EQ(starpc_session_create(nullptr, nullptr, &s),
            STARPC_E_INVALID_ARGUMENT);
}

TEST(CApiTest, CodeHandles) {
  starpc_code* a = nullptr;
  starpc_code* b = nullptr;
  starpc_code* e = nullptr;
  ASSERT_EQ(starpc_code_from_json(
                R"({"kind":"rs","field":{"p":7},"K":2,"alpha":["0","1","2","3","4","5","6"]})",
                &a),
            STARPC_OK)
      << starpc_last_error();
  ASSERT_EQ(starpc_code_star_power(a, 2, &b), STARPC_OK);
  ASSERT_EQ(starpc_code_star(a, b, &e), STARPC_OK);
  std::size_t d = 0;
  ASSERT_EQ(starpc_code_min_distance(e, 0, &d), STARPC_OK);
  EXPECT_EQ(d, 4U);
  ASSERT_EQ(starpc_code_min_distance(b, 0, &d), STARPC_OK);
  EXPECT_EQ(d, 5U);
  char* out = nullptr;
  ASSERT_EQ(starpc_code_to_json(e, &out), STARPC_OK);
  EXPECT_EQ(Take(out)["kind"], "rs");
  starpc_code_destroy(a);
  starpc_code_destroy(b);
  starpc_code_destroy(e);

  ASSERT_EQ(starpc_code_from_json(
                R"({"field":{"p":11},"generator":[["1","2","3"],["0","1","0"]]})", &a),
            STARPC_OK);
  EXPECT_EQ(starpc_code_min_distance(a, 100, &d), STARPC_E_ENUMERATION_GUARD);
  ASSERT_EQ(starpc_code_min_distance(a, 0, &d), STARPC_OK);
  EXPECT_EQ(d, 1U);
  starpc_code_destroy(a);
  EXPECT_EQ(starpc_code_from_json(R"({"kind":"generic"})", &a), STARPC_E_PARSE);
}

TEST(CApiTest, Audit) {
  const std::string cfg = ReadConfig("replicated_gf4_audit.json");
  char* out = nullptr;
  ASSERT_EQ(starpc_audit(cfg.c_str(), nullptr, &out), STARPC_OK) << starpc_last_error();
  Json j = Take(out);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["all_private"], true);
  EXPECT_EQ(j["reports"].size(), 3U);

  ASSERT_EQ(starpc_audit(cfg.c_str(), R"({"all_subsets": 3, "expect_leak": true})",
                         &out),
            STARPC_OK);
  j = Take(out);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["all_private"], false);

  ASSERT_EQ(starpc_audit(cfg.c_str(), R"({"subset": [0, 1, 2]})", &out), STARPC_OK);
  EXPECT_EQ(Take(out)["pass"], false);
  EXPECT_EQ(starpc_audit(cfg.c_str(), R"({"subset": [0, 1], "guard": 2})", &out),
            STARPC_E_ENUMERATION_GUARD);
}

TEST(CApiTest, RateTable) {
  char* out = nullptr;
  ASSERT_EQ(starpc_rate_table(R"({"p": 11, "N": [8, 8], "K": [3, 3], "T": [2, 2], "G": [2, 2]})",
                              1, &out),
            STARPC_OK)
      << starpc_last_error();
  const std::string csv(out);
  starpc_string_free(out);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "N,K,T,G,F,S,rate_formula,rate_measured,rate_decimal,scheme");
  EXPECT_NE(csv.find("8,3,2,2,2,3,1/4,1/4,"), std::string::npos);
}

TEST(CApiTest, Encode) {
  char* out = nullptr;
  ASSERT_EQ(starpc_encode(ReadConfig("rep_k1.json").c_str(), &out), STARPC_OK)
      << starpc_last_error();
  const Json j = Take(out);
  ASSERT_TRUE(j.contains("shares"));
  ASSERT_EQ(j["shares"].size(), 3U);
  EXPECT_EQ(j["shares"][0]["share"], j["shares"][2]["share"]);
}

}  // namespace
