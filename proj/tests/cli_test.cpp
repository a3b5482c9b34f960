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


// Drives the built command-line tool as a subprocess.

#include <sys/wait.h>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::create_directories(dir_);
  }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string Config(const std::string& name) {
    return std::string(STARPC_CONFIG_DIR) + "/" + name;
  }

  // Exit status of `starpc <args>`, with stdout and stderr captured.
  int Run(const std::string& args) {
    const std::string cmd = std::string(STARPC_CLI) + " " + args + " >" +
                            Path("stdout") + " 2>" + Path("stderr");
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  }

  static std::string Slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string Stdout() const { return Slurp(Path("stdout")); }
  std::string Stderr() const { return Slurp(Path("stderr")); }

  fs::path dir_;
};

TEST_F(CliTest, RunReplicatedWritesSummaryAndTranscript) {
  ASSERT_EQ(Run("run-replicated --config " + Config("replicated_gf4.json") + " --out " +
                Path("t.json")),
            0)
      << Stderr();
  const Json summary = Json::parse(Stdout());
  EXPECT_EQ(summary["rate"]["fraction"], "1/3");
  EXPECT_EQ(summary["verified"], true);
  EXPECT_TRUE(Json::parse(Slurp(Path("t.json"))).contains("iterations"));
}

TEST_F(CliTest, SameSeedGivesIdenticalFiles) {
  const std::string base = "run-systematic --config " + Config("systematic_gf17.json") +
                           " --seed 9 --summary " + Path("s%d.json") + " --out " +
                           Path("t%d.json");
  auto with = [&](int i) {
    std::string a = base;
    for (auto pos = a.find("%d"); pos != std::string::npos; pos = a.find("%d")) {
      a.replace(pos, 2, std::to_string(i));
    }
    return a;
  };
  ASSERT_EQ(Run(with(1)), 0) << Stderr();
  ASSERT_EQ(Run(with(2)), 0) << Stderr();
  EXPECT_EQ(Slurp(Path("t1.json")), Slurp(Path("t2.json")));
  EXPECT_EQ(Slurp(Path("s1.json")), Slurp(Path("s2.json")));
  EXPECT_EQ(Json::parse(Slurp(Path("t1.json")))["seed"], 9);
}

TEST_F(CliTest, MalformedConfigExitsTwo) {
  {
    std::ofstream out(Path("bad.json"));
    out << "{\"scheme\": \"replicated\", \"N\": ";
  }
  EXPECT_EQ(Run("run-replicated --config " + Path("bad.json")), 2);
  const Json err = Json::parse(Stderr());
  EXPECT_EQ(err["error"]["code"], "parse");
  EXPECT_EQ(Run("run-replicated --config " + Path("missing.json")), 2);
  EXPECT_EQ(Run("run-systematic --config " + Config("replicated_gf4.json")), 2);
  EXPECT_EQ(Json::parse(Stderr())["error"]["code"], "configuration");
  EXPECT_EQ(Run("no-such-command"), 2);
}

TEST_F(CliTest, AuditExitCodes) {
  EXPECT_EQ(Run("audit --config " + Config("replicated_gf4_audit.json")), 0) << Stderr();
  EXPECT_EQ(Json::parse(Stdout())["all_private"], true);
  EXPECT_EQ(Run("audit --config " + Config("replicated_gf4_audit.json") +
                " --subset 0,1,2"),
            1);
  EXPECT_EQ(Run("audit --config " + Config("replicated_gf4_audit.json") +
                " --all-subsets 3 --expect-leak"),
            0);
  EXPECT_EQ(Run("audit --config " + Config("replicated_gf4_audit.json") +
                " --guard-limit 2"),
            2);
  EXPECT_EQ(Json::parse(Stderr())["error"]["code"], "enumeration_guard");
}

TEST_F(CliTest, RateTableCsv) {
  ASSERT_EQ(Run("rate-table --format csv --p 11 --n 8 --k 3 --t 2 --g 1:2"), 0)
      << Stderr();
  const std::string csv = Stdout();
  EXPECT_NE(csv.find("8,3,2,1,3,"), std::string::npos);
  EXPECT_NE(csv.find("8,3,2,2,2,3,1/4,1/4,"), std::string::npos);
  EXPECT_EQ(Run("rate-table --n 8:x"), 2);
}

TEST_F(CliTest, CodeStarAndReplay) {
  ASSERT_EQ(Run("code-star --config " + Config("star_rs.json")), 0) << Stderr();
  const Json star = Json::parse(Stdout());
  EXPECT_EQ(star["min_distance"], 4);
  EXPECT_EQ(star["mds"], true);

  ASSERT_EQ(Run("run-systematic --config " + Config("rs_gf11.json") + " --out " +
                Path("t.json")),
            0);
  EXPECT_EQ(Run("replay --transcript " + Path("t.json")), 0);
  EXPECT_EQ(Json::parse(Stdout())["matches"], true);

  Json t = Json::parse(Slurp(Path("t.json")));
  auto& v = t["iterations"][0]["responses"][0]["value"];
  v = v.get<std::string>() == "0" ? "1" : "0";
  {
    std::ofstream out(Path("t2.json"));
    out << t.dump();
  }
  EXPECT_EQ(Run("replay --transcript " + Path("t2.json")), 1);
}

TEST_F(CliTest, Version) {
  EXPECT_EQ(Run("--version"), 0);
  EXPECT_NE(Stdout().find("0.1.0"), std::string::npos);
}

}  // namespace
