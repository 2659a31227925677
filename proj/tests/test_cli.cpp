// Copyright 2026 The lrc-shorten Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "lrc/spec_file.hpp"
#include "lrc/verify.hpp"

namespace lrc {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int status;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(LRC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("lrc_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    spec = (dir / "code.json").string();
    ASSERT_EQ(run("construct --q 13 --n 10 --k 5 --r 3 --out " + spec).status, 0);
  }
  void TearDown() override { fs::remove_all(dir); }

  fs::path dir;
  std::string spec;
};

TEST_F(CliTest, Params) {
  const auto ok = run("params --q 13 --n 10 --k 5 --r 3");
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("d=4"), std::string::npos);
  EXPECT_NE(ok.out.find("improved bound tight"), std::string::npos);

  const auto json = run("params --q 13 --n 10 --k 5 --r 3 --json");
  EXPECT_NE(json.out.find("\"d_improved\": 4"), std::string::npos);

  EXPECT_EQ(run("params --q 13 --n 9 --k 4 --r 3").status, 2);
  EXPECT_EQ(run("params --q 13 --n 10 --k 8 --r 3").status, 2);
  EXPECT_EQ(run("params --q 13 --n 10").status, 2);
}

TEST_F(CliTest, Bounds) {
  const auto out = run("bounds --n 10 --k 4 --r 3 --json");
  EXPECT_EQ(out.status, 0);
  EXPECT_NE(out.out.find("\"d_singleton\": 6"), std::string::npos);
  EXPECT_NE(out.out.find("NOT_APPLICABLE"), std::string::npos);
}

TEST_F(CliTest, ConstructIsByteIdentical) {
  const auto other = (dir / "again.json").string();
  ASSERT_EQ(run("construct --q 13 --n 10 --k 5 --r 3 --out " + other).status, 0);
  EXPECT_EQ(slurp(spec), slurp(other));
  EXPECT_EQ(run("construct --q 13 --n 10 --k 5 --r 3").out, slurp(spec));
  EXPECT_EQ(run("construct --q 13 --n 9 --k 5 --r 3 --out " + other).status, 2);
}

TEST_F(CliTest, Encode) {
  const auto out = run("encode --spec " + spec + " --message '0 0 0 0 1'");
  EXPECT_EQ(out.status, 0);
  // Evaluation points 1 2 3 4 5 6 8 10 11 12 of x^2 + 10x + 11.
  EXPECT_EQ(out.out, "9 9 11 2 8 3 12 3 8 2\n");
  EXPECT_EQ(run("encode --spec " + spec + " --message '0 0 0 0 0'").out, "0 0 0 0 0 0 0 0 0 0\n");
  EXPECT_EQ(run("encode --spec " + spec + " --message '0 0 0 1'").status, 2);
  EXPECT_EQ(run("encode --spec " + spec + " --message '0 0 0 0 13'").status, 2);
  EXPECT_EQ(run("encode --spec " + spec + " --message '0 0 x 0 1'").status, 2);
  EXPECT_EQ(run("encode --spec /nonexistent.json --message '0 0 0 0 1'").status, 2);
}

TEST_F(CliTest, Repair) {
  const auto out = run("repair --spec " + spec + " --codeword '9 9 11 ? 8 3 12 3 8 2' --index 4");
  EXPECT_EQ(out.status, 0);
  EXPECT_NE(out.out.find("helper 6 alpha=6 value=3"), std::string::npos);
  EXPECT_NE(out.out.find("implicit-zero alpha=7"), std::string::npos);
  EXPECT_NE(out.out.find("implicit-zero alpha=9"), std::string::npos);
  EXPECT_NE(out.out.find("values used: 3"), std::string::npos);
  EXPECT_NE(out.out.find("repaired: 2"), std::string::npos);
  EXPECT_EQ(run("repair --spec " + spec + " --codeword '9 9 11 ? 8 3 12 3 8 2' --index 11").status, 2);
}

TEST_F(CliTest, Decode) {
  const auto out = run("decode --spec " + spec + " --received '9 ? 11 ? 8 3 ? 3 8 2'");
  EXPECT_EQ(out.status, 0);
  EXPECT_EQ(out.out, "0 0 0 0 1\n");
  EXPECT_EQ(run("decode --spec " + spec + " --received '9 ? 11'").status, 2);

  // Erase the support of a weight-4 codeword: both it and zero fit.
  const auto code = load_spec_file(spec);
  std::mt19937_64 rng(2);
  Codeword word;
  do {
    word = encode(random_message(code, rng), code);
  } while (std::count_if(word.begin(), word.end(), [](Element x) { return !x.is_zero(); }) != 4);
  std::string received;
  for (Element x : word) received += x.is_zero() ? "0 " : "? ";
  EXPECT_EQ(run("decode --spec " + spec + " --received '" + received + "'").status, 3);
}

TEST_F(CliTest, Verify) {
  const auto ok = run("verify --spec " + spec);
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("\"distance_found\": 4"), std::string::npos);
  EXPECT_NE(ok.out.find("\"all_passed\": true"), std::string::npos);

  EXPECT_EQ(run("verify --spec " + spec + " --budget 1000").status, 2);

  // Duplicate the first generator row into the second: the file still has a
  // well-formed matrix, but the code it describes has lost a dimension.
  auto doc = nlohmann::ordered_json::parse(slurp(spec));
  doc["generator_matrix"][1] = doc["generator_matrix"][0];
  const std::string text = doc.dump();
  const auto tampered = (dir / "tampered.json").string();
  std::ofstream(tampered) << text;
  const auto bad = run("verify --spec " + tampered);
  EXPECT_EQ(bad.status, 3);
  EXPECT_NE(bad.out.find("\"rank_ok\": false"), std::string::npos);
}

}  // namespace
}  // namespace lrc
