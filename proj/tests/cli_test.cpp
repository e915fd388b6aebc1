/*
 * Copyright 2026 The Remetrica Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "remetrica/cli/commands.hpp"
#include "remetrica/cli/document.hpp"

namespace remetrica::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("remetrica_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  std::string ifs(const std::string& name, const std::string& maps) {
    return write(name, R"({"domain": {"dim": 1, "lower": [0], "upper": [1]}, "maps": [)" + maps + "]}");
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir_;
};

const char* kIdentity = R"({"type": "affine", "A": [[1]], "b": [0]})";
const char* kConstant = R"({"type": "affine", "A": [[0]], "b": [0.5]})";
const char* kSqrt = R"({"type": "power", "p": 0.5})";
const char* kHalf = R"({"type": "affine", "A": [[0.5]], "b": [0]})";
const char* kThird = R"({"type": "affine", "A": [[0.3333333333333333]], "b": [0]})";
const char* kThirdShift = R"({"type": "affine", "A": [[0.3333333333333333]], "b": [0.6666666666666666]})";

TEST_F(CliTest, RemetricExamples) {
  const auto id = run_cli({"remetric", ifs("id.json", kIdentity), "--epsilon", "1", "--depth", "10", "--x", "0", "--y", "0.2"});
  ASSERT_EQ(id.code, kExitOk) << id.err;
  const json r = id.parsed()["records"][0];
  EXPECT_NEAR(r["lower"].get<double>(), 0.3998046875, 1e-15);
  EXPECT_TRUE(r["exact"].get<bool>());

  const auto c = run_cli({"remetric", ifs("c.json", kConstant), "--epsilon", "1", "--depth", "5", "--x", "0.1", "--y", "0.7"});
  EXPECT_NEAR(c.parsed()["records"][0]["lower"].get<double>(), 0.6, 1e-15);

  const auto sq = run_cli({"remetric", ifs("sq.json", kSqrt), "--epsilon", "1", "--depth", "3", "--x", "0", "--y", "0.25"});
  EXPECT_NEAR(sq.parsed()["records"][0]["lower"].get<double>(), 0.78189, 5e-6);
}

TEST_F(CliTest, RemetricPairsFileAndTailTolerance) {
  const std::string doc = ifs("sh.json", std::string(kSqrt) + "," + kHalf);
  const std::string pairs = write("pairs.json", "[[[0], [0.25]], [[0.5], [0.75]]]");
  const auto res = run_cli({"remetric", doc, "--epsilon", "1", "--tail-tol", "1e-3", "--pairs", pairs});
  ASSERT_EQ(res.code, kExitOk) << res.err;
  const json j = res.parsed();
  EXPECT_EQ(j["depth"].get<int>(), 10);
  EXPECT_LE(j["tail"].get<double>(), 1e-3);
  ASSERT_EQ(j["records"].size(), 2U);
  for (const auto& r : j["records"]) EXPECT_LE(r["lower"].get<double>(), r["upper"].get<double>());
}

TEST_F(CliTest, VerifyPassesForConstantAndIdentity) {
  const auto c = run_cli({"verify", ifs("c.json", kConstant), "--epsilon", "1", "--depth", "10", "--samples", "30"});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  EXPECT_TRUE(c.parsed()["pass"].get<bool>());
  EXPECT_EQ(c.parsed()["maps"][0]["max_ratio"].get<double>(), 0.0);

  const auto id = run_cli({"verify", ifs("id.json", kIdentity), "--epsilon", "0.1", "--samples", "30"});
  ASSERT_EQ(id.code, kExitOk) << id.err;
  EXPECT_NEAR(id.parsed()["maps"][0]["max_ratio"].get<double>(), 1.0, 1e-5);
}

TEST_F(CliTest, LipschitzSqrtBlowsUp) {
  const auto res = run_cli({"lipschitz", ifs("sq.json", kSqrt), "--map-index", "0", "--samples", "50"});
  ASSERT_EQ(res.code, kExitOk) << res.err;
  EXPECT_GE(res.parsed()["value"].get<double>(), 1e5);
}

TEST_F(CliTest, JsrOfTwoScalings) {
  const std::string doc = ifs("two.json", std::string(kHalf) + R"(, {"type": "affine", "A": [[0.3333333333333333]], "b": [0]})");
  const auto res = run_cli({"jsr", doc, "--nmax", "6"});
  ASSERT_EQ(res.code, kExitOk) << res.err;
  EXPECT_NEAR(res.parsed()["final"].get<double>(), 0.5, 1e-12);
  EXPECT_EQ(res.parsed()["per_level"].size(), 6U);
}

TEST_F(CliTest, AttractorWritesCantorEndpoints) {
  const std::string doc = ifs("cantor.json", std::string(kThird) + "," + kThirdShift);
  const std::string csv = path("a.csv");
  const std::string svg = path("a.svg");
  const std::string log = path("log.csv");
  const auto res = run_cli({"attractor", doc, "--steps", "3", "--snap", "0", "--out", csv, "--out", svg, "--log-csv", log});
  ASSERT_EQ(res.code, kExitOk) << res.err;
  std::ifstream in(csv);
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) rows += !line.empty();
  EXPECT_EQ(rows, 16U);
  EXPECT_TRUE(fs::exists(svg));
  std::ifstream log_in(log);
  std::string header;
  std::getline(log_in, header);
  EXPECT_EQ(header, "step,size,hausdorff_base");
  EXPECT_EQ(res.parsed()["steps"].size(), 3U);
}

TEST_F(CliTest, ModulusOfHalving) {
  const auto res = run_cli({"modulus", ifs("half.json", kHalf), "--point", "0.5", "--eps-out", "0.1", "--radii", "0.4,0.2,0.1"});
  ASSERT_EQ(res.code, kExitOk) << res.err;
  EXPECT_EQ(res.parsed()["delta"].get<double>(), 0.2);
}

TEST_F(CliTest, ValidateAndEmit) {
  const std::string emitted = path("canon.json");
  const auto ok = run_cli({"validate", ifs("sq.json", kSqrt), "--emit", emitted});
  ASSERT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_TRUE(ok.parsed()["valid"].get<bool>());
  const auto again = run_cli({"validate", emitted, "--emit", path("canon2.json")});
  ASSERT_EQ(again.code, kExitOk);
  std::ifstream a(emitted), b(path("canon2.json"));
  EXPECT_EQ(std::string(std::istreambuf_iterator<char>(a), {}), std::string(std::istreambuf_iterator<char>(b), {}));

  const auto bad = run_cli({"validate", ifs("dbl.json", R"({"type": "affine", "A": [[2]], "b": [0]})")});
  EXPECT_EQ(bad.code, kExitInputError);
  EXPECT_FALSE(bad.parsed()["valid"].get<bool>());
}

TEST_F(CliTest, MalformedInputExitsTwo) {
  EXPECT_EQ(run_cli({"remetric", write("broken.json", "{not json"), "--epsilon", "1", "--x", "0", "--y", "1"}).code,
            kExitInputError);
  const auto named = run_cli({"verify", ifs("bad.json", R"({"type": "affine", "A": "x", "b": [0]})"), "--epsilon", "1"});
  EXPECT_EQ(named.code, kExitInputError);
  EXPECT_NE(named.err.find("maps[0].A"), std::string::npos);
  EXPECT_EQ(run_cli({"remetric", path("missing.json"), "--epsilon", "1", "--x", "0", "--y", "1"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"remetric", ifs("id.json", kIdentity), "--epsilon", "0", "--x", "0", "--y", "1"}).code,
            kExitInputError);
  EXPECT_EQ(run_cli({"remetric", ifs("id.json", kIdentity), "--epsilon", "1", "--x", "0", "--y", "3"}).code,
            kExitInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(run_cli({}).code, kExitInputError);
}

TEST_F(CliTest, DeterministicOutput) {
  const std::string doc = ifs("sh.json", std::string(kSqrt) + "," + kHalf);
  const std::vector<std::string> args = {"verify", doc, "--epsilon", "1", "--depth", "8", "--samples", "25", "--seed", "7"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  EXPECT_EQ(a.out, b.out);
  const auto j1 = run_cli({"jsr", doc, "--nmax", "4", "--seed", "3"});
  const auto j2 = run_cli({"jsr", doc, "--nmax", "4", "--seed", "3"});
  EXPECT_EQ(j1.out, j2.out);
}

TEST_F(CliTest, HelpExitsZero) {
  const auto res = run_cli({"--help"});
  EXPECT_EQ(res.code, kExitOk);
  EXPECT_NE(res.out.find("remetric"), std::string::npos);
  EXPECT_EQ(run_cli({"verify", "--help"}).code, kExitOk);
}

}  // namespace
}  // namespace remetrica::cli
