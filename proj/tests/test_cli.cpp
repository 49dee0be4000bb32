// Copyright 2026 The QFT Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = qft::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Cli, TwoPointDftFromFile) {
  const std::string path = write_temp("qft_cli_two.txt", "1.5\n0.25\n");
  const Outcome r = run({"transform", "--transform", "cdft", "--n", "2", "--input", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"0,1.75,0", "1,1.25,0"}));
}

TEST(Cli, ComplexSamples) {
  const std::string path = write_temp("qft_cli_complex.txt", "1,2\n3,-1\n");
  const Outcome r = run({"transform", "--algo", "classical", "--transform", "cdft", "--n", "2",
                         "--input", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"0,4,1", "1,-2,3"}));
}

TEST(Cli, CosineImpulseIsFlat) {
  const Outcome r = run({"transform", "--transform", "dct0", "--n", "8", "--impulse"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"0,1", "1,1", "2,1", "3,1", "4,1"}));
}

TEST(Cli, FastAgreesWithNaive) {
  for (const char* kind : {"cdft", "rdft", "dct0", "dst0"}) {
    const Outcome fast = run({"transform", "--transform", kind, "--n", "64", "--random", "5"});
    const Outcome slow =
        run({"transform", "--algo", "naive", "--transform", kind, "--n", "64", "--random", "5"});
    ASSERT_EQ(fast.code, 0) << fast.err;
    ASSERT_EQ(slow.code, 0) << slow.err;
    const auto a = lines(fast.out), b = lines(slow.out);
    ASSERT_EQ(a.size(), b.size()) << kind;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::istringstream x(a[i]), y(b[i]);
      for (std::string p, q; std::getline(x, p, ',') && std::getline(y, q, ',');) {
        EXPECT_NEAR(std::stod(p), std::stod(q), 1e-12) << kind << " row " << i;
      }
    }
  }
}

TEST(Cli, CostTable) {
  const Outcome r = run({"cost-table", "--transform", "cdft", "--n-min", "4", "--n-max", "64"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("improved,cdft,16,148,148,20,20,168,168"), std::string::npos);
  EXPECT_NE(r.out.find("classical,cdft,16,160,160,22,22,182,182"), std::string::npos);
}

TEST(Cli, TreeListing) {
  const Outcome r = run({"tree", "--algo", "improved", "--root", "re_tt", "--n", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("s_{2,1_dc_tt} N=8"), std::string::npos);
  EXPECT_NE(r.out.find("s_{2,2_ds_tt} N=8"), std::string::npos);
}

TEST(Cli, AccuracyRepeatsExactly) {
  const std::vector<std::string> args = {"accuracy", "--n-list", "16,32", "--trials", "4"};
  const Outcome a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(lines(a.out).size(), 5u);
}

TEST(Cli, Selftest) {
  const Outcome r = run({"selftest"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, InvalidArgumentsExitOne) {
  EXPECT_EQ(run({"transform", "--n", "12", "--impulse"}).code, 1);
  EXPECT_EQ(run({"transform", "--transform", "dst0", "--n", "2", "--impulse"}).code, 1);
  EXPECT_EQ(run({"transform", "--n", "8"}).code, 1);
  EXPECT_EQ(run({"transform", "--n", "8", "--impulse", "--random", "1"}).code, 1);
  EXPECT_EQ(run({"transform", "--algo", "fancy", "--n", "8", "--impulse"}).code, 1);
  EXPECT_EQ(run({"tree", "--root", "dc_oo", "--n", "8"}).code, 1);
  EXPECT_EQ(run({"accuracy", "--pipeline", "three-tier"}).code, 1);
  EXPECT_EQ(run({"cost-table", "--n-min", "2"}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
}

TEST(Cli, MalformedInputFile) {
  const std::string bad = write_temp("qft_cli_bad.txt", "1.0\nabc\n");
  EXPECT_EQ(run({"transform", "--n", "2", "--input", bad}).code, 1);
  const std::string short_file = write_temp("qft_cli_short.txt", "1.0\n");
  EXPECT_EQ(run({"transform", "--n", "2", "--input", short_file}).code, 1);
  EXPECT_EQ(run({"transform", "--n", "2", "--input", "/nonexistent/qft.txt"}).code, 1);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

}  // namespace
