// Copyright 2026 The qyao Authors.
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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded and returns its exit code and stdout.
Run qyao(const std::string& args) {
  const std::string command = std::string(QYAO_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qyao_cli_" + name);
}

}  // namespace

TEST(Cli, FindAllReportsPositions) {
  const auto r = qyao("run findall --N 4 --x 0010 --k 1 --no-timestamp");
  EXPECT_EQ(r.exit_code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j["positions"], nlohmann::json::array({3}));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["verdict"], "PASS");
}

TEST(Cli, ThresholdExample) {
  const auto r = qyao("run threshold --N 16 --t 2 --mu uniform --profile desk --seed 7 --no-timestamp");
  EXPECT_EQ(r.exit_code, 0);
  const auto j = parse(r);
  EXPECT_GE(j["weak_fraction"]["float"].get<double>(), 2.0 / 3.0);
  EXPECT_TRUE(j["meets_target"].get<bool>());
}

TEST(Cli, SearchExample) {
  const auto r = qyao("run search --N 16 --eps 0.25 --mu uniform --seed 7 --no-timestamp");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_GE(parse(r)["weak_fraction"]["float"].get<double>(), 0.75);
}

TEST(Cli, SymmetricAndAndOr) {
  EXPECT_EQ(qyao("run symmetric --N 6 --f majority --no-timestamp").exit_code, 0);
  EXPECT_EQ(qyao("run symmetric --N 5 --f 'symmetric 5 profile=011010' --mu 'skew seed=3' --no-timestamp").exit_code,
            0);
  EXPECT_EQ(qyao("run andor --N 9 --no-timestamp").exit_code, 0);
}

TEST(Cli, GameExamples) {
  const auto parity = qyao("game --f parity --N 2 --eps 0 --no-timestamp");
  EXPECT_EQ(parity.exit_code, 0);
  EXPECT_EQ(parse(parity)["randomized"], 2);
  EXPECT_EQ(parse(parity)["max_distributional"], 2);
  const auto orr = qyao("game --f or --N 2 --eps 0.5 --no-timestamp");
  EXPECT_EQ(orr.exit_code, 0);
  EXPECT_EQ(parse(orr)["randomized"], 0);
  const auto maj = qyao("game --f majority --N 3 --eps 0.333... --no-timestamp");
  EXPECT_EQ(maj.exit_code, 0);
  EXPECT_TRUE(parse(maj)["equal"].get<bool>());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(qyao("game --f parity --N 5 --eps 0").exit_code, 3);
  EXPECT_EQ(qyao("run threshold --N 8").exit_code, 2);
  EXPECT_EQ(qyao("run threshold --N 8 --t 2 --mu 'bogus'").exit_code, 2);
  EXPECT_EQ(qyao("run nonsense --N 8").exit_code, 2);
  EXPECT_EQ(qyao("run search --N 8 --eps 1/0").exit_code, 2);
  EXPECT_EQ(qyao("run andor --N 5").exit_code, 2);
  EXPECT_EQ(qyao("run symmetric --N 4 --f 'table 2 hex=8'").exit_code, 2);
  EXPECT_EQ(qyao("").exit_code, 2);
  // A query limit no run can meet turns the verdict into FAIL.
  EXPECT_EQ(qyao("run threshold --N 8 --t 2 --max-ratio 0.1 --no-timestamp").exit_code, 1);
  EXPECT_EQ(qyao("run findall --N 4 --x 0110 --k 1 --no-timestamp").exit_code, 1);
}

TEST(Cli, SeedRequiredWhenMaskSearchMaySample) {
  EXPECT_EQ(qyao("run threshold --N 24 --t 1 --mu 'skew seed=1'").exit_code, 2);
}

TEST(Cli, ReportsAreDeterministic) {
  const std::string args = "run threshold --N 8 --t 2 --mu 'skew seed=5' --seed 3 --per-input --no-timestamp";
  const auto a = qyao(args);
  const auto b = qyao(args);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse(a)["records"].size(), 256u);
  const auto c = qyao("game --f majority --N 3 --eps 1/3 --seed 4 --no-timestamp");
  EXPECT_EQ(c.out, qyao("game --f majority --N 3 --eps 1/3 --seed 4 --no-timestamp").out);
}

TEST(Cli, OutFileAndTimestamp) {
  const auto path = temp_file("out.json");
  std::filesystem::remove(path);
  const auto r = qyao("run findall --x 1011 --out " + path.string());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  const auto j = nlohmann::json::parse(text.str());
  EXPECT_TRUE(j.contains("timestamp"));
  EXPECT_EQ(j["k"], 3);
}

TEST(Cli, ConfigFile) {
  const auto path = temp_file("config.ini");
  {
    std::ofstream out(path);
    out << "N=8\nt=2\nmu=uniform\nno-timestamp=true\n";
  }
  const auto a = qyao("run threshold --config " + path.string());
  const auto b = qyao("run threshold --N 8 --t 2 --mu uniform --no-timestamp");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, DistributionCsvFile) {
  const auto path = temp_file("mu.csv");
  {
    std::ofstream out(path);
    out << "input,weight\n0000,1/2\n0110,1/4\n1111,1/4\n";
  }
  const auto r = qyao("run threshold --N 4 --t 2 --no-timestamp --per-input --mu " + path.string());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(parse(r)["records"].size(), 3u);
}

TEST(Cli, SweepWritesCsvRows) {
  const auto r = qyao("run threshold --N 8 --sweep t=1..4");
  EXPECT_EQ(r.exit_code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("t,weak_fraction", 0), 0u);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_NE(line.find("PASS"), std::string::npos) << line;
  }
  EXPECT_EQ(rows, 4);
  EXPECT_EQ(qyao("run threshold --N 8 --sweep t=4..1").exit_code, 2);
}

TEST(Cli, WorkerCountDoesNotChangeReports) {
  const std::string args = "run symmetric --N 6 --f parity --mu 'skew seed=2' --per-input --no-timestamp";
  const auto one = qyao(args);
  const std::string with_env = "env QYAO_WORKERS=3 " + std::string(QYAO_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(with_env.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
  pclose(pipe);
  EXPECT_NE(one.out.find("weak_fraction"), std::string::npos);
  EXPECT_EQ(out, one.out);
}
