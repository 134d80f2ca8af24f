// Copyright 2026 The Approach Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "approach/random.hpp"
#include "approach_harness/commands.hpp"
#include "approach_harness/config.hpp"
#include "approach_harness/runner.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using approach::harness::ConfigError;
using approach::harness::ParseConfigText;
using nlohmann::json;

namespace {

fs::path ScratchDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("approach_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream(path) << text;
  return path;
}

int RunCli(const std::string& args) {
  const std::string cmd =
      std::string(APPROACH_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int CountLines(const fs::path& path) {
  std::ifstream in(path);
  int n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

std::string ErrorOf(const std::string& text) {
  try {
    ParseConfigText(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("config errors name the offending field") {
  CHECK(ErrorOf(R"({"problem":"swap","d":3,"seeds":[1]})").find("\"T\"") !=
        std::string::npos);
  CHECK(ErrorOf(R"({"problem":"swap","d":3,"T":10,"seeds":[1],"colour":1})")
            .find("colour") != std::string::npos);
  CHECK(ErrorOf(R"({"problem":"poker","d":3,"T":10,"seeds":[1]})")
            .find("problem") != std::string::npos);
  CHECK(ErrorOf(R"({"problem":"swap","d":3,"T":10})").find("seeds") !=
        std::string::npos);
  CHECK_FALSE(ErrorOf("not json").empty());
}

TEST_CASE("seeds are split from the master seed") {
  const auto c = ParseConfigText(
      R"({"problem":"swap","d":3,"T":10,"master_seed":9,"num_seeds":4})");
  REQUIRE(c.seeds.size() == 4);
  for (std::uint64_t i = 0; i < 4; ++i) {
    CHECK(c.seeds[i] == approach::DeriveSeed(9, i));
  }
  CHECK(approach::DeriveSeed(9, 2) == approach::SplitMix64(9 ^ 2));
}

TEST_CASE("config survives a json round trip") {
  const auto c = ParseConfigText(
      R"({"problem":"globalcost","d":3,"p":"inf","T":50,"seeds":[1,2],
          "environment":{"kind":"uniform_random","corners":true},
          "cut_budget":80,"nu_hard_limit":0.5})");
  const auto back =
      approach::harness::ParseConfig(approach::harness::ConfigToJson(c));
  CHECK(back.problem == c.problem);
  CHECK(back.d == 3);
  CHECK(std::isinf(back.p));
  CHECK(back.T == 50);
  CHECK(back.seeds == c.seeds);
  CHECK(back.environment.corners);
  CHECK(back.cut_budget == 80);
  REQUIRE(back.nu_hard_limit.has_value());
  CHECK(*back.nu_hard_limit == 0.5);
}

TEST_CASE("reals are written with round-trip precision") {
  using approach::harness::FormatReal;
  for (double x : {0.1, 1.0 / 3.0, -2.5e-17, 12345.678901234567}) {
    CHECK(std::stod(FormatReal(x)) == x);
  }
  CHECK(FormatReal(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(FormatReal(approach::kInf) == "inf");
  CHECK(FormatReal(-approach::kInf) == "-inf");
}

TEST_CASE("log-log slope of an exact power law") {
  using approach::harness::LogLogSlope;
  std::vector<double> x = {256, 1024, 4096, 16384};
  std::vector<double> y;
  for (double t : x) y.push_back(3.0 / std::sqrt(t));
  CHECK(LogLogSlope(x, y) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(std::isnan(LogLogSlope({1.0}, {1.0})));
  CHECK(std::isnan(LogLogSlope(x, {1, 0, 1, 1})));
  CHECK(std::isnan(LogLogSlope(x, {2, 2, 2, 2})));
}

TEST_CASE("aggregates interpolate percentiles") {
  const auto a = approach::harness::AggregateOf({4, 1, 3, 2});
  CHECK(a.mean == doctest::Approx(2.5));
  CHECK(a.min == 1.0);
  CHECK(a.max == 4.0);
  CHECK(a.p50 == doctest::Approx(2.5));
  CHECK(a.p90 == doctest::Approx(3.7));
}

TEST_CASE("grid parsing") {
  CHECK(approach::harness::ParseGrid("256,1024,4096") ==
        std::vector<int>{256, 1024, 4096});
  CHECK_THROWS(approach::harness::ParseGrid("256,x"));
}

TEST_CASE("cli run writes one row per seed and step") {
  const fs::path dir = ScratchDir("run");
  const fs::path cfg = WriteFile(
      dir / "swap.json",
      R"({"problem":"swap","d":3,"T":1024,"master_seed":5,"num_seeds":10,
          "environment":{"kind":"adversarial"}})");
  CHECK(RunCli("run --config " + cfg.string() + " --out " +
               (dir / "out").string()) == 0);
  CHECK(CountLines(dir / "out" / "steps.csv") == 1 + 10 * 1024);
  std::ifstream in(dir / "out" / "summary.json");
  const json summary = json::parse(in);
  CHECK(summary.at("records").size() == 10);
  CHECK(summary.at("aborted_seeds").empty());
  for (const auto& r : summary.at("records")) {
    CHECK(r.at("guarantee_ok").get<bool>());
  }
}

TEST_CASE("cli run rejects a config without a horizon") {
  const fs::path dir = ScratchDir("bad");
  const fs::path cfg =
      WriteFile(dir / "bad.json", R"({"problem":"swap","d":3,"seeds":[1]})");
  CHECK(RunCli("run --config " + cfg.string() + " --out " + dir.string()) ==
        1);
  CHECK(RunCli("run --config " + (dir / "missing.json").string()) == 1);
}

TEST_CASE("cli run flags aborted seeds") {
  const fs::path dir = ScratchDir("abort");
  const fs::path cfg = WriteFile(
      dir / "gc.json",
      R"({"problem":"globalcost","d":2,"p":2,"T":20,"seeds":[1,2],
          "environment":{"kind":"uniform_random"},"nu_hard_limit":-1})");
  CHECK(RunCli("run --config " + cfg.string() + " --out " + dir.string()) ==
        2);
  std::ifstream in(dir / "summary.json");
  const json summary = json::parse(in);
  CHECK(summary.at("aborted_seeds").size() == 2);
  CHECK(summary.at("records").at(0).at("aborted").get<bool>());
}

TEST_CASE("cli verify rejects an unknown suite") {
  CHECK(RunCli("verify --suite nonsense") == 1);
}

TEST_CASE("cli sweep writes one row per horizon") {
  const fs::path dir = ScratchDir("sweep");
  const fs::path cfg = WriteFile(
      dir / "swap.json",
      R"({"problem":"swap","d":3,"T":1,"master_seed":3,"num_seeds":4,
          "environment":{"kind":"uniform_random","corners":true}})");
  CHECK(RunCli("sweep --config " + cfg.string() +
               " --T 64,128,256,512 --out " + dir.string()) == 0);
  CHECK(CountLines(dir / "rates.csv") == 5);
  CHECK(RunCli("sweep --config " + cfg.string() + " --T 64,128 --out " +
               dir.string()) == 1);
}

TEST_CASE("thread count does not change the output") {
  const auto c = ParseConfigText(
      R"({"problem":"combinatorial","d":5,"m":2,"T":200,"master_seed":1,
          "num_seeds":6,"environment":{"kind":"uniform_random"}})");
  std::ostringstream one, four;
  approach::harness::WriteStepsCsv(one,
                                   approach::harness::RunExperiment(c, 1));
  approach::harness::WriteStepsCsv(four,
                                   approach::harness::RunExperiment(c, 4));
  CHECK(one.str() == four.str());
}
