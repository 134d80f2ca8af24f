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

#include "approach_harness/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "approach_harness/checks.hpp"
#include "approach_harness/config.hpp"
#include "approach_harness/runner.hpp"

namespace approach::harness {
namespace {

std::filesystem::path OutputDir(const std::string& requested,
                                const ExperimentConfig& config) {
  if (!requested.empty()) return requested;
  if (!config.output_dir.empty()) return config.output_dir;
  return ".";
}

}  // namespace

int CmdRun(const std::string& config_path, const std::string& out_dir,
           std::ostream& out, std::ostream& err) {
  ExperimentConfig config;
  try {
    config = LoadConfig(config_path);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 1;
  }
  const std::filesystem::path dir = OutputDir(out_dir, config);
  std::filesystem::create_directories(dir);
  const std::vector<SeedResult> results = RunExperiment(config);
  {
    std::ofstream csv(dir / "steps.csv", std::ios::binary);
    WriteStepsCsv(csv, results);
  }
  const nlohmann::json summary = BuildSummary(config, results);
  {
    std::ofstream js(dir / "summary.json", std::ios::binary);
    js << summary.dump(2) << '\n';
  }
  int aborted = 0;
  for (const SeedResult& r : results) {
    if (r.aborted) {
      ++aborted;
      err << "seed " << r.seed << " aborted: " << r.abort_reason << '\n';
    }
  }
  const Aggregate support = AggregateOf([&] {
    std::vector<double> v;
    for (const SeedResult& r : results) v.push_back(r.final_support);
    return v;
  }());
  out << config.problem << ": " << results.size() << " seeds, T=" << config.T
      << ", mean final support " << FormatReal(support.mean)
      << ", wrote " << (dir / "steps.csv").string() << " and "
      << (dir / "summary.json").string() << '\n';
  return aborted > 0 ? 2 : 0;
}

int CmdVerify(const std::string& suite, std::ostream& out, std::ostream& err) {
  std::vector<CheckResult> results;
  try {
    results = RunSuite(suite);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return 1;
  }
  PrintTable(out, results);
  int failed = 0;
  for (const CheckResult& r : results) failed += r.pass ? 0 : 1;
  out << results.size() - failed << '/' << results.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

int CmdSweep(const std::string& config_path, const std::vector<int>& grid,
             const std::string& out_dir, std::ostream& out,
             std::ostream& err) {
  ExperimentConfig config;
  try {
    config = LoadConfig(config_path);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 1;
  }
  SweepResult sweep;
  try {
    sweep = Sweep(config, grid);
  } catch (const InputError& e) {
    err << e.what() << '\n';
    return 1;
  }
  const std::filesystem::path dir = OutputDir(out_dir, config);
  std::filesystem::create_directories(dir);
  {
    std::ofstream csv(dir / "rates.csv", std::ios::binary);
    WriteRatesCsv(csv, sweep);
  }
  out << "slope " << FormatReal(sweep.slope) << ", wrote "
      << (dir / "rates.csv").string() << '\n';
  if (!sweep.note.empty()) out << "note: " << sweep.note << '\n';
  return 0;
}

std::vector<int> ParseGrid(const std::string& text) {
  std::vector<int> grid;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t used = 0;
    const int value = std::stoi(item, &used);
    if (used != item.size() || value <= 0) {
      throw std::invalid_argument("invalid horizon \"" + item + "\"");
    }
    grid.push_back(value);
  }
  return grid;
}

}  // namespace approach::harness
