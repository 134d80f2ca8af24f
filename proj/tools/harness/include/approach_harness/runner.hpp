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

#ifndef APPROACH_HARNESS_RUNNER_HPP_
#define APPROACH_HARNESS_RUNNER_HPP_

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "approach/engine.hpp"
#include "approach_harness/config.hpp"
#include "json.hpp"

namespace approach::harness {

struct StepRow {
  int t = 0;
  double support_value = 0.0;
  double bound_value = 0.0;
  double inner = 0.0;
  double nu = 0.0;
  double regret = 0.0;
};

struct SeedResult {
  std::uint64_t seed = 0;
  std::vector<StepRow> steps;
  double final_support = 0.0;
  double final_bound = 0.0;
  double final_regret = 0.0;
  double slack_mean = 0.0;
  double high_prob_bound = 0.0;
  double max_inner_excess = 0.0;
  double wall_time = 0.0;
  bool aborted = false;
  bool guarantee_ok = false;
  std::string abort_reason;
  std::map<std::string, double> extras;
};

// Worker count: APPROACH_THREADS when set, else the hardware concurrency.
int ThreadCount();

// Theorem bound at T for the configured problem (expectation form).
double ConfiguredBound(const ExperimentConfig& config, int T);

SeedResult RunSeed(const ExperimentConfig& config, std::uint64_t seed);
// Runs every configured seed (in parallel when threads > 1); results follow
// the order of config.seeds.
std::vector<SeedResult> RunExperiment(const ExperimentConfig& config,
                                      int threads = 0);

// Locale-independent shortest round-trip text with 17 significant digits.
std::string FormatReal(double value);

void WriteStepsCsv(std::ostream& out, const std::vector<SeedResult>& results);
nlohmann::json BuildSummary(const ExperimentConfig& config,
                            const std::vector<SeedResult>& results);

struct Aggregate {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double p50 = 0.0;
  double p90 = 0.0;
};

Aggregate AggregateOf(const std::vector<double>& values);

struct SweepRow {
  int T = 0;
  double mean_final_support = 0.0;
  double mean_final_bound = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  double slope = 0.0;  // NaN when undefined
  std::string note;
};

// Least-squares slope of log y against log x; NaN when some y <= 0 or all
// y are equal.
double LogLogSlope(const std::vector<double>& x, const std::vector<double>& y);
SweepResult Sweep(const ExperimentConfig& config, const std::vector<int>& Ts,
                  int threads = 0);
void WriteRatesCsv(std::ostream& out, const SweepResult& sweep);

}  // namespace approach::harness

#endif  // APPROACH_HARNESS_RUNNER_HPP_
