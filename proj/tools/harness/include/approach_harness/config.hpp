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

#ifndef APPROACH_HARNESS_CONFIG_HPP_
#define APPROACH_HARNESS_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "approach/games.hpp"
#include "json.hpp"

namespace approach::harness {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string problem;  // globalcost, combinatorial, swap, internal,
                        // blackwell-demo
  int d = 0;
  double p = kInf;
  int m = 0;
  std::string phi = "transpositions";
  std::vector<std::vector<int>> phi_maps;
  int T = 0;
  std::vector<std::uint64_t> seeds;
  EnvironmentSpec environment;
  double delta_conf = 0.1;
  double solver_tol = 1e-6;
  int cut_budget = 200;
  int max_rounds = 50;
  // Unset: 0.05 times the theorem bound at T.
  std::optional<double> nu_hard_limit;
  // globalcost: "lp" (composite regularizer) or "norm" (l_{q'} regularizer).
  std::string algorithm = "lp";
  double q_prime = 2.0;
  double delta = 1.0;
  // Draw pure actions (finite-action problems).
  bool mixed = true;
  std::string output_dir;
};

ExperimentConfig ParseConfig(const nlohmann::json& j);
ExperimentConfig ParseConfigText(const std::string& text);
ExperimentConfig LoadConfig(const std::string& path);
nlohmann::json ConfigToJson(const ExperimentConfig& config);

}  // namespace approach::harness

#endif  // APPROACH_HARNESS_CONFIG_HPP_
