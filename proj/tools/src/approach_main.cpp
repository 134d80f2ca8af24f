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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "approach_harness/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Approachability by regret minimization: experiments and checks"};
  app.require_subcommand(1);

  std::string config;
  std::string out;
  auto* run = app.add_subcommand("run", "run an experiment configuration");
  run->add_option("--config", config, "JSON configuration file")->required();
  run->add_option("--out", out, "output directory");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("--suite", suite,
                     "geometry, regularizers, solvers, bounds, equivalence, "
                     "harness or all");

  std::string grid = "256,1024,4096,16384";
  auto* sweep = app.add_subcommand("sweep", "fit the rate over horizons");
  sweep->add_option("--config", config, "JSON configuration file")->required();
  sweep->add_option("--T", grid, "comma separated horizons");
  sweep->add_option("--out", out, "output directory");

  CLI11_PARSE(app, argc, argv);

  using namespace approach::harness;
  if (*run) return CmdRun(config, out, std::cout, std::cerr);
  if (*verify) return CmdVerify(suite, std::cout, std::cerr);
  try {
    return CmdSweep(config, ParseGrid(grid), out, std::cout, std::cerr);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
}
