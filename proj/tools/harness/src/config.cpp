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

#include "approach_harness/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "approach/random.hpp"

namespace approach::harness {
namespace {

using nlohmann::json;

const json& Require(const json& j, const char* field) {
  if (!j.contains(field)) {
    throw ConfigError(std::string("missing required field \"") + field +
                      "\"");
  }
  return j.at(field);
}

template <typename T>
T Get(const json& j, const char* field) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("field \"") + field +
                      "\" has the wrong type: " + e.what());
  }
}

double GetExponent(const json& j, const char* field) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "infinity") return kInf;
    throw ConfigError(std::string("field \"") + field +
                      "\" must be a number or \"inf\"");
  }
  return Get<double>(j, field);
}

void RejectUnknown(const json& j, const std::set<std::string>& allowed,
                   const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (allowed.count(it.key()) == 0) {
      throw ConfigError("unknown field \"" + it.key() + "\"" + where);
    }
  }
}

EnvironmentSpec ParseEnvironment(const json& j) {
  if (!j.is_object()) throw ConfigError("field \"environment\" must be an object");
  RejectUnknown(j, {"kind", "corners", "seed", "sequence"},
                " in \"environment\"");
  const std::string kind = Get<std::string>(Require(j, "kind"), "kind");
  EnvironmentSpec spec;
  if (kind == "adversarial") {
    spec.kind = EnvironmentSpec::Kind::kAdversarial;
  } else if (kind == "uniform_random") {
    spec.kind = EnvironmentSpec::Kind::kUniformRandom;
  } else if (kind == "fixed_sequence") {
    spec.kind = EnvironmentSpec::Kind::kFixedSequence;
    const auto rows = Get<std::vector<std::vector<double>>>(
        Require(j, "sequence"), "sequence");
    if (rows.empty()) throw ConfigError("field \"sequence\" is empty");
    for (const auto& row : rows) {
      spec.sequence.push_back(
          Eigen::Map<const Vector>(row.data(), static_cast<Eigen::Index>(
                                                   row.size())));
    }
  } else {
    throw ConfigError("field \"environment.kind\" must be adversarial, "
                      "uniform_random or fixed_sequence");
  }
  if (j.contains("corners")) spec.corners = Get<bool>(j.at("corners"), "corners");
  if (j.contains("seed")) spec.seed = Get<std::uint64_t>(j.at("seed"), "seed");
  return spec;
}

}  // namespace

ExperimentConfig ParseConfig(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RejectUnknown(j,
                {"problem", "d", "p", "m", "phi", "T", "seeds", "master_seed",
                 "num_seeds", "environment", "delta_conf", "solver_tol",
                 "cut_budget", "max_rounds", "nu_hard_limit", "algorithm",
                 "q_prime", "delta", "mixed", "output_dir"},
                "");
  ExperimentConfig c;
  c.problem = Get<std::string>(Require(j, "problem"), "problem");
  static const std::set<std::string> kProblems = {
      "globalcost", "combinatorial", "swap", "internal", "blackwell-demo"};
  if (kProblems.count(c.problem) == 0) {
    throw ConfigError("field \"problem\" must be one of globalcost, "
                      "combinatorial, swap, internal, blackwell-demo");
  }
  c.d = Get<int>(Require(j, "d"), "d");
  c.T = Get<int>(Require(j, "T"), "T");
  if (c.T < 1) throw ConfigError("field \"T\" must be >= 1");
  if (j.contains("seeds")) {
    c.seeds = Get<std::vector<std::uint64_t>>(j.at("seeds"), "seeds");
  } else if (j.contains("master_seed") || j.contains("num_seeds")) {
    const auto master =
        Get<std::uint64_t>(Require(j, "master_seed"), "master_seed");
    const int n = Get<int>(Require(j, "num_seeds"), "num_seeds");
    for (int i = 0; i < n; ++i) {
      c.seeds.push_back(DeriveSeed(master, static_cast<std::uint64_t>(i)));
    }
  } else {
    throw ConfigError("missing required field \"seeds\"");
  }
  if (c.seeds.empty()) throw ConfigError("field \"seeds\" is empty");
  if (j.contains("environment")) {
    c.environment = ParseEnvironment(j.at("environment"));
  }
  if (j.contains("p")) c.p = GetExponent(j.at("p"), "p");
  if (j.contains("m")) c.m = Get<int>(j.at("m"), "m");
  if (j.contains("phi")) {
    const json& phi = j.at("phi");
    if (phi.is_string()) {
      c.phi = phi.get<std::string>();
      static const std::set<std::string> kPhi = {"transpositions", "internal",
                                                 "all_maps", "external"};
      if (kPhi.count(c.phi) == 0) {
        throw ConfigError("field \"phi\" must be transpositions, internal, "
                          "all_maps, external or a list of maps");
      }
    } else {
      c.phi = "custom";
      c.phi_maps = Get<std::vector<std::vector<int>>>(phi, "phi");
    }
  }
  if (j.contains("delta_conf")) {
    c.delta_conf = Get<double>(j.at("delta_conf"), "delta_conf");
  }
  if (!(c.delta_conf > 0.0 && c.delta_conf < 1.0)) {
    throw ConfigError("field \"delta_conf\" must lie in (0, 1)");
  }
  if (j.contains("solver_tol")) {
    c.solver_tol = Get<double>(j.at("solver_tol"), "solver_tol");
  }
  if (j.contains("cut_budget")) {
    c.cut_budget = Get<int>(j.at("cut_budget"), "cut_budget");
  }
  if (j.contains("max_rounds")) {
    c.max_rounds = Get<int>(j.at("max_rounds"), "max_rounds");
  }
  if (j.contains("nu_hard_limit")) {
    c.nu_hard_limit = Get<double>(j.at("nu_hard_limit"), "nu_hard_limit");
  }
  if (j.contains("algorithm")) {
    c.algorithm = Get<std::string>(j.at("algorithm"), "algorithm");
    if (c.algorithm != "lp" && c.algorithm != "norm") {
      throw ConfigError("field \"algorithm\" must be lp or norm");
    }
  }
  if (j.contains("q_prime")) c.q_prime = Get<double>(j.at("q_prime"), "q_prime");
  if (j.contains("delta")) c.delta = Get<double>(j.at("delta"), "delta");
  if (j.contains("mixed")) c.mixed = Get<bool>(j.at("mixed"), "mixed");
  if (j.contains("output_dir")) {
    c.output_dir = Get<std::string>(j.at("output_dir"), "output_dir");
  }

  if (c.problem == "globalcost") {
    if (c.d < 2) throw ConfigError("field \"d\" must be >= 2 for globalcost");
    if (!(c.p > 1.0)) throw ConfigError("field \"p\" must exceed 1");
    if (c.cut_budget < 1) throw ConfigError("field \"cut_budget\" must be >= 1");
  } else if (c.problem == "combinatorial") {
    if (c.d < 1 || c.m < 1 || c.m > c.d) {
      throw ConfigError("fields \"d\" and \"m\" need 1 <= m <= d");
    }
  } else {
    if (c.d < 2) throw ConfigError("field \"d\" must be >= 2");
  }
  return c;
}

ExperimentConfig ParseConfigText(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return ParseConfig(j);
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfigText(buffer.str());
}

nlohmann::json ConfigToJson(const ExperimentConfig& c) {
  json j;
  j["problem"] = c.problem;
  j["d"] = c.d;
  if (IsInfinite(c.p)) {
    j["p"] = "inf";
  } else {
    j["p"] = c.p;
  }
  j["m"] = c.m;
  if (c.phi == "custom") {
    j["phi"] = c.phi_maps;
  } else {
    j["phi"] = c.phi;
  }
  j["T"] = c.T;
  j["seeds"] = c.seeds;
  json env;
  switch (c.environment.kind) {
    case EnvironmentSpec::Kind::kAdversarial:
      env["kind"] = "adversarial";
      break;
    case EnvironmentSpec::Kind::kUniformRandom:
      env["kind"] = "uniform_random";
      break;
    case EnvironmentSpec::Kind::kFixedSequence: {
      env["kind"] = "fixed_sequence";
      std::vector<std::vector<double>> rows;
      for (const Vector& v : c.environment.sequence) {
        rows.emplace_back(v.data(), v.data() + v.size());
      }
      env["sequence"] = rows;
      break;
    }
  }
  env["corners"] = c.environment.corners;
  env["seed"] = c.environment.seed;
  j["environment"] = env;
  j["delta_conf"] = c.delta_conf;
  j["solver_tol"] = c.solver_tol;
  j["cut_budget"] = c.cut_budget;
  j["max_rounds"] = c.max_rounds;
  if (c.nu_hard_limit) j["nu_hard_limit"] = *c.nu_hard_limit;
  j["algorithm"] = c.algorithm;
  j["q_prime"] = c.q_prime;
  j["delta"] = c.delta;
  j["mixed"] = c.mixed;
  j["output_dir"] = c.output_dir;
  return j;
}

}  // namespace approach::harness
