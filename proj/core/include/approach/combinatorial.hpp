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

#ifndef APPROACH_COMBINATORIAL_HPP_
#define APPROACH_COMBINATORIAL_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "approach/engine.hpp"
#include "approach/games.hpp"
#include "approach/regularizers.hpp"
#include "approach/solvers.hpp"

namespace approach {

struct CombInstance {
  int d = 2;
  int m = 1;
};

// Rank of a sorted m-subset of {0..d-1} in colexicographic order.
std::int64_t RankSubset(const std::vector<int>& subset);
std::vector<int> UnrankSubset(std::int64_t rank, int m);
std::int64_t Binomial(int n, int k);

// v - (sum_{i in p} v_i / m) 1.
Vector CombPayoff(const std::vector<int>& subset, const Vector& v, int m);
// Expected payoff of the mixed action with marginals x: v - (<v, x>/m) 1.
Vector CombExpectedPayoff(const Vector& x, const Vector& v, int m);

// argmax over the capped simplex of <eta Y, x> - sum (x_i/m) log(x_i/m).
Vector CombFtrlStep(const Vector& Y, double eta, const CombInstance& inst);

// Caratheodory decomposition of x into m-subsets.
std::vector<SubsetWeight> CombOracle(const Vector& x, int m);

class CombRegretTracker : public StepObserver {
 public:
  explicit CombRegretTracker(CombInstance inst);

  void Add(const std::vector<int>& subset, const Vector& v);
  void AddMixed(const Vector& x, const Vector& v);
  double Regret() const;

  void Observe(int t, const Decision& decision, std::int64_t pure,
               const Vector& b) override;
  double AverageRegret() const override;

 private:
  CombInstance inst_;
  Vector cumulative_;
  double played_ = 0.0;
  int rounds_ = 0;
};

double CombRegret(const std::vector<std::vector<int>>& subsets,
                  const std::vector<Vector>& payoffs, int m);

class CombGame : public Game {
 public:
  explicit CombGame(CombInstance inst);

  std::string name() const override;
  int payoff_dim() const override { return inst_.d; }
  int env_dim() const override { return inst_.d; }
  double env_lo() const override { return -1.0; }
  double env_hi() const override { return 1.0; }
  FeasibleSet decision_set() const override;
  Decision Oracle(const Vector& x) const override;
  Vector Payoff(const Vector& action, const Vector& b) const override;
  bool has_pure_actions() const override { return true; }
  Vector PurePayoff(std::int64_t pure, const Vector& b) const override;
  double M() const override { return 2.0; }
  NormTag payoff_norm() const override { return NormTag::Lp(kInf); }
  ConeSpec target() const override;

 private:
  CombInstance inst_;
};

Regularizer CombRegularizer(const CombInstance& inst);
// Delta = log(d/m), K = 1/m^2, M = 2: eta_t = sqrt(log(d/m) / (4 m^2 t)).
Schedule CombSchedule(const CombInstance& inst);

}  // namespace approach

#endif  // APPROACH_COMBINATORIAL_HPP_
