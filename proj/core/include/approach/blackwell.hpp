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

#ifndef APPROACH_BLACKWELL_HPP_
#define APPROACH_BLACKWELL_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "approach/engine.hpp"
#include "approach/games.hpp"
#include "approach/geometry.hpp"
#include "approach/phi_regret.hpp"

namespace approach {

struct BlackwellState {
  Vector sum;
  int t = 0;

  explicit BlackwellState(int n) : sum(Vector::Zero(n)) {}
  void Add(const Vector& r);
  Vector Mean() const;
};

// proj_{C-polar} of the running mean (zero before the first payoff).
Vector BlackwellOracleInput(const BlackwellState& state, const ConeSpec& C);

// Oracle at the Blackwell input; a zero input is replaced by `reference`.
Decision BlackwellStep(const BlackwellState& state, const ConeSpec& C,
                       const Game& game, const Vector& reference);

struct BlackwellRunReport {
  std::vector<int> checkpoints;
  std::vector<double> distances;  // Euclidean distance of the mean to C
  std::vector<double> bounds;     // 2 sqrt(2) M / sqrt(t)
  Vector mean_payoff;
  bool ok = true;
};

BlackwellRunReport BlackwellRun(const Game& game, const ConeSpec& C,
                                Environment& env, int T,
                                const std::vector<int>& checkpoints,
                                const Vector& reference);

// Blackwell's algorithm as an engine learner: plays proj_{C-polar} of the
// mean payoff (zero at the first step) and reports the Euclidean distance of
// the mean to C as support value.
class BlackwellLearner : public Learner {
 public:
  explicit BlackwellLearner(ConeSpec C) : C_(std::move(C)) {}
  Vector Next(const Vector& Y, double eta) override;
  double Support(const Vector& rbar) override;

 private:
  ConeSpec C_;
  int t_ = 0;
};

// Schedule whose bound is 2 sqrt(2) M / sqrt(t).
Schedule BlackwellSchedule(double M);

// External-regret game on d actions with payoffs scaled by 1/sqrt(d-1) so
// that ||r||_2 <= 2; target is the nonpositive orthant.
std::unique_ptr<PhiGame> MakeBlackwellDemoGame(int d);

struct EquivalenceReport {
  bool ok = true;
  int steps = 0;
  int first_divergent = -1;
  double min_cosine = 1.0;
  double max_action_diff = 0.0;
  Vector blackwell_input;  // at the first divergent step
  Vector ftrl_input;
};

// Runs Blackwell's algorithm and FTRL with the Euclidean regularizer on
// B2 cap C-polar in lockstep on one payoff stream, comparing oracle inputs
// (positive colinearity) and actions at every step.
EquivalenceReport EquivalenceCheck(const Game& game, const ConeSpec& C, int T,
                                   std::uint64_t seed, const Vector& reference);

}  // namespace approach

#endif  // APPROACH_BLACKWELL_HPP_
