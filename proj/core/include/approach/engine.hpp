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

#ifndef APPROACH_ENGINE_HPP_
#define APPROACH_ENGINE_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "approach/common.hpp"
#include "approach/games.hpp"
#include "approach/regularizers.hpp"

namespace approach {

struct Schedule {
  double delta = 1.0;
  double K = 1.0;
  double M = 1.0;

  static Schedule FromCertificate(const Certificate& cert, double M);
  // sqrt(delta K / (M^2 t)).
  double Eta(int t) const;
  // 2 M sqrt(delta / (K T)).
  double Bound(int T) const;
};

double Eta(const Schedule& schedule, int t);

struct BoundPair {
  double expectation = 0.0;
  double high_prob = 0.0;
};

BoundPair BoundValues(const Schedule& schedule, int T, double radius,
                      double delta_conf);

// x_t = argmax <eta_prev Y, x> - h(x).
Vector FtrlStep(const Regularizer& h, const Vector& Y, double eta_prev,
                double tol = 1e-10);

// Produces the FTRL iterate and evaluates the support function of the set it
// plays on.
class Learner {
 public:
  virtual ~Learner() = default;
  virtual Vector Next(const Vector& Y, double eta) = 0;
  virtual double Support(const Vector& rbar) = 0;
};

class RegularizedLearner : public Learner {
 public:
  explicit RegularizedLearner(Regularizer h, double tol = 1e-10)
      : h_(std::move(h)), tol_(tol) {}
  Vector Next(const Vector& Y, double eta) override;
  double Support(const Vector& rbar) override;
  const Regularizer& regularizer() const { return h_; }

 private:
  Regularizer h_;
  double tol_;
  Vector last_;
};

struct StepRecord {
  int t = 0;
  Vector x;
  Vector action;
  std::int64_t pure = -1;
  Vector r;
  double inner = 0.0;
  double nu = 0.0;
  double support_value = 0.0;
  double bound_value = 0.0;
  double regret = std::numeric_limits<double>::quiet_NaN();
};

// Problem-specific bookkeeping called after every step.
class StepObserver {
 public:
  virtual ~StepObserver() = default;
  virtual void Observe(int t, const Decision& decision, std::int64_t pure,
                       const Vector& b) = 0;
  // Average regret after the last observed step.
  virtual double AverageRegret() const = 0;
};

struct RunOptions {
  int T = 1;
  double tol = 1e-9;
  double nu_hard_limit = kInf;
  bool mixed = false;
  std::uint64_t seed = 0;
  double delta_conf = 0.1;
  double radius = 1.0;
  // Drop per-step vectors to save memory.
  bool keep_vectors = true;
};

struct RunReport {
  std::vector<StepRecord> steps;
  Vector mean_payoff;
  double final_support = 0.0;
  double final_bound = 0.0;
  double high_prob_bound = 0.0;
  double slack_mean = 0.0;
  double final_regret = std::numeric_limits<double>::quiet_NaN();
  double max_inner_excess = -kInf;
  std::uint64_t seed = 0;
  bool aborted = false;
  std::string abort_reason;
  bool guarantee_ok = false;
};

RunReport Run(const Game& game, Learner& learner, Environment& env,
              const Schedule& schedule, const RunOptions& options,
              StepObserver* observer = nullptr);

// Same as Run with options.mixed forced on.
RunReport RunMixed(const Game& game, Learner& learner, Environment& env,
                   const Schedule& schedule, RunOptions options,
                   StepObserver* observer = nullptr);

// Draws an index from `weights` by inverse CDF with one uniform variate.
int DrawIndex(const std::vector<double>& weights, double u);

}  // namespace approach

#endif  // APPROACH_ENGINE_HPP_
