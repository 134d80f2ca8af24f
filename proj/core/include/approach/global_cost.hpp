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

#ifndef APPROACH_GLOBAL_COST_HPP_
#define APPROACH_GLOBAL_COST_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "approach/engine.hpp"
#include "approach/games.hpp"
#include "approach/geometry.hpp"
#include "approach/regularizers.hpp"

namespace approach {

struct GlobalCostInstance {
  int d = 2;
  double p = kInf;
  double q = 1.0;
  double A = 1.0;
  double q_prime = 2.0;
  // True when q' = 1 + 1/(2 log d - 1) fell outside (1, 2] and was clamped.
  bool clamped = false;
  int cut_budget = 200;
  double solver_tol = 1e-6;
  int max_rounds = 50;

  static GlobalCostInstance Make(int d, double p);
};

// r(a, l) = (a . l, l).
Vector GlobalCostPayoff(const Vector& a, const Vector& loss);

class GlobalCostGame : public Game {
 public:
  // M and norm describe the payoff bound used by the chosen analysis.
  GlobalCostGame(int d, double p, double M = 2.0);
  GlobalCostGame(int d, double p, double M, NormTag norm);

  std::string name() const override;
  int payoff_dim() const override { return 2 * d_; }
  int env_dim() const override { return d_; }
  FeasibleSet decision_set() const override { return SimplexSet{d_, 1.0}; }
  // argmin_{a in simplex} sum max(0, z_i a_i + z'_i), with the optimal value
  // reported as slack.
  Decision Oracle(const Vector& x) const override;
  Vector Payoff(const Vector& action, const Vector& b) const override;
  double M() const override { return M_; }
  NormTag payoff_norm() const override { return norm_; }
  ConeSpec target() const override { return GlobalCostCone{d_, p_}; }

 private:
  int d_;
  double p_;
  double M_;
  NormTag norm_;
};

struct Separation {
  bool inside = true;
  double value = 0.0;  // max over the simplex of the separation objective
  Vector y;            // cut, first block
  Vector yp;           // cut, second block (the maximizing y')
};

// Decides (z, z') in C-polar through
// max_{y' in simplex} ||z_+||_q phi_p(y') + <z', y'>.
Separation PolarSeparation(const Vector& z, const Vector& zp, double p,
                           double tol = 1e-9);

// Outer approximation {||x||_ball <= 1} cap {<c_j, x> <= 0} of the capped
// polar cone, with least-recently-active eviction of non-canonical cuts.
class PolarApprox {
 public:
  PolarApprox(int d, double p, NormTag ball, int budget);

  GeneratorSet Generator() const;
  // Adds a normalized cut; returns false when nothing could be added.
  bool AddCut(const Vector& cut);
  // Refreshes the activity stamp of every cut tight at x.
  void Touch(const Vector& x);

  int size() const { return static_cast<int>(cuts_.size()); }
  int pinned() const { return pinned_; }
  int evictions() const { return evictions_; }
  int budget() const { return budget_; }
  const std::vector<Vector>& cuts() const { return cuts_; }
  Matrix CutMatrix() const;
  const NormTag& ball() const { return ball_; }

 private:
  int d_;
  double p_;
  NormTag ball_;
  int budget_;
  int pinned_ = 0;
  int evictions_ = 0;
  std::uint64_t clock_ = 0;
  std::vector<Vector> cuts_;
  std::vector<std::uint64_t> stamps_;
};

struct GcStep {
  Vector x;
  double nu = 0.0;
  int rounds = 0;
  int cuts_added = 0;
  bool converged = false;
};

// Cutting-plane FTRL step: maximizes <eta Y, x> - h(x) over the outer
// approximation, separating and adding cuts until x is certified or the
// round limit is reached; nu is the oracle slack at the returned x.
GcStep FtrlArgmaxGc(const Regularizer& h, PolarApprox& approx, const Vector& Y,
                    double eta, double tol, int max_rounds,
                    const Vector* warm = nullptr);

class CuttingPlaneLearner : public Learner {
 public:
  CuttingPlaneLearner(Regularizer h, PolarApprox approx, double tol,
                      int max_rounds);
  Vector Next(const Vector& Y, double eta) override;
  double Support(const Vector& rbar) override;

  const PolarApprox& approx() const { return approx_; }
  int total_rounds() const { return total_rounds_; }
  int unconverged_steps() const { return unconverged_; }

 private:
  Regularizer h_;
  PolarApprox approx_;
  double tol_;
  int max_rounds_;
  Vector last_;
  int total_rounds_ = 0;
  int unconverged_ = 0;
};

struct GcConfiguration {
  GlobalCostInstance inst;
  Regularizer h;
  Schedule schedule;
  NormTag ball;
};

// Composite regularizer with A = min{d^{1-2/p}, 1}, q' = 1 + 1/(2 log d - 1)
// (clamped to 2), M = 2.
GcConfiguration ConfigureLpAlgorithm(int d, double p);
// eta_t = 1 / (2 sqrt(t max{d^{2/p-1}, e (2 log d - 1)})).
double LpTheoremEta(int d, double p, int t);
// 4/sqrt(T) max{d^{1/p-1/2}, sqrt(2 e log d)}.
double LpTheoremBound(int d, double p, int T);

// (q'-norm squared)/2 on the capped dual ball of `norm` (a global-cost
// primal norm), eta_t = d^{1/q'-1} sqrt(delta (q'-1)/t), M = 1.
GcConfiguration ConfigureNormAlgorithm(const NormTag& norm, double q_prime,
                                       double delta);
// 2 d^{1-1/q'} sqrt(delta / ((q'-1) T)).
double NormTheoremBound(int d, double q_prime, double delta, int T);

class GlobalCostRegretTracker : public StepObserver {
 public:
  GlobalCostRegretTracker(int d, double p);
  void Add(const Vector& a, const Vector& loss);
  // ||mean(a . l)||_p - min_a ||a . mean(l)||_p.
  double Regret() const;

  void Observe(int t, const Decision& decision, std::int64_t pure,
               const Vector& b) override;
  double AverageRegret() const override { return Regret(); }

 private:
  int d_;
  double p_;
  Vector cost_;
  Vector loss_;
  int rounds_ = 0;
};

double EvalRegret(const std::vector<Vector>& actions,
                  const std::vector<Vector>& losses, double p);

}  // namespace approach

#endif  // APPROACH_GLOBAL_COST_HPP_
