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

#ifndef APPROACH_PHI_REGRET_HPP_
#define APPROACH_PHI_REGRET_HPP_

#include <string>
#include <vector>

#include "approach/engine.hpp"
#include "approach/games.hpp"
#include "approach/regularizers.hpp"

namespace approach {

struct PhiFamily {
  enum class Kind { kTranspositions, kInternal, kAllMaps, kExternal, kCustom };
  Kind kind = Kind::kCustom;
  int d = 1;
  // maps[k][i] = image of action i under the k-th map (0-based).
  std::vector<std::vector<int>> maps;

  // Swaps i <-> j for i < j: d(d-1)/2 maps.
  static PhiFamily Transpositions(int d);
  // Maps sending i to j (j != i) and fixing everything else: d(d-1) maps.
  static PhiFamily Internal(int d);
  // All d^d maps, d <= 5.
  static PhiFamily AllMaps(int d);
  // Constant maps i -> j: plain external regret.
  static PhiFamily External(int d);
  static PhiFamily Custom(int d, std::vector<std::vector<int>> maps);

  int size() const { return static_cast<int>(maps.size()); }
  std::string ToString() const;
};

// (v_{phi(i)} - v_i)_{phi in Phi}.
Vector PhiPayoff(int i, const Vector& v, const PhiFamily& family);
// sum_i a_i (v_{phi(i)} - v_i).
Vector PhiExpectedPayoff(const Vector& a, const Vector& v,
                         const PhiFamily& family);

// Softmax of eta R with max subtraction.
Vector PhiFtrlWeights(const Vector& R, double eta);

// Row-stochastic matrix x~_{ij} = sum_{phi(i)=j} x_phi / ||x||_1.
Matrix PhiTransitionMatrix(const Vector& x, const PhiFamily& family);
// Stationary distribution of PhiTransitionMatrix(x); the uniform weight over
// Phi is used as reference ray when x = 0.
Vector PhiOracle(const Vector& x, const PhiFamily& family);

class PhiRegretTracker : public StepObserver {
 public:
  explicit PhiRegretTracker(PhiFamily family);

  // Adds one round with pure action i.
  void Add(int i, const Vector& v);
  // Adds one round in expectation over the mixed action a.
  void AddMixed(const Vector& a, const Vector& v);
  // Reg_T^Phi (sum form).
  double Regret() const;
  int rounds() const { return rounds_; }

  void Observe(int t, const Decision& decision, std::int64_t pure,
               const Vector& b) override;
  double AverageRegret() const override;

 private:
  PhiFamily family_;
  Matrix S_;
  int rounds_ = 0;
};

// Exact regret of a finished history of (i_t, v_t).
double PhiRegretEval(const std::vector<int>& actions,
                     const std::vector<Vector>& payoffs,
                     const PhiFamily& family);

class PhiGame : public Game {
 public:
  // Payoffs are multiplied by `payoff_scale`; (M, norm) is the bound the
  // caller certifies for the scaled payoff.
  explicit PhiGame(PhiFamily family, double payoff_scale = 1.0,
                   double M = 2.0, NormTag norm = NormTag::Lp(kInf));

  std::string name() const override;
  int payoff_dim() const override { return family_.size(); }
  int env_dim() const override { return family_.d; }
  double env_lo() const override { return -1.0; }
  double env_hi() const override { return 1.0; }
  FeasibleSet decision_set() const override;
  Decision Oracle(const Vector& x) const override;
  Vector Payoff(const Vector& action, const Vector& b) const override;
  bool has_pure_actions() const override { return true; }
  Vector PurePayoff(std::int64_t pure, const Vector& b) const override;
  double M() const override { return M_; }
  NormTag payoff_norm() const override { return norm_; }
  ConeSpec target() const override;

  const PhiFamily& family() const { return family_; }
  double payoff_scale() const { return scale_; }

 private:
  PhiFamily family_;
  double scale_;
  double M_;
  NormTag norm_;
};

// Entropic regularizer on Delta(Phi) and eta_t = sqrt(log|Phi| / (4t)).
Regularizer PhiRegularizer(const PhiFamily& family);
Schedule PhiSchedule(const PhiFamily& family);

}  // namespace approach

#endif  // APPROACH_PHI_REGRET_HPP_
