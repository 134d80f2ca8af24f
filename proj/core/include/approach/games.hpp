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

#ifndef APPROACH_GAMES_HPP_
#define APPROACH_GAMES_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "approach/common.hpp"
#include "approach/geometry.hpp"
#include "approach/random.hpp"
#include "approach/solvers.hpp"

namespace approach {

// A decision action produced by a B-set oracle. `action` is the point of the
// convex decision set; when the game has finitely many pure actions,
// (pure_ids, pure_weights) is a distribution over them whose mean payoff
// equals the payoff of `action`.
struct Decision {
  Vector action;
  std::vector<std::int64_t> pure_ids;
  std::vector<double> pure_weights;
  double nu = 0.0;
};

class Game {
 public:
  virtual ~Game() = default;

  virtual std::string name() const = 0;
  virtual int payoff_dim() const = 0;
  virtual int env_dim() const = 0;
  virtual double env_lo() const { return 0.0; }
  virtual double env_hi() const { return 1.0; }
  // Convex decision set containing every oracle output.
  virtual FeasibleSet decision_set() const = 0;

  virtual Decision Oracle(const Vector& x) const = 0;
  // Payoff of a point of the decision set (bi-affine).
  virtual Vector Payoff(const Vector& action, const Vector& b) const = 0;
  virtual bool has_pure_actions() const { return false; }
  virtual Vector PurePayoff(std::int64_t pure, const Vector& b) const;

  virtual double M() const = 0;
  // Norm under which ||r|| <= M.
  virtual NormTag payoff_norm() const = 0;
  virtual ConeSpec target() const = 0;
};

struct EnvironmentSpec {
  enum class Kind { kAdversarial, kUniformRandom, kFixedSequence };
  Kind kind = Kind::kAdversarial;
  // kUniformRandom: draw box corners instead of uniform points.
  bool corners = false;
  std::uint64_t seed = 0;
  std::vector<Vector> sequence;

  static EnvironmentSpec Adversarial();
  static EnvironmentSpec UniformRandom(bool corners = false);
  static EnvironmentSpec FixedSequence(std::vector<Vector> sequence);
  std::string ToString() const;
};

class Environment {
 public:
  virtual ~Environment() = default;
  // Chooses b_t after seeing the mixed action a_t (never the pure draw).
  virtual Vector Next(const Game& game, const Decision& a, const Vector& x,
                      int t) = 0;
};

// Coefficient-sign rule: the best corner of the box for
// b -> <r(a, b), x>, ties resolved towards the lower bound.
class AdversarialEnvironment : public Environment {
 public:
  Vector Next(const Game& game, const Decision& a, const Vector& x,
              int t) override;
};

class UniformRandomEnvironment : public Environment {
 public:
  UniformRandomEnvironment(std::uint64_t seed, bool corners)
      : rng_(seed), corners_(corners) {}
  Vector Next(const Game& game, const Decision& a, const Vector& x,
              int t) override;

 private:
  Rng rng_;
  bool corners_;
};

class FixedSequenceEnvironment : public Environment {
 public:
  explicit FixedSequenceEnvironment(std::vector<Vector> sequence);
  Vector Next(const Game& game, const Decision& a, const Vector& x,
              int t) override;

 private:
  std::vector<Vector> sequence_;
};

// Environment for one run; `run_seed` feeds the random kinds.
std::unique_ptr<Environment> MakeEnvironment(const EnvironmentSpec& spec,
                                             std::uint64_t run_seed);

struct DualConditionReport {
  double worst_residual = 0.0;
  Vector worst_b;
  int samples = 0;
};

// For sampled b, searches a in the decision set with r(a, b) in C by
// projected gradient on the squared membership residual.
DualConditionReport DualConditionCheck(const Game& game, const ConeSpec& C,
                                       int b_samples, std::uint64_t seed);

}  // namespace approach

#endif  // APPROACH_GAMES_HPP_
