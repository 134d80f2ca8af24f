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

#include "approach/blackwell.hpp"

#include <algorithm>
#include <cmath>

#include "approach/regularizers.hpp"

namespace approach {

void BlackwellState::Add(const Vector& r) {
  RequireDim(r, sum.size(), "BlackwellState::Add");
  sum += r;
  ++t;
}

Vector BlackwellState::Mean() const {
  return t > 0 ? Vector(sum / static_cast<double>(t))
               : Vector(Vector::Zero(sum.size()));
}

Vector BlackwellOracleInput(const BlackwellState& state, const ConeSpec& C) {
  if (state.t == 0) return Vector::Zero(state.sum.size());
  return MoreauDecompose(state.Mean(), C).second;
}

Decision BlackwellStep(const BlackwellState& state, const ConeSpec& C,
                       const Game& game, const Vector& reference) {
  const Vector input = BlackwellOracleInput(state, C);
  if (input.isZero(0.0)) return game.Oracle(reference);
  return game.Oracle(input);
}

BlackwellRunReport BlackwellRun(const Game& game, const ConeSpec& C,
                                Environment& env, int T,
                                const std::vector<int>& checkpoints,
                                const Vector& reference) {
  if (T < 1) throw InputError("BlackwellRun: T must be >= 1");
  BlackwellState state(game.payoff_dim());
  BlackwellRunReport report;
  size_t next = 0;
  for (int t = 1; t <= T; ++t) {
    const Vector input = BlackwellOracleInput(state, C);
    const Decision dec = BlackwellStep(state, C, game, reference);
    const Vector b = env.Next(game, dec, input, t);
    state.Add(game.Payoff(dec.action, b));
    while (next < checkpoints.size() && checkpoints[next] == t) {
      const Vector mean = state.Mean();
      const double dist = MoreauDecompose(mean, C).second.norm();
      const double bound =
          2.0 * std::sqrt(2.0) * game.M() / std::sqrt(static_cast<double>(t));
      report.checkpoints.push_back(t);
      report.distances.push_back(dist);
      report.bounds.push_back(bound);
      if (dist > bound) report.ok = false;
      ++next;
    }
  }
  report.mean_payoff = state.Mean();
  return report;
}

Vector BlackwellLearner::Next(const Vector& Y, double /*eta*/) {
  ++t_;
  if (t_ == 1) return Vector::Zero(Y.size());
  return MoreauDecompose(Y / static_cast<double>(t_ - 1), C_).second;
}

double BlackwellLearner::Support(const Vector& rbar) {
  return MoreauDecompose(rbar, C_).second.norm();
}

Schedule BlackwellSchedule(double M) {
  Schedule s;
  s.delta = 2.0;
  s.K = 1.0;
  s.M = M;
  return s;
}

std::unique_ptr<PhiGame> MakeBlackwellDemoGame(int d) {
  if (d < 2) throw InputError("MakeBlackwellDemoGame: d must be >= 2");
  return std::make_unique<PhiGame>(PhiFamily::External(d),
                                   1.0 / std::sqrt(d - 1.0), 2.0,
                                   NormTag::Lp(2.0));
}

EquivalenceReport EquivalenceCheck(const Game& game, const ConeSpec& C, int T,
                                   std::uint64_t seed,
                                   const Vector& reference) {
  const int n = game.payoff_dim();
  const Regularizer h =
      Regularizer::EuclideanSquared(CapGenerator(Polar(C), NormTag::Lp(2.0)));
  Schedule schedule;
  schedule.delta = 0.5;
  schedule.K = 1.0;
  schedule.M = game.M();
  UniformRandomEnvironment env(seed, false);
  BlackwellState state(n);
  Vector Y = Vector::Zero(n);
  EquivalenceReport report;
  for (int t = 1; t <= T; ++t) {
    const Vector u = BlackwellOracleInput(state, C);
    const Vector x = ConjArgmax(h, schedule.Eta(t == 1 ? 1 : t - 1) * Y);
    const double nu = u.norm();
    const double nx = x.norm();
    const double scale = 1e-12 * (1.0 + Y.norm());
    double cosine = 1.0;
    bool colinear;
    if (nu <= scale && nx <= scale) {
      colinear = true;
    } else if (nu <= scale || nx <= scale) {
      colinear = false;
      cosine = 0.0;
    } else {
      cosine = u.dot(x) / (nu * nx);
      colinear = cosine >= 1.0 - 1e-8;
    }
    const Decision a_bw = game.Oracle(nu <= scale ? reference : u);
    const Decision a_ftrl = game.Oracle(nx <= scale ? reference : x);
    const double diff = (a_bw.action - a_ftrl.action).cwiseAbs().maxCoeff();
    report.min_cosine = std::min(report.min_cosine, cosine);
    report.max_action_diff = std::max(report.max_action_diff, diff);
    if ((!colinear || diff > 1e-9) && report.ok) {
      report.ok = false;
      report.first_divergent = t;
      report.blackwell_input = u;
      report.ftrl_input = x;
    }
    const Vector b = env.Next(game, a_bw, u, t);
    const Vector r = game.Payoff(a_bw.action, b);
    state.Add(r);
    Y += r;
    report.steps = t;
  }
  return report;
}

}  // namespace approach
