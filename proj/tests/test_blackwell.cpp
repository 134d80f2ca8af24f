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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "approach/blackwell.hpp"
#include "approach/regularizers.hpp"

using approach::BlackwellState;
using approach::ConeSpec;
using approach::PhiFamily;
using approach::PhiGame;
using approach::Rng;
using approach::Vector;

namespace {

Vector V(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

BlackwellState StateWithMean(const Vector& mean) {
  BlackwellState s(static_cast<int>(mean.size()));
  s.Add(mean);
  return s;
}

double Cosine(const Vector& a, const Vector& b) {
  return a.dot(b) / (a.norm() * b.norm());
}

}  // namespace

TEST_CASE("oracle input is the polar projection of the mean") {
  const ConeSpec C = ConeSpec::NegativeOrthant(2);
  CHECK((approach::BlackwellOracleInput(StateWithMean(V({3, -1})), C) -
         V({3, 0}))
            .norm() <= 1e-12);
  CHECK(approach::BlackwellOracleInput(StateWithMean(V({-1, -2})), C).norm() ==
        0.0);
  CHECK(approach::BlackwellOracleInput(BlackwellState(2), C).norm() == 0.0);
}

TEST_CASE("state mean averages the payoffs") {
  BlackwellState s(2);
  s.Add(V({1, 0}));
  s.Add(V({0, 3}));
  CHECK(s.t == 2);
  CHECK((s.Mean() - V({0.5, 1.5})).norm() <= 1e-15);
}

TEST_CASE("euclidean ftrl and blackwell inputs are positively colinear") {
  const ConeSpec C = ConeSpec::NegativeOrthant(2);
  const Vector w = V({1.5, -0.5});
  const auto h = approach::Regularizer::EuclideanSquared(
      approach::CapGenerator(approach::Polar(C), approach::NormTag::Lp(2.0)));
  const Vector ftrl = approach::ConjArgmax(h, w);
  const Vector bw = approach::BlackwellOracleInput(StateWithMean(w), C);
  CHECK((ftrl - V({1, 0})).norm() <= 1e-8);
  CHECK(Cosine(ftrl, bw) >= 1.0 - 1e-12);
}

TEST_CASE("equivalence on an external-regret game") {
  PhiGame game(PhiFamily::External(2));
  const auto report = approach::EquivalenceCheck(
      game, ConeSpec::NegativeOrthant(2), 500, 1, Vector::Ones(2));
  CHECK(report.ok);
  CHECK(report.steps == 500);
  CHECK(report.first_divergent == -1);
  CHECK(1.0 - report.min_cosine <= 1e-8);
  CHECK(report.max_action_diff <= 1e-9);
}

TEST_CASE("distance to the target respects the guarantee") {
  const auto game = approach::MakeBlackwellDemoGame(3);
  const std::vector<int> checkpoints = {10, 100, 1000};
  for (int kind = 0; kind < 2; ++kind) {
    auto env = approach::MakeEnvironment(
        kind == 0 ? approach::EnvironmentSpec::Adversarial()
                  : approach::EnvironmentSpec::UniformRandom(true),
        7);
    const auto report =
        approach::BlackwellRun(*game, game->target(), *env, 1000, checkpoints,
                               Vector::Ones(game->payoff_dim()));
    CHECK(report.ok);
    REQUIRE(report.distances.size() == checkpoints.size());
    for (size_t k = 0; k < checkpoints.size(); ++k) {
      CHECK(report.bounds[k] ==
            doctest::Approx(2.0 * std::sqrt(2.0) * game->M() /
                            std::sqrt(checkpoints[k])));
      CHECK(report.distances[k] <= report.bounds[k]);
    }
  }
}

TEST_CASE("demo game payoffs lie in the Euclidean ball of radius M") {
  for (int d = 2; d <= 5; ++d) {
    const auto game = approach::MakeBlackwellDemoGame(d);
    CHECK(game->M() == 2.0);
    for (int mask = 0; mask < (1 << d); ++mask) {
      Vector b(d);
      for (int j = 0; j < d; ++j) b[j] = (mask >> j) & 1 ? 1.0 : -1.0;
      for (int i = 0; i < d; ++i) {
        CHECK(game->PurePayoff(i, b).norm() <= 2.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("oracle is invariant under positive scaling of its input") {
  Rng rng(3);
  PhiGame game(PhiFamily::Transpositions(4));
  for (int k = 0; k < 30; ++k) {
    const Vector x = rng.Dirichlet(game.payoff_dim(), 0.5);
    const Vector a = game.Oracle(x).action;
    for (double lambda : {0.5, 2.0, 10.0}) {
      CHECK((game.Oracle(lambda * x).action - a).cwiseAbs().maxCoeff() <=
            1e-9);
    }
  }
}

TEST_CASE("learner reports the Euclidean distance of the mean") {
  approach::BlackwellLearner learner(ConeSpec::NegativeOrthant(3));
  CHECK(learner.Next(Vector::Zero(3), 1.0).norm() == 0.0);
  CHECK(learner.Support(V({3, -1, 4})) == doctest::Approx(5.0));
  CHECK(learner.Support(V({-3, -1, -4})) == 0.0);
}

TEST_CASE("schedule reproduces the Blackwell constant") {
  const auto s = approach::BlackwellSchedule(2.0);
  for (int t : {1, 16, 1000}) {
    CHECK(s.Bound(t) == doctest::Approx(4.0 * std::sqrt(2.0) / std::sqrt(t)));
  }
}
