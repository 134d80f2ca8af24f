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
#include <memory>

#include "approach/combinatorial.hpp"
#include "approach/games.hpp"
#include "approach/global_cost.hpp"
#include "approach/phi_regret.hpp"

using approach::Decision;
using approach::EnvironmentSpec;
using approach::Game;
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

std::vector<Vector> Corners(const Game& g) {
  std::vector<Vector> out;
  const int k = g.env_dim();
  for (int mask = 0; mask < (1 << k); ++mask) {
    Vector b(k);
    for (int j = 0; j < k; ++j) b[j] = (mask >> j) & 1 ? g.env_hi() : g.env_lo();
    out.push_back(b);
  }
  return out;
}

std::vector<std::unique_ptr<Game>> ExactGames() {
  std::vector<std::unique_ptr<Game>> games;
  games.push_back(std::make_unique<PhiGame>(PhiFamily::Transpositions(3)));
  games.push_back(std::make_unique<PhiGame>(PhiFamily::AllMaps(3)));
  games.push_back(std::make_unique<PhiGame>(PhiFamily::Internal(4)));
  games.push_back(
      std::make_unique<approach::CombGame>(approach::CombInstance{5, 2}));
  return games;
}

Vector RandomAction(const Game& g, Rng& rng) {
  return approach::ProjectOnto(g.decision_set(),
                               rng.GaussianVector(approach::AmbientDim(
                                   g.decision_set())));
}

}  // namespace

TEST_CASE("global-cost payoff at the balanced action lies in the cone") {
  approach::GlobalCostGame game(2, approach::kInf);
  const Vector r = game.Payoff(V({0.5, 0.5}), V({1, 1}));
  CHECK((r - V({0.5, 0.5, 1, 1})).norm() == 0.0);
  CHECK(approach::InCone(game.target(), r));
}

TEST_CASE("dual condition holds for the global-cost game") {
  approach::GlobalCostGame game(2, 2.0);
  const auto report = approach::DualConditionCheck(game, game.target(), 20, 3);
  CHECK(report.samples == 20);
  CHECK(report.worst_residual <= 1e-6);
}

TEST_CASE("dual condition is trivial for the zero game") {
  PhiGame zero(PhiFamily::Transpositions(3), 0.0);
  const auto report = approach::DualConditionCheck(zero, zero.target(), 10, 1);
  CHECK(report.worst_residual == 0.0);
}

TEST_CASE("stationary oracle zeroes the inner product in the swap game") {
  const PhiFamily fam = PhiFamily::Transpositions(2);
  PhiGame game(fam);
  Rng rng(1);
  for (int k = 0; k < 20; ++k) {
    const Vector x = V({rng.Uniform(0.1, 3.0)});
    const Decision a = game.Oracle(x);
    for (const Vector& v : Corners(game)) {
      CHECK(std::abs(game.Payoff(a.action, v).dot(x)) <= 1e-12);
    }
  }
}

TEST_CASE("adversary at x = 0 takes the first candidate") {
  PhiGame game(PhiFamily::Transpositions(3));
  approach::AdversarialEnvironment env;
  const Decision a = game.Oracle(Vector::Zero(3));
  const Vector b = env.Next(game, a, Vector::Zero(3), 1);
  CHECK((b - Vector::Constant(3, -1.0)).norm() == 0.0);
}

TEST_CASE("adversary maximizes v2 - v1 against the first action") {
  PhiGame game(PhiFamily::Transpositions(2));
  approach::AdversarialEnvironment env;
  Decision a;
  a.action = V({1, 0});
  const Vector b = env.Next(game, a, V({1}), 1);
  CHECK((b - V({-1, 1})).norm() == 0.0);
}

TEST_CASE("global-cost adversary follows the coordinate sign rule") {
  approach::GlobalCostGame game(3, 2.0);
  approach::AdversarialEnvironment env;
  Rng rng(4);
  for (int k = 0; k < 50; ++k) {
    const Vector x = rng.GaussianVector(6);
    Decision a;
    a.action = rng.Dirichlet(3, 1.0);
    const Vector b = env.Next(game, a, x, 1);
    double best = -approach::kInf;
    for (const Vector& c : Corners(game)) {
      best = std::max(best, game.Payoff(a.action, c).dot(x));
    }
    CHECK(game.Payoff(a.action, b).dot(x) == doctest::Approx(best));
    for (int i = 0; i < 3; ++i) {
      CHECK((b[i] == 1.0) == (x[i] * a.action[i] + x[3 + i] > 0.0));
    }
  }
}

TEST_CASE("oracle outputs are decision actions satisfying the B-set bound") {
  Rng rng(5);
  for (const auto& game : ExactGames()) {
    for (int k = 0; k < 100; ++k) {
      const Vector x =
          dynamic_cast<const approach::CombGame*>(game.get()) != nullptr
              ? RandomAction(*game, rng)
              : rng.Dirichlet(game->payoff_dim(), 0.5);
      const Decision a = game->Oracle(x);
      CHECK(approach::Contains(game->decision_set(), a.action, 1e-8));
      for (const Vector& b : Corners(*game)) {
        CHECK(game->Payoff(a.action, b).dot(x) <= 1e-8);
      }
    }
  }
}

TEST_CASE("payoffs are bi-affine and bounded by M") {
  Rng rng(6);
  auto games = ExactGames();
  games.push_back(std::make_unique<approach::GlobalCostGame>(3, 2.0));
  for (const auto& game : games) {
    for (int k = 0; k < 30; ++k) {
      const Vector a = RandomAction(*game, rng);
      const Vector ap = RandomAction(*game, rng);
      const Vector b =
          rng.UniformVector(game->env_dim(), game->env_lo(), game->env_hi());
      const Vector bp =
          rng.UniformVector(game->env_dim(), game->env_lo(), game->env_hi());
      const double l = rng.Uniform();
      CHECK((game->Payoff(l * a + (1 - l) * ap, b) -
             (l * game->Payoff(a, b) + (1 - l) * game->Payoff(ap, b)))
                .cwiseAbs()
                .maxCoeff() <= 1e-10);
      CHECK((game->Payoff(a, l * b + (1 - l) * bp) -
             (l * game->Payoff(a, b) + (1 - l) * game->Payoff(a, bp)))
                .cwiseAbs()
                .maxCoeff() <= 1e-10);
      CHECK(game->payoff_norm().Eval(game->Payoff(a, b)) <= game->M() + 1e-12);
    }
  }
}

TEST_CASE("environments stay in the box and replay sequences") {
  PhiGame game(PhiFamily::Transpositions(3));
  Decision a = game.Oracle(Vector::Ones(3));
  for (bool corners : {false, true}) {
    auto env = approach::MakeEnvironment(EnvironmentSpec::UniformRandom(corners),
                                         7);
    for (int t = 1; t <= 100; ++t) {
      const Vector b = env->Next(game, a, Vector::Ones(3), t);
      CHECK(b.minCoeff() >= -1.0);
      CHECK(b.maxCoeff() <= 1.0);
      if (corners) CHECK((b.cwiseAbs().array() == 1.0).all());
    }
  }
  approach::FixedSequenceEnvironment fixed({V({0.1, 0.2, 0.3}), V({-1, 0, 1})});
  CHECK((fixed.Next(game, a, Vector::Ones(3), 1) - V({0.1, 0.2, 0.3})).norm() ==
        0.0);
  CHECK((fixed.Next(game, a, Vector::Ones(3), 2) - V({-1, 0, 1})).norm() == 0.0);
}

TEST_CASE("random environments depend only on the run seed") {
  PhiGame game(PhiFamily::Transpositions(3));
  const Decision a = game.Oracle(Vector::Ones(3));
  auto e1 = approach::MakeEnvironment(EnvironmentSpec::UniformRandom(), 42);
  auto e2 = approach::MakeEnvironment(EnvironmentSpec::UniformRandom(), 42);
  for (int t = 1; t <= 20; ++t) {
    CHECK((e1->Next(game, a, Vector::Ones(3), t) -
           e2->Next(game, a, Vector::Ones(3), t))
              .norm() == 0.0);
  }
}
