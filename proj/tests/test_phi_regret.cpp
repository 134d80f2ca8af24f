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

#include "approach/phi_regret.hpp"

using approach::Matrix;
using approach::PhiFamily;
using approach::Rng;
using approach::Vector;

namespace {

Vector V(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

struct History {
  std::vector<int> actions;
  std::vector<Vector> payoffs;
};

History RandomHistory(int d, int T, Rng& rng) {
  History h;
  for (int t = 0; t < T; ++t) {
    h.actions.push_back(static_cast<int>(rng.Below(d)));
    h.payoffs.push_back(rng.UniformVector(d, -1.0, 1.0));
  }
  return h;
}

double MapGain(const History& h, const std::vector<int>& map) {
  double g = 0.0;
  for (size_t t = 0; t < h.actions.size(); ++t) {
    g += h.payoffs[t][map[h.actions[t]]] - h.payoffs[t][h.actions[t]];
  }
  return g;
}

double BruteForce(const History& h, const PhiFamily& f) {
  double best = -approach::kInf;
  for (const auto& map : f.maps) best = std::max(best, MapGain(h, map));
  return best;
}

}  // namespace

TEST_CASE("payoff example") {
  const Vector r =
      approach::PhiPayoff(0, V({0.3, 1.0}), PhiFamily::Transpositions(2));
  REQUIRE(r.size() == 1);
  CHECK(r[0] == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("expected payoff averages the pure payoffs") {
  Rng rng(1);
  const PhiFamily f = PhiFamily::Internal(4);
  for (int k = 0; k < 50; ++k) {
    const Vector a = rng.Dirichlet(4, 1.0);
    const Vector v = rng.UniformVector(4, -1.0, 1.0);
    Vector mix = Vector::Zero(f.size());
    for (int i = 0; i < 4; ++i) mix += a[i] * approach::PhiPayoff(i, v, f);
    CHECK((approach::PhiExpectedPayoff(a, v, f) - mix).norm() <= 1e-12);
  }
}

TEST_CASE("ftrl weights examples") {
  CHECK((approach::PhiFtrlWeights(Vector::Zero(3), 1.0) -
         Vector::Constant(3, 1.0 / 3.0))
            .norm() <= 1e-15);
  const Vector w = approach::PhiFtrlWeights(V({1, 0}), std::log(2.0));
  CHECK((w - V({2.0 / 3.0, 1.0 / 3.0})).norm() <= 1e-12);
  const Vector big = approach::PhiFtrlWeights(V({1000, 0}), 1.0);
  CHECK(big.allFinite());
  CHECK(big[0] == doctest::Approx(1.0));
}

TEST_CASE("oracle examples") {
  CHECK((approach::PhiOracle(V({1}), PhiFamily::Transpositions(2)) -
         V({0.5, 0.5}))
            .norm() <= 1e-12);
  CHECK((approach::PhiOracle(V({0.7, 0.3}), PhiFamily::External(2)) -
         V({0.7, 0.3}))
            .norm() <= 1e-12);
}

TEST_CASE("oracle returns a stationary distribution of the transition") {
  Rng rng(2);
  for (const PhiFamily& f :
       {PhiFamily::Transpositions(4), PhiFamily::Internal(3),
        PhiFamily::AllMaps(3), PhiFamily::External(5)}) {
    for (int k = 0; k < 30; ++k) {
      const Vector x = rng.Dirichlet(f.size(), 0.3);
      const Vector a = approach::PhiOracle(x, f);
      const Matrix P = approach::PhiTransitionMatrix(x, f);
      CHECK((P.rowwise().sum() - Vector::Ones(f.d)).cwiseAbs().maxCoeff() <=
            1e-12);
      CHECK(a.sum() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(a.minCoeff() >= -1e-12);
      CHECK((P.transpose() * a - a).cwiseAbs().maxCoeff() <= 1e-9);
      const Vector v = rng.UniformVector(f.d, -1.0, 1.0);
      CHECK(std::abs(approach::PhiExpectedPayoff(a, v, f).dot(x)) <= 1e-9);
    }
  }
}

TEST_CASE("oracle handles an absorbing internal map") {
  const PhiFamily f = PhiFamily::Internal(3);
  Vector x = Vector::Zero(f.size());
  for (int k = 0; k < f.size(); ++k) {
    if (f.maps[k][0] == 1 && f.maps[k][1] == 1 && f.maps[k][2] == 2) x[k] = 1;
  }
  REQUIRE(x.sum() == 1.0);
  const Vector a = approach::PhiOracle(x, f);
  CHECK(a[0] <= 1e-12);
  CHECK(a.sum() == doctest::Approx(1.0));
}

TEST_CASE("regret evaluation example") {
  CHECK(approach::PhiRegretEval({0, 0}, {V({0, 1}), V({0, 1})},
                                PhiFamily::External(2)) ==
        doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("regret evaluation matches a brute force over the family") {
  Rng rng(3);
  for (int d = 2; d <= 4; ++d) {
    const History h = RandomHistory(d, 60, rng);
    for (const PhiFamily& f :
         {PhiFamily::Transpositions(d), PhiFamily::Internal(d),
          PhiFamily::External(d), PhiFamily::AllMaps(d)}) {
      CHECK(approach::PhiRegretEval(h.actions, h.payoffs, f) ==
            doctest::Approx(BruteForce(h, f)).epsilon(1e-12));
    }
  }
}

TEST_CASE("swap regret over all maps is a sum of per-action maxima") {
  Rng rng(4);
  for (int d = 2; d <= 3; ++d) {
    for (int k = 0; k < 10; ++k) {
      const History h = RandomHistory(d, 40, rng);
      double total = 0.0;
      for (int i = 0; i < d; ++i) {
        double best = 0.0;
        for (int j = 0; j < d; ++j) {
          double g = 0.0;
          for (size_t t = 0; t < h.actions.size(); ++t) {
            if (h.actions[t] == i) g += h.payoffs[t][j] - h.payoffs[t][i];
          }
          best = std::max(best, g);
        }
        total += best;
      }
      CHECK(approach::PhiRegretEval(h.actions, h.payoffs,
                                    PhiFamily::AllMaps(d)) ==
            doctest::Approx(total).epsilon(1e-12));
    }
  }
}

TEST_CASE("internal regret is the best single reassignment") {
  Rng rng(5);
  const int d = 4;
  const History h = RandomHistory(d, 80, rng);
  double best = -approach::kInf;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      double g = 0.0;
      for (size_t t = 0; t < h.actions.size(); ++t) {
        if (h.actions[t] == i) g += h.payoffs[t][j] - h.payoffs[t][i];
      }
      best = std::max(best, g);
    }
  }
  CHECK(approach::PhiRegretEval(h.actions, h.payoffs, PhiFamily::Internal(d)) ==
        doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("tracker in mixed mode averages pure rounds") {
  Rng rng(6);
  const PhiFamily f = PhiFamily::Transpositions(3);
  approach::PhiRegretTracker mixed(f);
  approach::PhiRegretTracker pure(f);
  for (int t = 0; t < 20; ++t) {
    const Vector v = rng.UniformVector(3, -1.0, 1.0);
    mixed.AddMixed(Vector::Unit(3, t % 3), v);
    pure.Add(t % 3, v);
  }
  CHECK(mixed.Regret() == doctest::Approx(pure.Regret()).epsilon(1e-12));
  CHECK(pure.rounds() == 20);
  CHECK(pure.AverageRegret() == doctest::Approx(pure.Regret() / 20.0));
}

TEST_CASE("family sizes") {
  CHECK(PhiFamily::Transpositions(5).size() == 10);
  CHECK(PhiFamily::Internal(5).size() == 20);
  CHECK(PhiFamily::External(5).size() == 5);
  CHECK(PhiFamily::AllMaps(3).size() == 27);
  CHECK(PhiFamily::AllMaps(5).size() == 3125);
  CHECK_THROWS_AS(PhiFamily::AllMaps(6), approach::InputError);
}

TEST_CASE("schedule constants") {
  const auto s = approach::PhiSchedule(PhiFamily::Transpositions(4));
  CHECK(s.delta == doctest::Approx(std::log(6.0)));
  CHECK(s.Eta(5) == doctest::Approx(std::sqrt(std::log(6.0) / (4.0 * 5.0))));
  CHECK(s.Bound(100) ==
        doctest::Approx(4.0 * std::sqrt(std::log(6.0) / 100.0)));
}
