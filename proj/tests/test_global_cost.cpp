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

#include "approach/global_cost.hpp"
#include "approach/solvers.hpp"

using approach::GcConfiguration;
using approach::kInf;
using approach::NormTag;
using approach::PolarApprox;
using approach::Rng;
using approach::Vector;

namespace {

Vector V(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

double LpNormOf(const Vector& v, double p) {
  if (std::isinf(p)) return v.cwiseAbs().maxCoeff();
  return std::pow(v.cwiseAbs().array().pow(p).sum(), 1.0 / p);
}

Vector Join(const Vector& a, const Vector& b) {
  Vector out(a.size() + b.size());
  out << a, b;
  return out;
}

}  // namespace

TEST_CASE("payoff stacks the weighted loss over the loss") {
  const Vector r = approach::GlobalCostPayoff(V({0.25, 0.75}), V({1, 0.5}));
  CHECK((r - V({0.25, 0.375, 1, 0.5})).norm() <= 1e-15);
}

TEST_CASE("payoff stays within the certified bound") {
  Rng rng(1);
  for (int k = 0; k < 200; ++k) {
    const int d = 2 + static_cast<int>(rng.Below(5));
    const Vector a = rng.Dirichlet(d, 1.0);
    const Vector l = rng.UniformVector(d, 0.0, 1.0);
    const Vector r = approach::GlobalCostPayoff(a, l);
    CHECK(r.head(d).cwiseAbs().sum() + r.tail(d).cwiseAbs().maxCoeff() <=
          2.0 + 1e-12);
  }
}

TEST_CASE("polar separation examples") {
  const auto zero = approach::PolarSeparation(Vector::Zero(2), Vector::Zero(2),
                                              kInf);
  CHECK(zero.inside);
  const auto out = approach::PolarSeparation(V({1, 0}), Vector::Zero(2), kInf);
  CHECK_FALSE(out.inside);
  CHECK(out.value == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(std::abs(out.yp[0] - out.yp[1]) <= 1e-6);
  const auto in = approach::PolarSeparation(V({1, 0}), V({-1, -1}), kInf);
  CHECK(in.inside);
}

TEST_CASE("separating cuts lie in the cone and cut off the query") {
  Rng rng(2);
  int separated = 0;
  for (int k = 0; k < 100; ++k) {
    const int d = 2 + static_cast<int>(rng.Below(3));
    const double p = std::vector<double>{1.5, 2.0, 3.0, kInf}[rng.Below(4)];
    const Vector z = rng.GaussianVector(d);
    const Vector zp = rng.GaussianVector(d);
    const auto sep = approach::PolarSeparation(z, zp, p);
    if (sep.inside) continue;
    ++separated;
    const Vector cut = Join(sep.y, sep.yp);
    CHECK(approach::InCone(approach::GlobalCostCone{d, p}, cut, 1e-8));
    CHECK(cut.dot(Join(z, zp)) == doctest::Approx(sep.value).epsilon(1e-8));
    CHECK(sep.value > 0.0);
  }
  CHECK(separated >= 10);
}

TEST_CASE("cutting-plane step at the origin") {
  const GcConfiguration cfg = approach::ConfigureLpAlgorithm(2, kInf);
  PolarApprox approx(2, kInf, cfg.ball, 200);
  const auto step = approach::FtrlArgmaxGc(cfg.h, approx, Vector::Zero(4), 1.0,
                                           1e-6, 50);
  CHECK(step.x.norm() <= 1e-9);
  CHECK(step.nu <= 1e-9);
}

TEST_CASE("cutting-plane step converges on a single direction") {
  const GcConfiguration cfg = approach::ConfigureLpAlgorithm(2, kInf);
  PolarApprox approx(2, kInf, cfg.ball, 200);
  const auto step = approach::FtrlArgmaxGc(cfg.h, approx, V({1, 0, 0, 0}),
                                           1.0, 1e-6, 50);
  CHECK(step.nu <= 1e-3);
  CHECK(approx.size() <= 50);
  CHECK(cfg.ball.Eval(step.x) <= 1.0 + 1e-6);
  for (const Vector& c : approx.cuts()) CHECK(c.dot(step.x) <= 1e-6);
}

TEST_CASE("cutting-plane iterates stay feasible for random directions") {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const int d = 2 + static_cast<int>(rng.Below(3));
    const double p = std::vector<double>{2.0, 3.0, kInf}[rng.Below(3)];
    const GcConfiguration cfg = approach::ConfigureLpAlgorithm(d, p);
    PolarApprox approx(d, p, cfg.ball, 100);
    const auto step = approach::FtrlArgmaxGc(
        cfg.h, approx, rng.GaussianVector(2 * d), 1.0, 1e-6, 50);
    CHECK(cfg.ball.Eval(step.x) <= 1.0 + 1e-6);
    for (const Vector& c : approx.cuts()) CHECK(c.dot(step.x) <= 1e-6);
    CHECK(approx.size() <= 100);
  }
}

TEST_CASE("lp configuration constants") {
  const GcConfiguration cfg = approach::ConfigureLpAlgorithm(4, kInf);
  CHECK(cfg.inst.q_prime ==
        doctest::Approx(1.0 + 1.0 / (2.0 * std::log(4.0) - 1.0)));
  CHECK(cfg.inst.q_prime == doctest::Approx(1.5641).epsilon(1e-4));
  CHECK(cfg.h.A == doctest::Approx(1.0));
  CHECK(approach::ConfigureLpAlgorithm(8, 1.5).h.A ==
        doctest::Approx(std::pow(8.0, 1.0 - 2.0 / 1.5)));
  for (int t = 1; t <= 50; ++t) {
    CHECK(cfg.schedule.Eta(t) ==
          doctest::Approx(approach::LpTheoremEta(4, kInf, t)).epsilon(1e-12));
    CHECK(approach::LpTheoremEta(4, kInf, t) ==
          doctest::Approx(1.0 / (2.0 * std::sqrt(t * std::exp(1.0) *
                                                 (2.0 * std::log(4.0) - 1.0))))
              .epsilon(1e-12));
  }
  CHECK(approach::LpTheoremBound(3, kInf, 4096) ==
        doctest::Approx(0.152744).epsilon(1e-5));
}

TEST_CASE("norm configuration constants") {
  const GcConfiguration cfg = approach::ConfigureNormAlgorithm(
      NormTag::GlobalCostPrimal(2, 2.0), 2.0, 1.0);
  for (int t = 1; t <= 20; ++t) {
    CHECK(cfg.schedule.Eta(t) ==
          doctest::Approx(std::pow(2.0, -0.5) / std::sqrt(t)).epsilon(1e-12));
  }
  CHECK(cfg.schedule.M == 1.0);
  CHECK(approach::NormTheoremBound(2, 2.0, 1.0, 4096) ==
        doctest::Approx(0.0441942).epsilon(1e-6));
}

TEST_CASE("regret evaluation example") {
  const std::vector<Vector> actions = {V({1, 0}), V({0, 1})};
  const std::vector<Vector> losses = {V({1, 0}), V({0, 1})};
  CHECK(approach::EvalRegret(actions, losses, kInf) ==
        doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("regret tracker agrees with batch evaluation") {
  Rng rng(4);
  for (double p : {1.5, 2.0, kInf}) {
    approach::GlobalCostRegretTracker tracker(3, p);
    std::vector<Vector> actions, losses;
    for (int t = 0; t < 50; ++t) {
      actions.push_back(rng.Dirichlet(3, 1.0));
      losses.push_back(rng.UniformVector(3, 0.0, 1.0));
      tracker.Add(actions.back(), losses.back());
    }
    CHECK(tracker.Regret() ==
          doctest::Approx(approach::EvalRegret(actions, losses, p))
              .epsilon(1e-9));
  }
}

TEST_CASE("largest weighted norm over the simplex is the max coordinate") {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const int d = 2 + static_cast<int>(rng.Below(4));
    const double p = std::vector<double>{1.5, 2.0, 4.0, kInf}[rng.Below(4)];
    const Vector y = rng.UniformVector(d, 0.0, 1.0);
    double best = 0.0;
    for (int i = 0; i < d; ++i) {
      best = std::max(best, LpNormOf(Vector::Unit(d, i).cwiseProduct(y), p));
    }
    for (int s = 0; s < 50; ++s) {
      CHECK(LpNormOf(rng.Dirichlet(d, 0.5).cwiseProduct(y), p) <=
            best + 1e-12);
    }
    CHECK(best == doctest::Approx(y.maxCoeff()).epsilon(1e-12));
  }
}

TEST_CASE("global-cost norms satisfy the Holder inequality") {
  Rng rng(6);
  for (double p : {2.0, kInf}) {
    const NormTag primal = NormTag::GlobalCostPrimal(3, p);
    const NormTag dual = primal.Dual();
    for (int k = 0; k < 200; ++k) {
      const Vector u = rng.GaussianVector(6);
      const Vector w = rng.GaussianVector(6);
      CHECK(u.dot(w) <= primal.Eval(u) * dual.Eval(w) + 1e-9);
    }
  }
}

TEST_CASE("regret is dominated by the certified support value") {
  const int d = 3;
  const double p = 2.0;
  const GcConfiguration cfg = approach::ConfigureLpAlgorithm(d, p);
  approach::GlobalCostGame game(d, p);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    approach::CuttingPlaneLearner learner(
        cfg.h, PolarApprox(d, p, cfg.ball, 200), 1e-6, 50);
    approach::UniformRandomEnvironment env(seed, false);
    approach::GlobalCostRegretTracker tracker(d, p);
    approach::RunOptions options;
    options.T = 300;
    options.tol = 1e-6;
    options.seed = seed;
    const auto report =
        approach::Run(game, learner, env, cfg.schedule, options, &tracker);
    REQUIRE_FALSE(report.aborted);
    CHECK(report.final_regret <=
          report.final_support + report.slack_mean + 1e-6);
    CHECK(report.final_support <=
          report.final_bound + report.slack_mean + 1e-6);
  }
}
