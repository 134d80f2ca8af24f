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

#include <benchmark/benchmark.h>

#include "approach/approach.hpp"

namespace {

using approach::Rng;
using approach::Vector;

void BM_EntropicArgmax(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto h = approach::Regularizer::Entropic(d);
  Rng rng(1);
  const Vector y = rng.GaussianVector(d);
  for (auto _ : state) benchmark::DoNotOptimize(approach::ConjArgmax(h, y));
}
BENCHMARK(BM_EntropicArgmax)->Arg(8)->Arg(64)->Arg(512);

void BM_ScaledEntropicArgmax(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(2);
  const Vector y = rng.GaussianVector(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(approach::ScaledEntropicArgmax(y, d / 4));
  }
}
BENCHMARK(BM_ScaledEntropicArgmax)->Arg(8)->Arg(64)->Arg(512);

void BM_ProjectCappedSimplex(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(3);
  const Vector v = rng.GaussianVector(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(approach::ProjectCappedSimplex(v, d / 4));
  }
}
BENCHMARK(BM_ProjectCappedSimplex)->Arg(8)->Arg(64)->Arg(512);

void BM_CaratheodoryDecompose(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(4);
  const Vector x = approach::ProjectCappedSimplex(rng.GaussianVector(d), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(approach::CaratheodoryDecompose(x, 2));
  }
}
BENCHMARK(BM_CaratheodoryDecompose)->Arg(8)->Arg(32);

void BM_NuOracle(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(5);
  const Vector z = rng.GaussianVector(d);
  const Vector zp = rng.GaussianVector(d);
  for (auto _ : state) benchmark::DoNotOptimize(approach::NuOracle(z, zp));
}
BENCHMARK(BM_NuOracle)->Arg(4)->Arg(16)->Arg(64);

void BM_PhiOracle(benchmark::State& state) {
  const auto family =
      approach::PhiFamily::Transpositions(static_cast<int>(state.range(0)));
  Rng rng(6);
  const Vector x = rng.Dirichlet(family.size(), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(approach::PhiOracle(x, family));
  }
}
BENCHMARK(BM_PhiOracle)->Arg(4)->Arg(16);

void BM_LpSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  approach::LpProblem lp;
  lp.c = rng.GaussianVector(n);
  lp.A = approach::Matrix::NullaryExpr(2 * n, n,
                                       [&]() { return rng.Uniform(0.1, 1.0); });
  lp.b = rng.UniformVector(2 * n, 0.5, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(approach::LpSolve(lp));
}
BENCHMARK(BM_LpSolve)->Arg(8)->Arg(32)->Arg(128);

void BM_PolarSeparation(benchmark::State& state) {
  Rng rng(8);
  const Vector z = rng.GaussianVector(4);
  const Vector zp = rng.GaussianVector(4);
  const double p = state.range(0) == 0 ? approach::kInf : 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(approach::PolarSeparation(z, zp, p));
  }
}
BENCHMARK(BM_PolarSeparation)->Arg(0)->Arg(2);

void BM_SwapRun(benchmark::State& state) {
  const auto family = approach::PhiFamily::Transpositions(4);
  approach::PhiGame game(family);
  approach::RunOptions options;
  options.T = static_cast<int>(state.range(0));
  options.mixed = true;
  options.keep_vectors = false;
  for (auto _ : state) {
    approach::RegularizedLearner learner(approach::PhiRegularizer(family));
    approach::UniformRandomEnvironment env(1, true);
    approach::PhiRegretTracker tracker(family);
    benchmark::DoNotOptimize(approach::Run(game, learner, env,
                                           approach::PhiSchedule(family),
                                           options, &tracker));
  }
  state.SetItemsProcessed(state.iterations() * options.T);
}
BENCHMARK(BM_SwapRun)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_GlobalCostRun(benchmark::State& state) {
  const int d = 3;
  const double p = state.range(0) == 0 ? approach::kInf : 2.0;
  const auto cfg = approach::ConfigureLpAlgorithm(d, p);
  approach::GlobalCostGame game(d, p);
  approach::RunOptions options;
  options.T = 256;
  options.tol = 1e-6;
  options.keep_vectors = false;
  for (auto _ : state) {
    approach::CuttingPlaneLearner learner(
        cfg.h, approach::PolarApprox(d, p, cfg.ball, 200), 1e-6, 50);
    approach::UniformRandomEnvironment env(1, false);
    benchmark::DoNotOptimize(
        approach::Run(game, learner, env, cfg.schedule, options));
  }
  state.SetItemsProcessed(state.iterations() * options.T);
}
BENCHMARK(BM_GlobalCostRun)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
