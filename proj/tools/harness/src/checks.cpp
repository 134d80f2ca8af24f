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

#include "approach_harness/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "approach/approach.hpp"
#include "approach_harness/config.hpp"
#include "approach_harness/runner.hpp"

namespace approach::harness {
namespace {

constexpr int kHorizon = 4096;

// Passes when value <= limit.
CheckResult Upper(std::string name, double value, double limit,
                  std::string detail = "") {
  CheckResult r;
  r.name = std::move(name);
  r.value = value;
  r.limit = limit;
  r.margin = limit - value;
  r.pass = value <= limit;
  r.detail = std::move(detail);
  return r;
}

// Runs fn(i) for i in [0, n) on the harness thread pool.
template <typename F>
void ParallelFor(int n, F fn) {
  const int threads = std::min(ThreadCount(), n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<std::uint64_t> Seeds(std::uint64_t master, int n) {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < n; ++i) out.push_back(DeriveSeed(master, i));
  return out;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string Fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

// Adversarial and random-corner environments.
std::vector<std::pair<std::string, EnvironmentSpec>> CornerEnvironments() {
  return {{"adversarial", EnvironmentSpec::Adversarial()},
          {"uniform_corners", EnvironmentSpec::UniformRandom(true)}};
}

struct PhiRegretOutcome {
  double worst_mean_regret = 0.0;  // sum form, worst environment
  double identity_error = 0.0;
  std::string detail;
};

PhiRegretOutcome RunPhiRegret(const std::string& problem, int d, int seeds) {
  PhiRegretOutcome out;
  std::ostringstream detail;
  for (const auto& [label, env] : CornerEnvironments()) {
    ExperimentConfig c;
    c.problem = problem;
    c.d = d;
    c.phi = "transpositions";
    c.T = kHorizon;
    c.seeds = Seeds(problem == "swap" ? 101 : 102, seeds);
    c.environment = env;
    const auto results = RunExperiment(c);
    double mean = 0.0;
    for (const SeedResult& r : results) {
      mean += r.final_regret * c.T / results.size();
      for (const StepRow& row : r.steps) {
        out.identity_error = std::max(
            out.identity_error, std::abs(row.support_value - row.regret));
      }
    }
    out.worst_mean_regret = std::max(out.worst_mean_regret, mean);
    detail << label << " mean Reg_T=" << Fmt(mean) << "; ";
  }
  detail << "max |support - Reg_T/T|=" << Fmt(out.identity_error);
  out.detail = detail.str();
  return out;
}

// Observer that also measures how well the decomposition rebuilds x.
class DecompositionObserver : public StepObserver {
 public:
  explicit DecompositionObserver(CombInstance inst)
      : inst_(inst), tracker_(inst) {}
  void Observe(int t, const Decision& decision, std::int64_t pure,
               const Vector& b) override {
    Vector rebuilt = Vector::Zero(inst_.d);
    double total = 0.0;
    for (size_t k = 0; k < decision.pure_ids.size(); ++k) {
      for (int i : UnrankSubset(decision.pure_ids[k], inst_.m)) {
        rebuilt[i] += decision.pure_weights[k];
      }
      total += decision.pure_weights[k];
    }
    error_ = std::max({error_,
                       (rebuilt - decision.action).cwiseAbs().maxCoeff(),
                       std::abs(total - 1.0)});
    tracker_.Observe(t, decision, pure, b);
  }
  double AverageRegret() const override { return tracker_.AverageRegret(); }
  double error() const { return error_; }

 private:
  CombInstance inst_;
  CombRegretTracker tracker_;
  double error_ = 0.0;
};

// Value of the grid minimum of a convex function on {0, 1/n, ..., 1}. The
// sampled sequence is unimodal, so a binary search on forward differences
// visits the same minimum as a full scan.
// Minimum of a convex function on [0, 1]: grid bracket by binary search on
// forward differences, then golden-section refinement inside the bracket.
double GridMinConvex(const std::function<double(double)>& f, int n) {
  int lo = 0;
  int hi = n;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (f(static_cast<double>(mid + 1) / n) < f(static_cast<double>(mid) / n)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  double a = std::max(0.0, static_cast<double>(lo - 1) / n);
  double b = std::min(1.0, static_cast<double>(lo + 1) / n);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 80; ++it) {
    const double c = b - g * (b - a);
    const double d = a + g * (b - a);
    if (f(c) < f(d)) {
      b = d;
    } else {
      a = c;
    }
  }
  return std::min({f(static_cast<double>(lo) / n), f(a), f(b)});
}

double GridPhi(double y1, double y2, double p, int n) {
  return GridMinConvex(
      [&](double s) {
        Vector v(2);
        v << s * y1, (1.0 - s) * y2;
        return LpNorm(v, p);
      },
      n);
}

ConeSpec RandomCone(int d, Rng& rng) {
  switch (rng.Below(3)) {
    case 0: {
      Vector signs(d);
      for (int i = 0; i < d; ++i) signs[i] = rng.Uniform() < 0.5 ? -1.0 : 1.0;
      return Orthant{signs};
    }
    case 1: {
      const int k = 1 + static_cast<int>(rng.Below(d));
      Matrix rays(d, k);
      for (int j = 0; j < k; ++j) rays.col(j) = rng.GaussianVector(d);
      return FinitelyGenerated{rays};
    }
    default: {
      const int k = d == 2 ? 1 + static_cast<int>(rng.Below(2)) : 3;
      Matrix normals(k, d);
      for (int j = 0; j < k; ++j) normals.row(j) = rng.GaussianVector(d);
      return HalfspaceIntersection{normals};
    }
  }
}

NormTag RandomNorm(Rng& rng) {
  static const double kExponents[] = {1.0, 2.0, kInf, 3.0};
  return NormTag::Lp(kExponents[rng.Below(4)]);
}

}  // namespace

CheckResult CheckSwapRegret() {
  const auto start = std::chrono::steady_clock::now();
  const int d = 4;
  const PhiRegretOutcome o = RunPhiRegret("swap", d, 100);
  const double stated = 4.0 * std::sqrt(kHorizon * std::log(12.0));
  const double own = 4.0 * std::sqrt(kHorizon * std::log(d * (d - 1) / 2.0));
  CheckResult r = Upper("swap regret d=4 transpositions T=4096 x100",
                        o.worst_mean_regret, stated);
  r.pass = r.pass && o.worst_mean_regret <= own && o.identity_error <= 1e-8;
  r.detail = o.detail + "; 4sqrt(T log 6)=" + Fmt(own) +
             "; identity tol 1e-08; " + Fmt(Seconds(start)) + " s";
  return r;
}

CheckResult CheckInternalRegret() {
  const auto start = std::chrono::steady_clock::now();
  const int d = 4;
  const PhiRegretOutcome o = RunPhiRegret("internal", d, 100);
  const double bound = 4.0 * std::sqrt(kHorizon * std::log(d * (d - 1.0)));
  CheckResult r = Upper("internal regret d=4 |Phi|=12 T=4096 x100",
                        o.worst_mean_regret, bound);
  r.pass = r.pass && o.identity_error <= 1e-8;
  r.detail = o.detail + "; identity tol 1e-08; " + Fmt(Seconds(start)) + " s";
  return r;
}

CheckResult CheckCombinatorialRegret() {
  const auto start = std::chrono::steady_clock::now();
  const CombInstance inst{8, 2};
  const int seeds = 100;
  std::ostringstream detail;
  double worst_mean = 0.0;
  double worst_error = 0.0;
  double worst_identity = 0.0;
  for (const auto& [label, spec] : CornerEnvironments()) {
    const auto seed_list = Seeds(103, seeds);
    std::vector<double> regret(seeds), error(seeds), identity(seeds);
    ParallelFor(seeds, [&, &spec = spec](int i) {
      CombGame game(inst);
      RegularizedLearner learner(CombRegularizer(inst));
      auto env = MakeEnvironment(spec, seed_list[i]);
      DecompositionObserver observer(inst);
      RunOptions options;
      options.T = kHorizon;
      options.mixed = true;
      options.seed = seed_list[i];
      options.radius = inst.m;
      options.keep_vectors = false;
      const RunReport rep = Run(game, learner, *env, CombSchedule(inst),
                                options, &observer);
      regret[i] = rep.final_regret * kHorizon;
      error[i] = observer.error();
      identity[i] =
          std::abs(rep.final_support - rep.final_regret) * kHorizon;
    });
    double mean = 0.0;
    for (double v : regret) mean += v / seeds;
    worst_mean = std::max(worst_mean, mean);
    worst_error =
        std::max(worst_error, *std::max_element(error.begin(), error.end()));
    worst_identity = std::max(
        worst_identity, *std::max_element(identity.begin(), identity.end()));
    detail << label << " mean Reg_T=" << Fmt(mean) << "; ";
  }
  const double bound = 4.0 * inst.m * std::sqrt(kHorizon * std::log(4.0));
  CheckResult r =
      Upper("combinatorial regret d=8 m=2 T=4096 x100", worst_mean, bound);
  r.pass = r.pass && worst_error <= 1e-8 && worst_identity <= 1e-6;
  detail << "max decomposition error=" << Fmt(worst_error)
         << " (tol 1e-08); max |T support - Reg_T|=" << Fmt(worst_identity)
         << " (tol 1e-06); " << Fmt(Seconds(start)) << " s";
  r.detail = detail.str();
  return r;
}

CheckResult CheckGlobalCostLinf() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<int> budgets = {25, 50, 100, 200};
  std::vector<SeedResult> results(budgets.size());
  ExperimentConfig base;
  base.problem = "globalcost";
  base.d = 3;
  base.p = kInf;
  base.T = kHorizon;
  base.environment = EnvironmentSpec::UniformRandom(false);
  const std::uint64_t seed = DeriveSeed(104, 0);
  ParallelFor(static_cast<int>(budgets.size()), [&](int k) {
    ExperimentConfig c = base;
    c.cut_budget = budgets[k];
    results[k] = RunSeed(c, seed);
  });
  const double bound = LpTheoremBound(base.d, base.p, base.T);
  const SeedResult& main = results.back();
  CheckResult r = Upper("global cost linf d=3 T=4096 budget 200",
                        main.final_regret, bound + main.slack_mean);
  bool monotone = true;
  std::ostringstream detail;
  detail << "bound=" << Fmt(bound) << "; slack by budget:";
  for (size_t k = 0; k < budgets.size(); ++k) {
    detail << ' ' << budgets[k] << ':' << Fmt(results[k].slack_mean);
    if (k > 0 && results[k].slack_mean >
                     results[k - 1].slack_mean + base.solver_tol) {
      monotone = false;
    }
    if (results[k].aborted) r.pass = false;
  }
  const bool slack_ok = main.slack_mean <= 0.05 * bound;
  r.pass = r.pass && slack_ok && monotone;
  detail << "; slack <= 5% bound: " << (slack_ok ? "yes" : "no")
         << "; non-increasing (tol " << Fmt(base.solver_tol)
         << "): " << (monotone ? "yes" : "no") << "; "
         << Fmt(Seconds(start)) << " s";
  r.detail = detail.str();
  return r;
}

CheckResult CheckGlobalCostNorm() {
  const auto start = std::chrono::steady_clock::now();
  ExperimentConfig c;
  c.problem = "globalcost";
  c.algorithm = "norm";
  c.d = 2;
  c.p = 2.0;
  c.q_prime = 2.0;
  c.delta = 1.0;
  c.T = kHorizon;
  c.environment = EnvironmentSpec::UniformRandom(false);
  const SeedResult res = RunSeed(c, DeriveSeed(105, 0));
  const double bound = NormTheoremBound(c.d, c.q_prime, c.delta, c.T);
  CheckResult r = Upper("global cost norm d=2 p=2 q'=2 T=4096",
                        res.final_regret, bound + res.slack_mean);
  r.pass = r.pass && !res.aborted;
  r.detail = "bound=" + Fmt(bound) + "; mean slack=" + Fmt(res.slack_mean) +
             "; " + Fmt(Seconds(start)) + " s";
  return r;
}

CheckResult CheckBlackwellGuarantee() {
  const auto start = std::chrono::steady_clock::now();
  const int d = 3;
  const auto game = MakeBlackwellDemoGame(d);
  const ConeSpec C = game->target();
  double max_norm = 0.0;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Vector b(d);
    for (int j = 0; j < d; ++j) b[j] = (mask >> j) & 1 ? 1.0 : -1.0;
    for (int i = 0; i < d; ++i) {
      max_norm = std::max(max_norm, game->PurePayoff(i, b).norm());
    }
  }
  const std::vector<int> checkpoints = {100, 1000, 10000};
  const std::vector<std::pair<std::string, EnvironmentSpec>> envs = {
      {"adversarial", EnvironmentSpec::Adversarial()},
      {"uniform_corners", EnvironmentSpec::UniformRandom(true)},
      {"uniform_box", EnvironmentSpec::UniformRandom(false)}};
  double worst_ratio = 0.0;
  std::ostringstream detail;
  for (const auto& [label, spec] : envs) {
    auto env = MakeEnvironment(spec, DeriveSeed(106, 0));
    const BlackwellRunReport rep = BlackwellRun(
        *game, C, *env, 10000, checkpoints, Vector::Ones(game->payoff_dim()));
    detail << label << ':';
    for (size_t k = 0; k < rep.checkpoints.size(); ++k) {
      worst_ratio = std::max(worst_ratio, rep.distances[k] / rep.bounds[k]);
      detail << ' ' << Fmt(rep.distances[k]) << '/' << Fmt(rep.bounds[k]);
    }
    detail << "; ";
  }
  CheckResult r = Upper("blackwell distance / (2 sqrt2 M / sqrt T)",
                        worst_ratio, 1.0);
  r.pass = r.pass && max_norm <= game->M() + 1e-12;
  detail << "max ||r||_2=" << Fmt(max_norm) << " <= M=" << Fmt(game->M())
         << "; " << Fmt(Seconds(start)) << " s";
  r.detail = detail.str();
  return r;
}

CheckResult CheckEquivalence() {
  const auto start = std::chrono::steady_clock::now();
  const int games = 20;
  std::vector<EquivalenceReport> reports(games);
  std::vector<std::string> names(games);
  ParallelFor(games, [&](int g) {
    Rng rng(DeriveSeed(107, g));
    const int d = 2 + static_cast<int>(rng.Below(4));
    PhiFamily family;
    switch (rng.Below(4)) {
      case 0:
        family = PhiFamily::External(d);
        break;
      case 1:
        family = PhiFamily::Internal(d);
        break;
      case 2:
        family = PhiFamily::Transpositions(d);
        break;
      default:
        family = d <= 3 ? PhiFamily::AllMaps(d) : PhiFamily::Internal(d);
        break;
    }
    const double scale = rng.Uniform(0.2, 1.0);
    PhiGame game(family, scale);
    names[g] = game.name();
    reports[g] = EquivalenceCheck(game, game.target(), 1000, rng.NextU64(),
                                  Vector::Ones(game.payoff_dim()));
  });
  double worst = 0.0;
  double worst_diff = 0.0;
  bool ok = true;
  for (const auto& rep : reports) {
    worst = std::max(worst, 1.0 - rep.min_cosine);
    worst_diff = std::max(worst_diff, rep.max_action_diff);
    ok = ok && rep.ok && rep.steps == 1000;
  }
  CheckResult r = Upper("blackwell/FTRL colinearity 20 games T=1000", worst,
                        1e-8);
  r.pass = r.pass && ok && worst_diff <= 1e-9;
  r.detail = "value is 1 - min cosine; max action difference=" +
             Fmt(worst_diff) + " (tol 1e-09); " + Fmt(Seconds(start)) + " s";
  return r;
}

CheckResult CheckDistanceSupport() {
  const auto start = std::chrono::steady_clock::now();
  const int n = 100;
  std::vector<double> err(n);
  ParallelFor(n, [&](int k) {
    Rng rng(DeriveSeed(108, k));
    const int d = 2 + static_cast<int>(rng.Below(2));
    const ConeSpec C = RandomCone(d, rng);
    const NormTag norm = RandomNorm(rng);
    const Vector y = rng.GaussianVector(d);
    const double support =
        SupportFunction(CapGenerator(Polar(C), norm), y, 1e-9);
    const double distance = DistanceToCone(y, C, norm);
    err[k] = std::abs(support - distance);
  });
  CheckResult r =
      Upper("distance/support identity 100 instances d<=3",
            *std::max_element(err.begin(), err.end()), 1e-4);
  r.detail = Fmt(Seconds(start)) + " s";
  return r;
}

CheckResult CheckHighProbability() {
  const auto start = std::chrono::steady_clock::now();
  const int N = 200;
  const double delta = 0.1;
  ExperimentConfig c;
  c.problem = "swap";
  c.d = 4;
  c.T = kHorizon;
  c.delta_conf = delta;
  c.seeds = Seeds(109, N);
  c.environment = EnvironmentSpec::UniformRandom(true);
  const auto results = RunExperiment(c);
  int violations = 0;
  double worst = -kInf;
  for (const SeedResult& res : results) {
    if (res.final_support > res.high_prob_bound) ++violations;
    worst = std::max(worst, res.final_support / res.high_prob_bound);
  }
  const double allowed =
      std::ceil(delta * N) + 3.0 * std::sqrt(N * delta * (1.0 - delta));
  CheckResult r = Upper("high-probability bound violations swap d=4 N=200",
                        violations, allowed);
  r.detail = "max support/bound=" + Fmt(worst) + "; " +
             Fmt(Seconds(start)) + " s";
  return r;
}

CheckResult CheckRates() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<int> grid = {256, 1024, 4096, 16384};
  std::vector<ExperimentConfig> configs(3);
  configs[0].problem = "swap";
  configs[0].d = 4;
  configs[1].problem = "combinatorial";
  configs[1].d = 8;
  configs[1].m = 2;
  configs[2].problem = "blackwell-demo";
  configs[2].d = 3;
  for (size_t k = 0; k < configs.size(); ++k) {
    configs[k].seeds = Seeds(110 + k, 20);
    configs[k].environment = EnvironmentSpec::UniformRandom(true);
  }
  double worst = 0.0;
  std::ostringstream detail;
  for (const ExperimentConfig& c : configs) {
    const SweepResult s = Sweep(c, grid);
    const double dev = std::isnan(s.slope) ? kInf : std::abs(s.slope + 0.5);
    worst = std::max(worst, dev);
    detail << c.problem << " slope=" << Fmt(s.slope) << "; ";
  }
  CheckResult r = Upper("log-log slope within 0.15 of -0.5", worst, 0.15);
  detail << Fmt(Seconds(start)) << " s";
  r.detail = detail.str();
  return r;
}

CheckResult CheckClosedFormOracles() {
  const auto start = std::chrono::steady_clock::now();
  const int n = 1000;
  const int grid = 1000;
  static const double kExponents[] = {1.5, 2.0, 3.0, 4.0, kInf};
  std::vector<double> phi_err(n), sep_err(n);
  ParallelFor(n, [&](int k) {
    Rng rng(DeriveSeed(111, k));
    const double p = kExponents[rng.Below(5)];
    const Vector y = rng.UniformVector(2, 0.05, 2.0);
    phi_err[k] = std::abs(MinWeightedLpNorm(y, p).phi -
                          GridPhi(y[0], y[1], p, grid));
    const Vector z = rng.UniformVector(2, -1.0, 1.0);
    const Vector zp = rng.UniformVector(2, -1.0, 1.0);
    const double s = LpNorm(z.cwiseMax(0.0), DualExponent(p));
    const double best = -GridMinConvex(
        [&](double u) {
          return -(s * GridPhi(u, 1.0 - u, p, grid) + zp[0] * u +
                   zp[1] * (1.0 - u));
        },
        grid);
    sep_err[k] = std::abs(PolarSeparation(z, zp, p).value - best);
  });
  const double e1 = *std::max_element(phi_err.begin(), phi_err.end());
  const double e2 = *std::max_element(sep_err.begin(), sep_err.end());
  CheckResult r = Upper("closed forms vs grid oracles d=2 x1000",
                        std::max(e1, e2), 1e-6);
  r.detail = "min_weighted_lp_norm err=" + Fmt(e1) +
             "; polar_separation err=" + Fmt(e2) + "; " +
             Fmt(Seconds(start)) + " s";
  return r;
}

std::vector<Criterion> AcceptanceCriteria() {
  return {{1, CheckSwapRegret},        {2, CheckInternalRegret},
          {3, CheckCombinatorialRegret}, {4, CheckGlobalCostLinf},
          {5, CheckGlobalCostNorm},    {6, CheckBlackwellGuarantee},
          {7, CheckEquivalence},       {8, CheckDistanceSupport},
          {9, CheckHighProbability},   {10, CheckRates},
          {11, CheckClosedFormOracles}};
}

namespace {

std::vector<CheckResult> GeometrySuite() {
  std::vector<CheckResult> out;
  out.push_back(CheckDistanceSupport());
  Rng rng(DeriveSeed(201, 0));
  int mismatches = 0;
  double moreau = 0.0;
  double sublinear = 0.0;
  for (int k = 0; k < 200; ++k) {
    const int d = 2 + static_cast<int>(rng.Below(3));
    ConeSpec C;
    if (rng.Uniform() < 0.5) {
      Vector signs(d);
      for (int i = 0; i < d; ++i) signs[i] = rng.Uniform() < 0.5 ? -1.0 : 1.0;
      C = Orthant{signs};
    } else {
      const int m = 1 + static_cast<int>(rng.Below(d));
      Matrix rays(d, m);
      for (int j = 0; j < m; ++j) rays.col(j) = rng.GaussianVector(d);
      C = FinitelyGenerated{rays};
    }
    const GeneratorSet X = CapGenerator(Polar(C), NormTag::Lp(2.0));
    Vector y = rng.GaussianVector(d);
    if (rng.Uniform() < 0.3) y = ProjectCone(C, y);
    const double s = SupportFunction(X, y);
    if (std::abs(s) > 1e-6 && (s <= 0.0) != InCone(C, y, 1e-6)) ++mismatches;
    const auto [pc, pp] = MoreauDecompose(y, C);
    moreau = std::max({moreau, (pc + pp - y).norm(), std::abs(pc.dot(pp))});
    const Vector y2 = rng.GaussianVector(d);
    const double lambda = rng.Uniform(0.0, 3.0);
    sublinear = std::max(
        {sublinear, SupportFunction(X, y + y2) - s - SupportFunction(X, y2),
         std::abs(SupportFunction(X, lambda * y) - lambda * s)});
  }
  out.push_back(Upper("membership: support<=0 iff y in C (200 samples)",
                      mismatches, 0));
  out.push_back(Upper("moreau reconstruction and orthogonality", moreau,
                      1e-8));
  out.push_back(Upper("support subadditive and homogeneous", sublinear, 1e-8));
  return out;
}

std::vector<CheckResult> RegularizersSuite() {
  std::vector<CheckResult> out;
  const GcConfiguration gc = ConfigureLpAlgorithm(3, kInf);
  const std::vector<Regularizer> hs = {
      Regularizer::Entropic(4), Regularizer::ScaledEntropic(8, 2),
      Regularizer::LpSquared(MakeSimplex(4), 1.5),
      Regularizer::EuclideanSquared(MakeSimplex(3)), gc.h};
  for (size_t k = 0; k < hs.size(); ++k) {
    const StrongConvexityReport rep = StrongConvexityCheck(hs[k], 200, 300 + k);
    CheckResult r = Upper("strong convexity " + hs[k].ToString(),
                          -rep.worst_margin, 1e-10);
    r.pass = rep.pass;
    out.push_back(r);
  }
  Rng rng(DeriveSeed(202, 0));
  double optimality = 0.0;
  double softmax = 0.0;
  double membership = 0.0;
  for (int k = 0; k < 20; ++k) {
    const int d = 2 + static_cast<int>(rng.Below(4));
    const Vector y = 3.0 * rng.GaussianVector(d);
    const Regularizer h = Regularizer::Entropic(d);
    const Vector xs = ConjArgmax(h, y);
    membership = std::max(membership, std::abs(xs.sum() - 1.0));
    const double best = y.dot(xs) - h.Value(xs);
    for (int j = 0; j < 50; ++j) {
      const Vector x = rng.Dirichlet(d, 1.0);
      optimality = std::max(optimality, y.dot(x) - h.Value(x) - best);
    }
    const Objective f = [&](const Vector& x, Vector* g) {
      if (g != nullptr) *g = y - h.Gradient(x.cwiseMax(1e-300));
      return y.dot(x) - h.Value(x);
    };
    const Vector xp =
        PgaMaximize(f, SimplexSet{d, 1.0}, Vector::Constant(d, 1.0 / d), 1e-12);
    softmax = std::max(softmax, (xp - xs).cwiseAbs().maxCoeff());
  }
  out.push_back(Upper("entropic argmax in simplex", membership, 1e-8));
  out.push_back(Upper("entropic argmax optimal vs 1000 samples", optimality,
                      1e-10));
  out.push_back(Upper("softmax vs projected gradient", softmax, 1e-6));
  const Certificate cert = CertifyConstants(Regularizer::Entropic(4));
  out.push_back(Upper("entropic Delta = log 4", std::abs(cert.delta -
                                                         std::log(4.0)),
                      1e-12));
  return out;
}

std::vector<CheckResult> SolversSuite() {
  std::vector<CheckResult> out;
  out.push_back(CheckClosedFormOracles());
  Rng rng(DeriveSeed(203, 0));
  double cara = 0.0;
  double stationary = 0.0;
  double vi = 0.0;
  double nu_scale = 0.0;
  for (int k = 0; k < 50; ++k) {
    const int d = 3 + static_cast<int>(rng.Below(5));
    const int m = 1 + static_cast<int>(rng.Below(d - 1));
    const Vector x = ProjectCappedSimplex(rng.UniformVector(d, 0.0, 1.0), m);
    Vector rebuilt = Vector::Zero(d);
    double total = 0.0;
    for (const SubsetWeight& sw : CaratheodoryDecompose(x, m)) {
      for (int i : sw.subset) rebuilt[i] += sw.weight;
      total += sw.weight;
    }
    cara = std::max({cara, (rebuilt - x).cwiseAbs().maxCoeff(),
                     std::abs(total - 1.0)});
    Matrix P(d, d);
    for (int i = 0; i < d; ++i) P.row(i) = rng.Dirichlet(d, 0.5).transpose();
    const Vector a = StationaryDistribution(P);
    stationary = std::max(stationary,
                          (P.transpose() * a - a).cwiseAbs().maxCoeff());
    const Vector v = 2.0 * rng.GaussianVector(d);
    const Vector ps = ProjectSimplex(v);
    for (int j = 0; j < 50; ++j) {
      const Vector w = rng.Dirichlet(d, 1.0);
      vi = std::max(vi, (v - ps).dot(w - ps));
    }
    const Vector z = rng.GaussianVector(d);
    const Vector zp = rng.GaussianVector(d);
    const double lambda = rng.Uniform(0.1, 10.0);
    nu_scale = std::max(nu_scale, std::abs(NuOracle(lambda * z, lambda * zp).nu -
                                           lambda * NuOracle(z, zp).nu));
  }
  out.push_back(Upper("caratheodory reconstruction", cara, 1e-8));
  out.push_back(Upper("stationary distribution residual", stationary, 1e-8));
  out.push_back(Upper("simplex projection variational inequality", vi, 1e-6));
  out.push_back(Upper("nu oracle positive homogeneity", nu_scale, 1e-8));
  double lp = 0.0;
  for (int k = 0; k < 30; ++k) {
    const int n = 2 + static_cast<int>(rng.Below(3));
    const int rows = 2 + static_cast<int>(rng.Below(3));
    LpProblem prob;
    prob.c = rng.GaussianVector(n);
    prob.A = Matrix::NullaryExpr(rows, n, [&]() { return rng.Uniform(0.1, 1.0); });
    prob.b = rng.UniformVector(rows, 0.5, 2.0);
    // Vertices of {A u <= b, u >= 0} from every choice of n active
    // constraints among the rows and the coordinate bounds.
    Matrix G(rows + n, n);
    Vector h(rows + n);
    G << prob.A, -Matrix::Identity(n, n);
    h << prob.b, Vector::Zero(n);
    double best = kInf;
    const int total = rows + n;
    std::vector<int> pick(n);
    std::function<void(int, int)> choose = [&](int start, int depth) {
      if (depth == n) {
        Matrix S(n, n);
        Vector r(n);
        for (int i = 0; i < n; ++i) {
          S.row(i) = G.row(pick[i]);
          r[i] = h[pick[i]];
        }
        Eigen::FullPivLU<Matrix> lu(S);
        if (!lu.isInvertible()) return;
        const Vector u = lu.solve(r);
        if (((G * u - h).array() <= 1e-9).all()) {
          best = std::min(best, prob.c.dot(u));
        }
        return;
      }
      for (int i = start; i < total; ++i) {
        pick[depth] = i;
        choose(i + 1, depth + 1);
      }
    };
    choose(0, 0);
    lp = std::max(lp, std::abs(LpSolve(prob).value - best));
  }
  out.push_back(Upper("lp solver vs vertex enumeration", lp, 1e-9));
  return out;
}

std::vector<CheckResult> HarnessSuite() {
  std::vector<CheckResult> out;
  ExperimentConfig c;
  c.problem = "swap";
  c.d = 3;
  c.T = 1024;
  c.seeds = Seeds(204, 10);
  c.environment = EnvironmentSpec::UniformRandom(true);
  std::ostringstream a, b;
  const auto first = RunExperiment(c, 1);
  WriteStepsCsv(a, first);
  WriteStepsCsv(b, RunExperiment(c, 4));
  const std::string csv = a.str();
  out.push_back(Upper("reruns give byte-identical steps.csv",
                      csv == b.str() ? 0.0 : 1.0, 0.0));
  const long rows = std::count(csv.begin(), csv.end(), '\n') - 1;
  out.push_back(Upper("steps.csv rows = seeds x T",
                      std::abs(static_cast<double>(rows) - 10 * 1024), 0.0));
  std::map<std::string, double> last_support;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string seed, t, support;
    std::getline(fields, seed, ',');
    std::getline(fields, t, ',');
    std::getline(fields, support, ',');
    last_support[seed] = std::stod(support);
  }
  std::vector<double> finals;
  for (const auto& [seed, v] : last_support) finals.push_back(v);
  const nlohmann::json summary = BuildSummary(c, first);
  const Aggregate agg = AggregateOf(finals);
  const auto& stored = summary["aggregates"]["final_support"];
  const double diff = std::max(
      {std::abs(stored["mean"].get<double>() - agg.mean),
       std::abs(stored["max"].get<double>() - agg.max),
       std::abs(stored["p90"].get<double>() - agg.p90)});
  out.push_back(Upper("summary aggregates match steps.csv", diff, 1e-15));
  ExperimentConfig small = c;
  small.seeds = Seeds(205, 4);
  const SweepResult sweep = Sweep(small, {64, 128, 256, 512});
  out.push_back(
      Upper("4-point sweep gives 4 rows",
            std::abs(static_cast<double>(sweep.rows.size()) - 4.0), 0.0));
  ExperimentConfig flat = small;
  flat.environment = EnvironmentSpec::Adversarial();
  const SweepResult degenerate = Sweep(flat, {64, 128, 256, 512});
  out.push_back(Upper("constant support gives NaN slope",
                      std::isnan(degenerate.slope) ? 0.0 : 1.0, 0.0));
  double missing = 1.0;
  try {
    ParseConfigText(R"({"problem": "swap", "d": 3, "seeds": [1]})");
  } catch (const ConfigError& e) {
    if (std::string(e.what()).find("\"T\"") != std::string::npos) missing = 0.0;
  }
  out.push_back(Upper("missing T names the field", missing, 0.0));
  return out;
}

}  // namespace

std::vector<std::string> SuiteNames() {
  return {"geometry", "regularizers", "solvers", "bounds",
          "equivalence", "harness",   "all"};
}

std::vector<CheckResult> RunSuite(const std::string& suite) {
  if (suite == "geometry") return GeometrySuite();
  if (suite == "regularizers") return RegularizersSuite();
  if (suite == "solvers") return SolversSuite();
  if (suite == "equivalence") return {CheckEquivalence()};
  if (suite == "bounds") {
    return {CheckSwapRegret(),          CheckInternalRegret(),
            CheckCombinatorialRegret(), CheckGlobalCostLinf(),
            CheckGlobalCostNorm(),      CheckBlackwellGuarantee(),
            CheckHighProbability(),     CheckRates()};
  }
  if (suite == "harness") return HarnessSuite();
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const std::string& name : SuiteNames()) {
      if (name == "all") continue;
      for (CheckResult& r : RunSuite(name)) out.push_back(std::move(r));
    }
    return out;
  }
  throw std::invalid_argument("unknown suite \"" + suite + "\"");
}

void PrintTable(std::ostream& out, const std::vector<CheckResult>& results) {
  size_t width = 5;
  for (const auto& r : results) width = std::max(width, r.name.size());
  out << std::left << std::setw(static_cast<int>(width)) << "check"
      << "  " << std::setw(13) << "value" << std::setw(13) << "limit"
      << std::setw(13) << "margin" << "result\n";
  for (const auto& r : results) {
    out << std::left << std::setw(static_cast<int>(width)) << r.name << "  "
        << std::setw(13) << Fmt(r.value) << std::setw(13) << Fmt(r.limit)
        << std::setw(13) << Fmt(r.margin) << (r.pass ? "PASS" : "FAIL")
        << '\n';
    if (!r.detail.empty()) out << "    " << r.detail << '\n';
  }
}

}  // namespace approach::harness
