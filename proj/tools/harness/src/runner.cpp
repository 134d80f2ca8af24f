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

#include "approach_harness/runner.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <thread>

#include "approach/blackwell.hpp"
#include "approach/combinatorial.hpp"
#include "approach/global_cost.hpp"
#include "approach/phi_regret.hpp"

namespace approach::harness {
namespace {

PhiFamily MakeFamily(const ExperimentConfig& c) {
  if (c.problem == "internal") return PhiFamily::Internal(c.d);
  if (c.phi == "transpositions") return PhiFamily::Transpositions(c.d);
  if (c.phi == "internal") return PhiFamily::Internal(c.d);
  if (c.phi == "all_maps") return PhiFamily::AllMaps(c.d);
  if (c.phi == "external") return PhiFamily::External(c.d);
  return PhiFamily::Custom(c.d, c.phi_maps);
}

// Everything one run needs, owned together.
struct Setup {
  std::unique_ptr<Game> game;
  std::unique_ptr<Learner> learner;
  std::unique_ptr<StepObserver> observer;
  Schedule schedule;
  RunOptions options;
};

Setup MakeSetup(const ExperimentConfig& c, std::uint64_t seed) {
  Setup s;
  s.options.T = c.T;
  s.options.seed = seed;
  s.options.delta_conf = c.delta_conf;
  s.options.keep_vectors = false;
  s.options.mixed = c.mixed;
  if (c.problem == "swap" || c.problem == "internal") {
    PhiFamily fam = MakeFamily(c);
    s.learner = std::make_unique<RegularizedLearner>(PhiRegularizer(fam));
    s.schedule = PhiSchedule(fam);
    s.observer = std::make_unique<PhiRegretTracker>(fam);
    s.game = std::make_unique<PhiGame>(std::move(fam));
    s.options.radius = 1.0;
  } else if (c.problem == "combinatorial") {
    const CombInstance inst{c.d, c.m};
    s.learner = std::make_unique<RegularizedLearner>(CombRegularizer(inst));
    s.schedule = CombSchedule(inst);
    s.observer = std::make_unique<CombRegretTracker>(inst);
    s.game = std::make_unique<CombGame>(inst);
    s.options.radius = c.m;
  } else if (c.problem == "blackwell-demo") {
    auto game = MakeBlackwellDemoGame(c.d);
    s.learner = std::make_unique<BlackwellLearner>(game->target());
    s.schedule = BlackwellSchedule(game->M());
    s.observer = std::make_unique<PhiRegretTracker>(PhiFamily::External(c.d));
    s.game = std::move(game);
    s.options.mixed = false;
    s.options.radius = 1.0;
  } else {
    GcConfiguration cfg;
    if (c.algorithm == "norm") {
      cfg = ConfigureNormAlgorithm(NormTag::GlobalCostPrimal(c.d, c.p),
                                   c.q_prime, c.delta);
      s.game = std::make_unique<GlobalCostGame>(c.d, c.p, 1.0,
                                                NormTag::Lp(kInf));
      s.options.radius = std::pow(static_cast<double>(c.d),
                                  IsInfinite(c.p) ? 0.0 : 1.0 / c.p) +
                         1.0;
    } else {
      cfg = ConfigureLpAlgorithm(c.d, c.p);
      s.game = std::make_unique<GlobalCostGame>(c.d, c.p);
      s.options.radius = 1.0;
    }
    PolarApprox approx(c.d, c.p, cfg.ball, c.cut_budget);
    s.learner = std::make_unique<CuttingPlaneLearner>(
        cfg.h, std::move(approx), c.solver_tol, c.max_rounds);
    s.schedule = cfg.schedule;
    s.observer = std::make_unique<GlobalCostRegretTracker>(c.d, c.p);
    s.options.mixed = false;
    s.options.tol = c.solver_tol;
    s.options.nu_hard_limit =
        c.nu_hard_limit ? *c.nu_hard_limit : 0.05 * ConfiguredBound(c, c.T);
  }
  return s;
}

}  // namespace

int ThreadCount() {
  if (const char* env = std::getenv("APPROACH_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

double ConfiguredBound(const ExperimentConfig& c, int T) {
  if (c.problem == "globalcost") {
    if (c.algorithm == "norm") {
      return NormTheoremBound(c.d, c.q_prime, c.delta, T);
    }
    return LpTheoremBound(c.d, c.p, T);
  }
  return MakeSetup(c, 0).schedule.Bound(T);
}

SeedResult RunSeed(const ExperimentConfig& config, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  Setup s = MakeSetup(config, seed);
  auto env = MakeEnvironment(config.environment, seed);
  const RunReport report = Run(*s.game, *s.learner, *env, s.schedule,
                               s.options, s.observer.get());
  SeedResult out;
  out.seed = seed;
  out.steps.reserve(report.steps.size());
  for (const StepRecord& rec : report.steps) {
    out.steps.push_back(StepRow{rec.t, rec.support_value, rec.bound_value,
                                rec.inner, rec.nu, rec.regret});
  }
  out.final_support = report.final_support;
  out.final_bound = report.final_bound;
  out.final_regret = report.final_regret;
  out.slack_mean = report.slack_mean;
  out.high_prob_bound = report.high_prob_bound;
  out.max_inner_excess = report.max_inner_excess;
  out.aborted = report.aborted;
  out.abort_reason = report.abort_reason;
  out.guarantee_ok = report.guarantee_ok;
  if (const auto* cp = dynamic_cast<CuttingPlaneLearner*>(s.learner.get())) {
    out.extras["cuts"] = cp->approx().size();
    out.extras["evictions"] = cp->approx().evictions();
    out.extras["rounds"] = cp->total_rounds();
    out.extras["unconverged_steps"] = cp->unconverged_steps();
    out.extras["theorem_bound"] = ConfiguredBound(config, config.T);
  }
  out.wall_time = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return out;
}

std::vector<SeedResult> RunExperiment(const ExperimentConfig& config,
                                      int threads) {
  if (threads <= 0) threads = ThreadCount();
  const size_t n = config.seeds.size();
  std::vector<SeedResult> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        results[i] = RunSeed(config, config.seeds[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int count = std::min<int>(threads, static_cast<int>(n));
  std::vector<std::thread> pool;
  for (int k = 1; k < count; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::string FormatReal(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void WriteStepsCsv(std::ostream& out, const std::vector<SeedResult>& results) {
  out << "seed,t,support_value,bound_value,inner,nu,regret\n";
  for (const SeedResult& r : results) {
    const std::string seed = std::to_string(r.seed);
    for (const StepRow& row : r.steps) {
      out << seed << ',' << row.t << ',' << FormatReal(row.support_value)
          << ',' << FormatReal(row.bound_value) << ','
          << FormatReal(row.inner) << ',' << FormatReal(row.nu) << ','
          << FormatReal(row.regret) << '\n';
    }
  }
}

Aggregate AggregateOf(const std::vector<double>& values) {
  Aggregate a;
  if (values.empty()) return a;
  std::vector<double> v = values;
  std::sort(v.begin(), v.end());
  double sum = 0.0;
  for (double x : v) sum += x;
  a.mean = sum / v.size();
  a.min = v.front();
  a.max = v.back();
  auto quantile = [&](double q) {
    const double pos = q * (v.size() - 1);
    const size_t lo = static_cast<size_t>(std::floor(pos));
    const size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (pos - lo) * (v[hi] - v[lo]);
  };
  a.p50 = quantile(0.5);
  a.p90 = quantile(0.9);
  return a;
}

nlohmann::json BuildSummary(const ExperimentConfig& config,
                            const std::vector<SeedResult>& results) {
  using nlohmann::json;
  json j;
  j["config"] = ConfigToJson(config);
  json records = json::array();
  std::vector<double> support, bound, regret, slack, hp, wall;
  json aborted = json::array();
  for (const SeedResult& r : results) {
    json rec;
    rec["seed"] = r.seed;
    rec["final_support"] = r.final_support;
    rec["final_bound"] = r.final_bound;
    rec["regret"] = r.final_regret;
    rec["slack_mean"] = r.slack_mean;
    rec["high_prob_bound"] = r.high_prob_bound;
    rec["wall_time"] = r.wall_time;
    rec["guarantee_ok"] = r.guarantee_ok;
    rec["aborted"] = r.aborted;
    if (r.aborted) {
      rec["abort_reason"] = r.abort_reason;
      aborted.push_back(r.seed);
    }
    for (const auto& [k, v] : r.extras) rec[k] = v;
    records.push_back(rec);
    support.push_back(r.final_support);
    bound.push_back(r.final_bound);
    regret.push_back(r.final_regret);
    slack.push_back(r.slack_mean);
    hp.push_back(r.high_prob_bound);
    wall.push_back(r.wall_time);
  }
  j["records"] = records;
  auto agg = [](const std::vector<double>& v) {
    const Aggregate a = AggregateOf(v);
    return json{{"mean", a.mean}, {"min", a.min}, {"max", a.max},
                {"p50", a.p50},   {"p90", a.p90}};
  };
  j["aggregates"] = {{"final_support", agg(support)},
                     {"final_bound", agg(bound)},
                     {"regret", agg(regret)},
                     {"slack_mean", agg(slack)},
                     {"high_prob_bound", agg(hp)},
                     {"wall_time", agg(wall)}};
  j["aborted_seeds"] = aborted;
  return j;
}

double LogLogSlope(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  if (n < 2 || y.size() != n) return std::nan("");
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) return std::nan("");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double dx = std::log(x[i]) - mx;
    const double dy = std::log(y[i]) - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nan("");
  return sxy / sxx;
}

SweepResult Sweep(const ExperimentConfig& config, const std::vector<int>& Ts,
                  int threads) {
  if (Ts.size() < 4) throw InputError("Sweep: need at least 4 values of T");
  for (size_t i = 1; i < Ts.size(); ++i) {
    if (Ts[i] <= Ts[i - 1]) throw InputError("Sweep: T grid must ascend");
  }
  SweepResult out;
  std::vector<double> xs, ys;
  for (int T : Ts) {
    ExperimentConfig c = config;
    c.T = T;
    const std::vector<SeedResult> results = RunExperiment(c, threads);
    SweepRow row;
    row.T = T;
    for (const SeedResult& r : results) {
      row.mean_final_support += r.final_support / results.size();
      row.mean_final_bound += r.final_bound / results.size();
    }
    out.rows.push_back(row);
    xs.push_back(T);
    ys.push_back(row.mean_final_support);
  }
  out.slope = LogLogSlope(xs, ys);
  if (std::isnan(out.slope)) {
    out.note = "slope undefined: mean final support is nonpositive or "
               "constant across the grid";
  }
  return out;
}

void WriteRatesCsv(std::ostream& out, const SweepResult& sweep) {
  out << "T,mean_final_support,mean_final_bound,slope\n";
  for (const SweepRow& row : sweep.rows) {
    out << row.T << ',' << FormatReal(row.mean_final_support) << ','
        << FormatReal(row.mean_final_bound) << ',' << FormatReal(sweep.slope)
        << '\n';
  }
}

}  // namespace approach::harness
