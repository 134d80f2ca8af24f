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

#include "approach/engine.hpp"

#include <cmath>
#include <sstream>

#include "approach/random.hpp"

namespace approach {

Schedule Schedule::FromCertificate(const Certificate& cert, double M) {
  Schedule s;
  s.delta = cert.delta;
  s.K = cert.K;
  s.M = M;
  return s;
}

double Schedule::Eta(int t) const {
  if (t < 1) throw InputError("Schedule::Eta: t must be >= 1");
  return std::sqrt(delta * K / (M * M * t));
}

double Schedule::Bound(int T) const {
  if (T < 1) throw InputError("Schedule::Bound: T must be >= 1");
  return 2.0 * M * std::sqrt(delta / (K * T));
}

double Eta(const Schedule& schedule, int t) { return schedule.Eta(t); }

BoundPair BoundValues(const Schedule& schedule, int T, double radius,
                      double delta_conf) {
  if (!(delta_conf > 0.0 && delta_conf < 1.0)) {
    throw InputError("BoundValues: delta_conf must lie in (0, 1)");
  }
  BoundPair out;
  out.expectation = schedule.Bound(T);
  out.high_prob = schedule.M / std::sqrt(static_cast<double>(T)) *
                  (2.0 * std::sqrt(schedule.delta / schedule.K) +
                   radius * std::sqrt(2.0 * std::log(1.0 / delta_conf)));
  return out;
}

Vector FtrlStep(const Regularizer& h, const Vector& Y, double eta_prev,
                double tol) {
  if (!(eta_prev > 0.0)) throw InputError("FtrlStep: eta must be positive");
  return ConjArgmax(h, eta_prev * Y, tol);
}

Vector RegularizedLearner::Next(const Vector& Y, double eta) {
  last_ = ConjArgmax(h_, eta * Y, tol_, last_.size() ? &last_ : nullptr);
  return last_;
}

double RegularizedLearner::Support(const Vector& rbar) {
  return SupportFunction(h_.domain, rbar);
}

int DrawIndex(const std::vector<double>& weights, double u) {
  double total = 0.0;
  for (double w : weights) total += std::max(w, 0.0);
  const double target = u * total;
  double acc = 0.0;
  int last_positive = 0;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    last_positive = static_cast<int>(i);
    acc += weights[i];
    if (target < acc) return static_cast<int>(i);
  }
  return last_positive;
}

RunReport Run(const Game& game, Learner& learner, Environment& env,
              const Schedule& schedule, const RunOptions& options,
              StepObserver* observer) {
  if (options.T < 1) throw InputError("Run: T must be >= 1");
  const int n = game.payoff_dim();
  RunReport report;
  report.seed = options.seed;
  report.steps.reserve(static_cast<size_t>(options.T));
  Rng rng(options.seed);
  Vector Y = Vector::Zero(n);
  double slack_sum = 0.0;
  for (int t = 1; t <= options.T; ++t) {
    const double eta = schedule.Eta(t == 1 ? 1 : t - 1);
    const Vector x = learner.Next(Y, eta);
    const Decision decision = game.Oracle(x);
    const Vector b = env.Next(game, decision, x, t);
    const Vector expected = game.Payoff(decision.action, b);
    std::int64_t pure = -1;
    Vector r;
    if (options.mixed && game.has_pure_actions()) {
      const int k = DrawIndex(decision.pure_weights, rng.Uniform());
      pure = decision.pure_ids[static_cast<size_t>(k)];
      r = game.PurePayoff(pure, b);
    } else {
      r = expected;
    }
    StepRecord rec;
    rec.t = t;
    rec.pure = pure;
    rec.inner = expected.dot(x);
    rec.nu = decision.nu;
    report.max_inner_excess =
        std::max(report.max_inner_excess, rec.inner - rec.nu);
    slack_sum += decision.nu;
    Y += r;
    rec.support_value = learner.Support(Y / static_cast<double>(t));
    rec.bound_value = schedule.Bound(t);
    if (observer != nullptr) {
      observer->Observe(t, decision, pure, b);
      rec.regret = observer->AverageRegret();
    }
    if (options.keep_vectors) {
      rec.x = x;
      rec.action = decision.action;
      rec.r = r;
    }
    report.steps.push_back(std::move(rec));
    if (decision.nu > options.nu_hard_limit) {
      std::ostringstream os;
      os << "oracle slack " << decision.nu << " exceeds hard limit "
         << options.nu_hard_limit << " at step " << t;
      report.aborted = true;
      report.abort_reason = os.str();
      break;
    }
  }
  const int steps = static_cast<int>(report.steps.size());
  report.mean_payoff = Y / static_cast<double>(steps);
  report.final_support = report.steps.back().support_value;
  const BoundPair bounds =
      BoundValues(schedule, steps, options.radius, options.delta_conf);
  report.final_bound = bounds.expectation;
  report.high_prob_bound = bounds.high_prob;
  report.slack_mean = slack_sum / steps;
  report.final_regret = report.steps.back().regret;
  report.guarantee_ok =
      !report.aborted && report.final_support <= report.final_bound +
                                                     report.slack_mean +
                                                     options.tol;
  return report;
}

RunReport RunMixed(const Game& game, Learner& learner, Environment& env,
                   const Schedule& schedule, RunOptions options,
                   StepObserver* observer) {
  if (!game.has_pure_actions()) {
    throw CapabilityError("RunMixed: " + game.name() +
                          " has no finite pure action set");
  }
  options.mixed = true;
  return Run(game, learner, env, schedule, options, observer);
}

}  // namespace approach
