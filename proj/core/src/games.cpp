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

#include "approach/games.hpp"

#include <algorithm>
#include <cmath>

namespace approach {

Vector Game::PurePayoff(std::int64_t /*pure*/, const Vector& /*b*/) const {
  throw CapabilityError(name() + ": no finite pure action set");
}

EnvironmentSpec EnvironmentSpec::Adversarial() { return EnvironmentSpec{}; }

EnvironmentSpec EnvironmentSpec::UniformRandom(bool corners) {
  EnvironmentSpec s;
  s.kind = Kind::kUniformRandom;
  s.corners = corners;
  return s;
}

EnvironmentSpec EnvironmentSpec::FixedSequence(std::vector<Vector> sequence) {
  if (sequence.empty()) throw InputError("FixedSequence: empty sequence");
  EnvironmentSpec s;
  s.kind = Kind::kFixedSequence;
  s.sequence = std::move(sequence);
  return s;
}

std::string EnvironmentSpec::ToString() const {
  switch (kind) {
    case Kind::kAdversarial:
      return "adversarial";
    case Kind::kUniformRandom:
      return corners ? "uniform_random(corners)" : "uniform_random";
    case Kind::kFixedSequence:
      return "fixed_sequence(" + std::to_string(sequence.size()) + ")";
  }
  return "";
}

Vector AdversarialEnvironment::Next(const Game& game, const Decision& a,
                                    const Vector& x, int /*t*/) {
  const int k = game.env_dim();
  const double lo = game.env_lo();
  const double hi = game.env_hi();
  const Vector base_b = Vector::Constant(k, lo);
  const double base = game.Payoff(a.action, base_b).dot(x);
  Vector coeff(k);
  for (int j = 0; j < k; ++j) {
    Vector b = base_b;
    b[j] = hi;
    coeff[j] = game.Payoff(a.action, b).dot(x) - base;
  }
  const double scale = std::max(1.0, coeff.cwiseAbs().maxCoeff());
  Vector b = base_b;
  for (int j = 0; j < k; ++j) {
    if (coeff[j] > 1e-12 * scale) b[j] = hi;
  }
  return b;
}

Vector UniformRandomEnvironment::Next(const Game& game, const Decision&,
                                      const Vector&, int) {
  const int k = game.env_dim();
  const double lo = game.env_lo();
  const double hi = game.env_hi();
  Vector b(k);
  for (int j = 0; j < k; ++j) {
    b[j] = corners_ ? (rng_.Below(2) == 0 ? lo : hi) : rng_.Uniform(lo, hi);
  }
  return b;
}

FixedSequenceEnvironment::FixedSequenceEnvironment(
    std::vector<Vector> sequence)
    : sequence_(std::move(sequence)) {
  if (sequence_.empty()) throw InputError("FixedSequence: empty sequence");
}

Vector FixedSequenceEnvironment::Next(const Game& game, const Decision&,
                                      const Vector&, int t) {
  const Vector& b = sequence_[static_cast<size_t>(t - 1) % sequence_.size()];
  RequireDim(b, game.env_dim(), "FixedSequenceEnvironment");
  return b;
}

std::unique_ptr<Environment> MakeEnvironment(const EnvironmentSpec& spec,
                                             std::uint64_t run_seed) {
  switch (spec.kind) {
    case EnvironmentSpec::Kind::kAdversarial:
      return std::make_unique<AdversarialEnvironment>();
    case EnvironmentSpec::Kind::kUniformRandom:
      return std::make_unique<UniformRandomEnvironment>(
          DeriveSeed(run_seed, spec.seed), spec.corners);
    case EnvironmentSpec::Kind::kFixedSequence:
      return std::make_unique<FixedSequenceEnvironment>(spec.sequence);
  }
  return nullptr;
}

DualConditionReport DualConditionCheck(const Game& game, const ConeSpec& C,
                                       int b_samples, std::uint64_t seed) {
  Rng rng(seed);
  const FeasibleSet set = game.decision_set();
  const int n = AmbientDim(set);
  DualConditionReport report;
  report.samples = b_samples;
  for (int s = 0; s < b_samples; ++s) {
    const Vector b =
        rng.UniformVector(game.env_dim(), game.env_lo(), game.env_hi());
    auto residual = [&](const Vector& a) {
      return MembershipResidual(C, game.Payoff(a, b));
    };
    Objective objective = [&](const Vector& a, Vector* grad) {
      const double r = residual(a);
      if (grad != nullptr) {
        grad->resize(n);
        for (int i = 0; i < n; ++i) {
          Vector ap = a;
          ap[i] += 1e-7;
          const double rp = residual(ap);
          (*grad)[i] = -(rp * rp - r * r) / 1e-7;
        }
      }
      return -r * r;
    };
    Projector project = [&](const Vector& v) { return ProjectOnto(set, v); };
    double best = kInf;
    std::vector<Vector> starts = {project(Vector::Zero(n))};
    for (int i = 0; i < n; ++i) {
      starts.push_back(project(Vector::Unit(n, i) * 10.0));
    }
    for (const Vector& x0 : starts) {
      best = std::min(best, residual(x0));
      if (best == 0.0) break;
      PgaOptions options;
      options.max_iter = 500;
      options.tol = 1e-12;
      try {
        best = std::min(best,
                        residual(PgaMaximize(objective, project, x0, options).x));
      } catch (const SolverError& e) {
        best = std::min(best, residual(e.best()));
      }
    }
    if (best > report.worst_residual || report.worst_b.size() == 0) {
      report.worst_residual = std::max(report.worst_residual, best);
      report.worst_b = b;
    }
  }
  return report;
}

}  // namespace approach
