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

#include "approach/global_cost.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "approach/solvers.hpp"

namespace approach {
namespace {

// Gradient of phi_p at y' >= 0.
Vector PhiGradient(const Vector& yp, double p, double phi) {
  const int d = static_cast<int>(yp.size());
  Vector g = Vector::Zero(d);
  int zeros = 0;
  int zero_index = -1;
  for (int i = 0; i < d; ++i) {
    if (yp[i] <= 0.0) {
      ++zeros;
      zero_index = i;
    }
  }
  if (zeros == 1) {
    g[zero_index] = 1.0;
    return g;
  }
  if (zeros > 1) return g;
  const double q = DualExponent(p);
  for (int i = 0; i < d; ++i) g[i] = std::pow(phi / yp[i], q + 1.0);
  return g;
}

// argmax of <z, y> over {y >= 0, ||y||_p <= 1}.
Vector DualMaximizer(const Vector& z, double p) {
  const int d = static_cast<int>(z.size());
  Vector u = Vector::Zero(d);
  if (IsInfinite(p)) {
    for (int i = 0; i < d; ++i) u[i] = z[i] > 0.0 ? 1.0 : 0.0;
    return u;
  }
  const double q = DualExponent(p);
  const Vector zp = z.cwiseMax(0.0);
  const double nrm = LpNorm(zp, q);
  if (nrm == 0.0) return u;
  for (int i = 0; i < d; ++i) u[i] = std::pow(zp[i] / nrm, q - 1.0);
  return u;
}

}  // namespace

GlobalCostInstance GlobalCostInstance::Make(int d, double p) {
  if (d < 2) throw InputError("GlobalCostInstance: d must be >= 2");
  if (!(p > 1.0)) throw InputError("GlobalCostInstance: p must exceed 1");
  GlobalCostInstance inst;
  inst.d = d;
  inst.p = p;
  inst.q = DualExponent(p);
  const double dd = d;
  inst.A = IsInfinite(p) ? 1.0 : std::min(std::pow(dd, 1.0 - 2.0 / p), 1.0);
  const double denom = 2.0 * std::log(dd) - 1.0;
  const double qp = denom > 0.0 ? 1.0 + 1.0 / denom : kInf;
  if (qp > 2.0) {
    inst.q_prime = 2.0;
    inst.clamped = true;
  } else {
    inst.q_prime = qp;
  }
  return inst;
}

Vector GlobalCostPayoff(const Vector& a, const Vector& loss) {
  RequireDim(a, loss.size(), "GlobalCostPayoff");
  Vector r(2 * loss.size());
  r.head(loss.size()) = a.cwiseProduct(loss);
  r.tail(loss.size()) = loss;
  return r;
}

GlobalCostGame::GlobalCostGame(int d, double p, double M)
    : GlobalCostGame(d, p, M, NormTag::GlobalCostPrimal(d, 1.0)) {}

GlobalCostGame::GlobalCostGame(int d, double p, double M, NormTag norm)
    : d_(d), p_(p), M_(M), norm_(norm) {
  if (d < 2) throw InputError("GlobalCostGame: d must be >= 2");
  if (!(p > 1.0)) throw InputError("GlobalCostGame: p must exceed 1");
}

std::string GlobalCostGame::name() const {
  std::ostringstream os;
  os << "global_cost(d=" << d_ << ", p=" << p_ << ")";
  return os.str();
}

Decision GlobalCostGame::Oracle(const Vector& x) const {
  RequireDim(x, 2 * d_, "GlobalCostGame::Oracle");
  const NuOracleResult res = NuOracle(x.head(d_), x.tail(d_));
  Decision dec;
  dec.action = res.a;
  dec.nu = res.nu;
  return dec;
}

Vector GlobalCostGame::Payoff(const Vector& action, const Vector& b) const {
  return GlobalCostPayoff(action, b);
}

Separation PolarSeparation(const Vector& z, const Vector& zp, double p,
                           double tol) {
  RequireDim(zp, z.size(), "PolarSeparation");
  const int d = static_cast<int>(z.size());
  const double q = DualExponent(p);
  const double s = LpNorm(z.cwiseMax(0.0), q);
  auto psi = [&](const Vector& yp) {
    return s * MinWeightedLpNorm(yp.cwiseMax(0.0), p).phi + zp.dot(yp);
  };
  Vector best_yp = Vector::Unit(d, 0);
  double best = psi(best_yp);
  for (int i = 1; i < d; ++i) {
    const Vector e = Vector::Unit(d, i);
    const double v = psi(e);
    if (v > best) {
      best = v;
      best_yp = e;
    }
  }
  if (s > 0.0) {
    Objective objective = [&](const Vector& yp, Vector* grad) {
      const Vector ypc = yp.cwiseMax(0.0);
      const double phi = MinWeightedLpNorm(ypc, p).phi;
      if (grad != nullptr) *grad = s * PhiGradient(ypc, p, phi) + zp;
      return s * phi + zp.dot(yp);
    };
    Projector project = [](const Vector& v) { return ProjectSimplex(v); };
    std::vector<Vector> starts = {Vector::Constant(d, 1.0 / d)};
    for (int i = 0; i < d; ++i) {
      starts.push_back(0.5 * Vector::Unit(d, i) +
                       Vector::Constant(d, 0.5 / d));
    }
    PgaOptions options;
    options.tol = 1e-12;
    options.max_iter = 5000;
    for (const Vector& x0 : starts) {
      Vector cand;
      try {
        cand = PgaMaximize(objective, project, x0, options).x;
      } catch (const SolverError& e) {
        cand = e.best();
      }
      const double v = psi(cand);
      if (v > best) {
        best = v;
        best_yp = cand;
      }
    }
  }
  Separation out;
  out.value = best;
  out.yp = best_yp.cwiseMax(0.0);
  out.y = MinWeightedLpNorm(out.yp, p).phi * DualMaximizer(z, p);
  out.inside = best <= tol;
  return out;
}

PolarApprox::PolarApprox(int d, double p, NormTag ball, int budget)
    : d_(d), p_(p), ball_(ball), budget_(budget) {
  const ConeSpec cone = GlobalCostCone{d, p};
  for (int block = 0; block < 2; ++block) {
    for (int i = 0; i < d; ++i) {
      const Vector c = Vector::Unit(2 * d, block * d + i);
      if (!InCone(cone, c, 0.0)) continue;
      cuts_.push_back(c);
      stamps_.push_back(clock_++);
    }
  }
  pinned_ = static_cast<int>(cuts_.size());
}

GeneratorSet PolarApprox::Generator() const {
  GeneratorSet g = CapGenerator(HalfspaceIntersection{CutMatrix()}, ball_);
  return g;
}

Matrix PolarApprox::CutMatrix() const {
  Matrix N(static_cast<Eigen::Index>(cuts_.size()), 2 * d_);
  for (size_t j = 0; j < cuts_.size(); ++j) {
    N.row(static_cast<Eigen::Index>(j)) = cuts_[j].transpose();
  }
  return N;
}

bool PolarApprox::AddCut(const Vector& cut) {
  RequireDim(cut, 2 * d_, "PolarApprox::AddCut");
  const double nrm = cut.norm();
  if (nrm == 0.0) return false;
  const Vector c = cut / nrm;
  for (const Vector& existing : cuts_) {
    if (existing.dot(c) > 1.0 - 1e-13) return false;
  }
  if (static_cast<int>(cuts_.size()) >= budget_) {
    if (budget_ <= pinned_) return false;
    size_t victim = static_cast<size_t>(pinned_);
    for (size_t j = victim + 1; j < cuts_.size(); ++j) {
      if (stamps_[j] < stamps_[victim]) victim = j;
    }
    cuts_.erase(cuts_.begin() + static_cast<std::ptrdiff_t>(victim));
    stamps_.erase(stamps_.begin() + static_cast<std::ptrdiff_t>(victim));
    ++evictions_;
  }
  cuts_.push_back(c);
  stamps_.push_back(clock_++);
  return true;
}

void PolarApprox::Touch(const Vector& x) {
  const double slack = 1e-9 * (1.0 + x.norm());
  for (size_t j = 0; j < cuts_.size(); ++j) {
    if (cuts_[j].dot(x) >= -slack) stamps_[j] = clock_;
  }
  ++clock_;
}

GcStep FtrlArgmaxGc(const Regularizer& h, PolarApprox& approx, const Vector& Y,
                    double eta, double tol, int max_rounds,
                    const Vector* warm) {
  const int n = static_cast<int>(Y.size());
  const int d = n / 2;
  const double p = std::get<GlobalCostCone>(
                       std::get<BallCapCone>(h.domain.rep).cone.rep)
                       .p;
  GcStep out;
  Vector start = warm != nullptr ? *warm : Vector();
  for (int round = 1; round <= max_rounds; ++round) {
    const Regularizer hr = h.WithDomain(approx.Generator());
    out.x = ConjArgmax(hr, eta * Y, std::min(tol, 1e-10),
                       start.size() == n ? &start : nullptr);
    start = out.x;
    approx.Touch(out.x);
    out.rounds = round;
    const Separation sep =
        PolarSeparation(out.x.head(d), out.x.tail(d), p, tol);
    if (sep.inside) {
      out.converged = true;
      break;
    }
    if (round == max_rounds) break;
    Vector cut(n);
    cut.head(d) = sep.y;
    cut.tail(d) = sep.yp;
    if (!approx.AddCut(cut)) break;
    ++out.cuts_added;
  }
  out.nu = NuOracle(out.x.head(d), out.x.tail(d)).nu;
  return out;
}

CuttingPlaneLearner::CuttingPlaneLearner(Regularizer h, PolarApprox approx,
                                         double tol, int max_rounds)
    : h_(std::move(h)),
      approx_(std::move(approx)),
      tol_(tol),
      max_rounds_(max_rounds) {
  const auto* cap = std::get_if<BallCapCone>(&h_.domain.rep);
  if (cap == nullptr ||
      !std::holds_alternative<GlobalCostCone>(cap->cone.rep)) {
    throw InputError(
        "CuttingPlaneLearner: regularizer domain must cap the global-cost "
        "polar cone");
  }
}

Vector CuttingPlaneLearner::Next(const Vector& Y, double eta) {
  const GcStep step = FtrlArgmaxGc(h_, approx_, Y, eta, tol_, max_rounds_,
                                   last_.size() ? &last_ : nullptr);
  total_rounds_ += step.rounds;
  if (!step.converged) ++unconverged_;
  last_ = step.x;
  return step.x;
}

double CuttingPlaneLearner::Support(const Vector& rbar) {
  return SupportFunction(approx_.Generator(), rbar, tol_);
}

GcConfiguration ConfigureLpAlgorithm(int d, double p) {
  GcConfiguration cfg;
  cfg.inst = GlobalCostInstance::Make(d, p);
  cfg.ball = NormTag::GlobalCostDual(d, cfg.inst.q);
  const GeneratorSet domain = CapGenerator(GlobalCostCone{d, p}, cfg.ball);
  cfg.h = Regularizer::CompositeGlobalCost(domain, d, p, cfg.inst.A,
                                           cfg.inst.q_prime);
  cfg.schedule = Schedule::FromCertificate(CertifyConstants(cfg.h), 2.0);
  return cfg;
}

double LpTheoremEta(int d, double p, int t) {
  const double dd = d;
  const double a = IsInfinite(p) ? 1.0 / dd : std::pow(dd, 2.0 / p - 1.0);
  const double b = std::exp(1.0) * (2.0 * std::log(dd) - 1.0);
  return 1.0 / (2.0 * std::sqrt(t * std::max(a, b)));
}

double LpTheoremBound(int d, double p, int T) {
  const double dd = d;
  const double a = IsInfinite(p) ? std::pow(dd, -0.5)
                                 : std::pow(dd, 1.0 / p - 0.5);
  const double b = std::sqrt(2.0 * std::exp(1.0) * std::log(dd));
  return 4.0 / std::sqrt(static_cast<double>(T)) * std::max(a, b);
}

GcConfiguration ConfigureNormAlgorithm(const NormTag& norm, double q_prime,
                                       double delta) {
  if (norm.kind != NormTag::Kind::kGlobalCostPrimal) {
    throw InputError(
        "ConfigureNormAlgorithm: expects a global-cost primal norm");
  }
  if (!(delta > 0.0)) {
    throw InputError("ConfigureNormAlgorithm: delta must be positive");
  }
  const int d = norm.d;
  GcConfiguration cfg;
  cfg.inst = GlobalCostInstance::Make(d, norm.p);
  cfg.inst.q_prime = q_prime;
  cfg.inst.clamped = false;
  cfg.ball = norm.Dual();
  GeneratorSet domain = CapGenerator(GlobalCostCone{d, norm.p}, cfg.ball);
  domain.delta = delta;
  cfg.h = Regularizer::LpSquared(domain, q_prime, 1.0, d);
  cfg.schedule = Schedule::FromCertificate(CertifyConstants(cfg.h), 1.0);
  return cfg;
}

double NormTheoremBound(int d, double q_prime, double delta, int T) {
  return 2.0 * std::pow(static_cast<double>(d), 1.0 - 1.0 / q_prime) *
         std::sqrt(delta / ((q_prime - 1.0) * T));
}

GlobalCostRegretTracker::GlobalCostRegretTracker(int d, double p)
    : d_(d), p_(p), cost_(Vector::Zero(d)), loss_(Vector::Zero(d)) {}

void GlobalCostRegretTracker::Add(const Vector& a, const Vector& loss) {
  RequireDim(a, d_, "GlobalCostRegretTracker::Add");
  RequireDim(loss, d_, "GlobalCostRegretTracker::Add");
  cost_ += a.cwiseProduct(loss);
  loss_ += loss;
  ++rounds_;
}

double GlobalCostRegretTracker::Regret() const {
  if (rounds_ == 0) return 0.0;
  const Vector c = cost_ / rounds_;
  const Vector l = loss_ / rounds_;
  return LpNorm(c, p_) - MinWeightedLpNorm(l.cwiseMax(0.0), p_).phi;
}

void GlobalCostRegretTracker::Observe(int, const Decision& decision,
                                      std::int64_t, const Vector& b) {
  Add(decision.action, b);
}

double EvalRegret(const std::vector<Vector>& actions,
                  const std::vector<Vector>& losses, double p) {
  if (actions.empty() || actions.size() != losses.size()) {
    throw InputError("EvalRegret: need a nonempty matching history");
  }
  GlobalCostRegretTracker tracker(static_cast<int>(losses.front().size()), p);
  for (size_t t = 0; t < actions.size(); ++t) {
    tracker.Add(actions[t], losses[t]);
  }
  return tracker.Regret();
}

}  // namespace approach
