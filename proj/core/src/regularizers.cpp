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

#include "approach/regularizers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>
#include <vector>

#include "approach/random.hpp"
#include "approach/solvers.hpp"

namespace approach {
namespace {

// Gradient of 1/2 ||x||_q^2.
Vector HalfSquaredLqGradient(const Vector& x, double q) {
  Vector g = Vector::Zero(x.size());
  const double nrm = LpNorm(x, q);
  if (nrm == 0.0) return g;
  if (q == 2.0) return x;
  const double lead = std::pow(nrm, 2.0 - q);
  for (int i = 0; i < x.size(); ++i) {
    const double a = std::abs(x[i]);
    if (a == 0.0) continue;
    g[i] = (x[i] > 0.0 ? 1.0 : -1.0) * lead * std::pow(a, q - 1.0);
  }
  return g;
}

std::optional<BallsAndHalfspaces> AsBallsAndHalfspaces(
    const GeneratorSet& X) {
  const auto* cap = std::get_if<BallCapCone>(&X.rep);
  if (cap == nullptr) return std::nullopt;
  const int n = X.dim();
  bool sum_type = false;
  BallsAndHalfspaces set;
  set.d = n;
  set.blocks = NormBlocks(cap->norm, n, &sum_type);
  if (sum_type) return std::nullopt;
  if (const auto* o = std::get_if<Orthant>(&cap->cone.rep)) {
    set.A = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) set.A(i, i) = -o->signs[i];
  } else if (const auto* h =
                 std::get_if<HalfspaceIntersection>(&cap->cone.rep)) {
    set.A = h->normals;
  } else {
    return std::nullopt;
  }
  set.b = Vector::Zero(set.A.rows());
  return set;
}

bool IsQuadratic(const Regularizer& h) {
  switch (h.kind) {
    case Regularizer::Kind::kEuclideanSquared:
      return true;
    case Regularizer::Kind::kLpSquared:
    case Regularizer::Kind::kCompositeGlobalCost:
      return h.q_prime == 2.0;
    default:
      return false;
  }
}

// Diagonal of the Hessian of a quadratic regularizer.
Vector QuadraticMetric(const Regularizer& h, int n) {
  Vector w = Vector::Ones(n);
  if (h.kind == Regularizer::Kind::kLpSquared) {
    w *= h.scale;
  } else if (h.kind == Regularizer::Kind::kCompositeGlobalCost) {
    w.head(h.d).setConstant(h.A);
  }
  return w;
}

Vector PgaConjArgmax(const Regularizer& h, const Vector& y, double tol,
                     const Vector* warm) {
  const GeneratorSet& X = h.domain;
  Objective objective = [&](const Vector& x, Vector* grad) {
    if (grad != nullptr) *grad = y - h.Gradient(x);
    return y.dot(x) - h.Value(x);
  };
  Projector project = [&](const Vector& v) {
    return ProjectGenerator(X, v, 1e-13);
  };
  Vector x0 = warm != nullptr && warm->size() == y.size()
                  ? project(*warm)
                  : project(Vector::Zero(y.size()));
  PgaOptions options;
  options.tol = tol;
  options.max_iter = 50000;
  return PgaMaximize(objective, project, x0, options).x;
}

Vector SampleForCheck(const Regularizer& h, Rng& rng) {
  const GeneratorSet& X = h.domain;
  if (const auto* s = std::get_if<SimplexGen>(&X.rep)) {
    return rng.Dirichlet(s->d, rng.Uniform() < 0.5 ? 0.2 : 1.0);
  }
  if (const auto* cap = std::get_if<BallCapCone>(&X.rep)) {
    if (std::holds_alternative<GlobalCostCone>(cap->cone.rep)) {
      Vector v = rng.GaussianVector(X.dim());
      const double nrm = cap->norm.Eval(v);
      if (nrm > 0.0) v /= nrm;
      return v * rng.Uniform();
    }
  }
  return SampleGenerator(X, rng);
}

}  // namespace

Vector Softmax(const Vector& y) {
  const double top = y.maxCoeff();
  Vector e = (y.array() - top).exp().matrix();
  return e / e.sum();
}

Vector ScaledEntropicArgmax(const Vector& y, int m) {
  const int d = static_cast<int>(y.size());
  if (m < 1 || m > d) throw InputError("ScaledEntropicArgmax: need 1<=m<=d");
  if (m == d) return Vector::Ones(d);
  const Vector z = y * static_cast<double>(m);
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return z[a] > z[b]; });
  // Suffix log-sum-exp of the sorted z.
  std::vector<double> suffix(d + 1, -kInf);
  for (int k = d - 1; k >= 0; --k) {
    const double a = suffix[k + 1];
    const double b = z[order[k]];
    const double hi = std::max(a, b);
    suffix[k] = hi + std::log(std::exp(a - hi) + std::exp(b - hi));
  }
  int capped = 0;
  double log_theta = 0.0;
  for (int k = 0; k < m; ++k) {
    log_theta = std::log(static_cast<double>(m - k)) - suffix[k];
    if (log_theta + z[order[k]] <= 0.0) {
      capped = k;
      break;
    }
    capped = k + 1;
  }
  Vector x = Vector::Zero(d);
  for (int k = 0; k < d; ++k) {
    if (k < capped) {
      x[order[k]] = 1.0;
    } else {
      x[order[k]] = std::min(1.0, std::exp(log_theta + z[order[k]]));
    }
  }
  return x;
}

Regularizer Regularizer::Entropic(int d) {
  Regularizer h;
  h.kind = Kind::kEntropic;
  h.domain = MakeSimplex(d);
  return h;
}

Regularizer Regularizer::ScaledEntropic(int d, int m) {
  Regularizer h;
  h.kind = Kind::kScaledEntropic;
  h.domain = MakeCappedSimplex(d, m);
  h.m = m;
  return h;
}

Regularizer Regularizer::LpSquared(const GeneratorSet& domain, double q_prime,
                                   double scale, int constant_dim) {
  if (!(q_prime > 1.0 && q_prime <= 2.0)) {
    throw InputError("LpSquared: q' must lie in (1, 2]");
  }
  if (!(scale > 0.0)) throw InputError("LpSquared: scale must be positive");
  Regularizer h;
  h.kind = Kind::kLpSquared;
  h.domain = domain;
  h.q_prime = q_prime;
  h.scale = scale;
  h.constant_dim = constant_dim;
  return h;
}

Regularizer Regularizer::EuclideanSquared(const GeneratorSet& domain) {
  Regularizer h;
  h.kind = Kind::kEuclideanSquared;
  h.domain = domain;
  return h;
}

Regularizer Regularizer::CompositeGlobalCost(const GeneratorSet& domain,
                                             int d, double p, double A,
                                             double q_prime) {
  if (!(q_prime > 1.0 && q_prime <= 2.0)) {
    throw InputError("CompositeGlobalCost: q' must lie in (1, 2]");
  }
  if (!(A > 0.0)) throw InputError("CompositeGlobalCost: A must be positive");
  if (domain.dim() != 2 * d) {
    throw InputError("CompositeGlobalCost: domain must live in R^{2d}");
  }
  Regularizer h;
  h.kind = Kind::kCompositeGlobalCost;
  h.domain = domain;
  h.d = d;
  h.p = p;
  h.A = A;
  h.q_prime = q_prime;
  return h;
}

Regularizer Regularizer::WithDomain(const GeneratorSet& other) const {
  Regularizer h = *this;
  h.domain = other;
  return h;
}

double Regularizer::Value(const Vector& x) const {
  switch (kind) {
    case Kind::kEntropic: {
      double v = 0.0;
      for (int i = 0; i < x.size(); ++i) {
        if (x[i] > 0.0) v += x[i] * std::log(x[i]);
      }
      return v;
    }
    case Kind::kScaledEntropic: {
      double v = 0.0;
      for (int i = 0; i < x.size(); ++i) {
        const double u = x[i] / m;
        if (u > 0.0) v += u * std::log(u);
      }
      return v;
    }
    case Kind::kLpSquared: {
      const double n = LpNorm(x, q_prime);
      return 0.5 * scale * n * n;
    }
    case Kind::kEuclideanSquared:
      return 0.5 * x.squaredNorm();
    case Kind::kCompositeGlobalCost: {
      const double n = LpNorm(x.tail(d), q_prime);
      return 0.5 * A * x.head(d).squaredNorm() + 0.5 * n * n;
    }
  }
  return 0.0;
}

Vector Regularizer::Gradient(const Vector& x) const {
  switch (kind) {
    case Kind::kEntropic:
      return (x.array().max(1e-300).log() + 1.0).matrix();
    case Kind::kScaledEntropic:
      return ((x.array().max(1e-300) / m).log() + 1.0).matrix() /
             static_cast<double>(m);
    case Kind::kLpSquared:
      return scale * HalfSquaredLqGradient(x, q_prime);
    case Kind::kEuclideanSquared:
      return x;
    case Kind::kCompositeGlobalCost: {
      Vector g(x.size());
      g.head(d) = A * x.head(d);
      g.tail(d) = HalfSquaredLqGradient(x.tail(d), q_prime);
      return g;
    }
  }
  return x;
}

std::string Regularizer::ToString() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kEntropic:
      os << "entropic";
      break;
    case Kind::kScaledEntropic:
      os << "scaled_entropic(m=" << m << ")";
      break;
    case Kind::kLpSquared:
      os << "lp_squared(q'=" << q_prime << ", scale=" << scale << ")";
      break;
    case Kind::kEuclideanSquared:
      os << "euclidean_squared";
      break;
    case Kind::kCompositeGlobalCost:
      os << "composite_global_cost(A=" << A << ", q'=" << q_prime << ")";
      break;
  }
  os << " on " << domain.ToString();
  return os.str();
}

Vector ConjArgmax(const Regularizer& h, const Vector& y, double tol,
                  const Vector* warm) {
  RequireDim(y, h.domain.dim(), "ConjArgmax");
  RequireFinite(y, "ConjArgmax");
  if (h.kind == Regularizer::Kind::kEntropic &&
      std::holds_alternative<SimplexGen>(h.domain.rep)) {
    return Softmax(y);
  }
  if (h.kind == Regularizer::Kind::kScaledEntropic) {
    if (const auto* c = std::get_if<CappedSimplexGen>(&h.domain.rep)) {
      if (c->m == h.m) return ScaledEntropicArgmax(y, h.m);
    }
  }
  if (IsQuadratic(h)) {
    const int n = static_cast<int>(y.size());
    const Vector w = QuadraticMetric(h, n);
    const Vector target = y.cwiseQuotient(w);
    if (w.isApproxToConstant(w[0])) {
      return ProjectGenerator(h.domain, target, std::min(tol, 1e-12));
    }
    if (auto set = AsBallsAndHalfspaces(h.domain)) {
      return ProjectBallsAndHalfspaces(*set, target, w, std::min(tol, 1e-12))
          .x;
    }
  }
  return PgaConjArgmax(h, y, tol, warm);
}

Certificate CertifyConstants(const Regularizer& h) {
  Certificate c;
  const GeneratorSet& X = h.domain;
  switch (h.kind) {
    case Regularizer::Kind::kEntropic: {
      const auto* s = std::get_if<SimplexGen>(&X.rep);
      if (s == nullptr) {
        throw CapabilityError("CertifyConstants: entropic needs a simplex");
      }
      c.delta = std::log(static_cast<double>(s->d));
      c.K = 1.0;
      c.norm = NormTag::Lp(1.0);
      return c;
    }
    case Regularizer::Kind::kScaledEntropic: {
      const auto* s = std::get_if<CappedSimplexGen>(&X.rep);
      if (s == nullptr) {
        throw CapabilityError(
            "CertifyConstants: scaled entropic needs a capped simplex");
      }
      c.delta = std::log(static_cast<double>(s->d) / s->m);
      c.K = 1.0 / (static_cast<double>(s->m) * s->m);
      c.norm = NormTag::Lp(1.0);
      return c;
    }
    case Regularizer::Kind::kLpSquared: {
      const int n = h.constant_dim > 0 ? h.constant_dim : X.dim();
      c.K = h.scale * (h.q_prime - 1.0) *
            std::pow(static_cast<double>(n), 2.0 * (1.0 / h.q_prime - 1.0));
      c.norm = NormTag::Lp(1.0);
      if (X.delta) {
        c.delta = *X.delta;
        return c;
      }
      const Vector lo = ConjArgmax(h, Vector::Zero(X.dim()), 1e-12);
      const double hmin = h.Value(lo);
      double hmax = hmin;
      Rng rng(0x5eed);
      for (int start = 0; start < 20; ++start) {
        const Vector x0 = SampleForCheck(h, rng);
        Objective obj = [&](const Vector& x, Vector* grad) {
          if (grad != nullptr) *grad = h.Gradient(x);
          return h.Value(x);
        };
        Projector project = [&](const Vector& v) {
          return ProjectGenerator(X, v, 1e-13);
        };
        PgaOptions options;
        options.max_iter = 2000;
        try {
          hmax = std::max(hmax, PgaMaximize(obj, project, x0, options).value);
        } catch (const SolverError& e) {
          hmax = std::max(hmax, e.value());
        }
      }
      c.delta = hmax - hmin;
      return c;
    }
    case Regularizer::Kind::kEuclideanSquared: {
      if (const auto* s = std::get_if<SimplexGen>(&X.rep)) {
        c.delta = 0.5 * (1.0 - 1.0 / s->d);
        c.K = 1.0;
        c.norm = NormTag::Lp(2.0);
        return c;
      }
      const auto* cap = std::get_if<BallCapCone>(&X.rep);
      if (cap == nullptr || !(cap->norm == NormTag::Lp(2.0))) {
        throw CapabilityError(
            "CertifyConstants: euclidean regularizer needs an l2 cap");
      }
      c.delta = 0.5 * X.radius * X.radius;
      c.K = 1.0;
      c.norm = NormTag::Lp(2.0);
      return c;
    }
    case Regularizer::Kind::kCompositeGlobalCost: {
      const double d = h.d;
      const double expo = IsInfinite(h.p) ? -1.0 : 2.0 / h.p - 1.0;
      c.delta = 0.5 * (h.A * std::pow(d, std::max(expo, 0.0)) + 1.0);
      c.K = std::min(h.A, (h.q_prime - 1.0) *
                              std::pow(d, 2.0 * (1.0 / h.q_prime - 1.0)));
      c.norm = NormTag::GlobalCostDual(h.d, kInf);
      return c;
    }
  }
  return c;
}

StrongConvexityReport StrongConvexityCheck(const Regularizer& h, int samples,
                                           std::uint64_t seed,
                                           double tolerance) {
  return StrongConvexityCheck(h, CertifyConstants(h), samples, seed,
                              tolerance);
}

StrongConvexityReport StrongConvexityCheck(const Regularizer& h,
                                           const Certificate& cert,
                                           int samples, std::uint64_t seed,
                                           double tolerance) {
  if (samples < 1) throw InputError("StrongConvexityCheck: samples >= 1");
  Rng rng(seed);
  StrongConvexityReport report;
  report.samples = samples;
  for (int s = 0; s < samples; ++s) {
    const Vector x = SampleForCheck(h, rng);
    const Vector xp = SampleForCheck(h, rng);
    const double lambda = rng.Uniform();
    const Vector mid = lambda * x + (1.0 - lambda) * xp;
    const double dist = cert.norm.Eval(x - xp);
    const double rhs = lambda * h.Value(x) + (1.0 - lambda) * h.Value(xp) -
                       0.5 * cert.K * lambda * (1.0 - lambda) * dist * dist;
    const double margin = rhs - h.Value(mid);
    report.worst_margin = std::min(report.worst_margin, margin);
    if (margin < -tolerance) report.pass = false;
  }
  return report;
}

}  // namespace approach
