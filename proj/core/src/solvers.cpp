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

#include "approach/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "approach/lp.hpp"

namespace approach {
namespace {

int BlockCount(const LqBall& ball, int n) {
  return ball.count < 0 ? n - ball.begin : ball.count;
}

// Solves u + lambda * q * u^(q-1) = c for u in [0, c], c >= 0.
double SolveLqCoordinate(double c, double lambda, double q) {
  if (c <= 0.0) return 0.0;
  double lo = 0.0;
  double hi = c;
  double u = c / (1.0 + lambda * q);
  for (int it = 0; it < 100; ++it) {
    const double f = u + lambda * q * std::pow(u, q - 1.0) - c;
    if (f > 0.0) {
      hi = u;
    } else {
      lo = u;
    }
    const double df = 1.0 + lambda * q * (q - 1.0) * std::pow(u, q - 2.0);
    double next = u - f / df;
    if (!(next > lo && next < hi) || !std::isfinite(next)) {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - u) <= 1e-15 * (1.0 + c)) return next;
    u = next;
    if (hi - lo <= 1e-16 * (1.0 + c)) break;
  }
  return u;
}

}  // namespace

double Bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol, int max_iter) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  const bool increasing = flo < 0.0;
  for (int it = 0; it < max_iter && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Vector ProjectSimplex(const Vector& v, double total) {
  const int n = static_cast<int>(v.size());
  if (n == 0) throw InputError("ProjectSimplex: empty vector");
  if (total < 0.0) throw InputError("ProjectSimplex: negative total");
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (int j = 0; j < n; ++j) {
    cumulative += u[j];
    const double t = (cumulative - total) / (j + 1);
    if (u[j] - t > 0.0) theta = t;
  }
  return (v.array() - theta).max(0.0).matrix();
}

Vector ProjectL1Ball(const Vector& v, double radius) {
  if (v.cwiseAbs().sum() <= radius) return v;
  const Vector w = ProjectSimplex(v.cwiseAbs(), radius);
  return w.cwiseProduct(v.unaryExpr([](double a) {
    return a > 0.0 ? 1.0 : (a < 0.0 ? -1.0 : 0.0);
  }));
}

Vector ProjectLqBall(const Vector& v, double q, double radius) {
  if (q < 1.0) throw InputError("ProjectLqBall: q must be >= 1");
  if (radius < 0.0) throw InputError("ProjectLqBall: negative radius");
  if (q == 1.0) return ProjectL1Ball(v, radius);
  if (IsInfinite(q)) {
    return v.cwiseMax(-radius).cwiseMin(radius);
  }
  const double norm = LpNorm(v, q);
  if (norm <= radius) return v;
  if (q == 2.0) return v * (radius / norm);
  if (radius == 0.0) return Vector::Zero(v.size());
  // Scale so that the largest magnitude is one.
  const double scale = v.cwiseAbs().maxCoeff();
  const Vector c = v.cwiseAbs() / scale;
  const double r = radius / scale;
  const double target = std::pow(r, q);
  auto excess = [&](double lambda) {
    double acc = 0.0;
    for (int i = 0; i < c.size(); ++i) {
      acc += std::pow(SolveLqCoordinate(c[i], lambda, q), q);
    }
    return acc - target;
  };
  double hi = 1.0;
  int guard = 0;
  while (excess(hi) > 0.0 && guard++ < 200) hi *= 2.0;
  const double lambda = Bisect(excess, 0.0, hi, 1e-15 * hi, 200);
  Vector out(v.size());
  for (int i = 0; i < v.size(); ++i) {
    const double u = SolveLqCoordinate(c[i], lambda, q) * scale;
    out[i] = v[i] >= 0.0 ? u : -u;
  }
  // Guard against overshoot from the finite bisection.
  const double got = LpNorm(out, q);
  if (got > radius) out *= radius / got;
  return out;
}

Vector ProjectCappedSimplex(const Vector& v, double m) {
  const int d = static_cast<int>(v.size());
  if (m < 0.0 || m > d) {
    throw InputError("ProjectCappedSimplex: m must lie in [0, d]");
  }
  auto sum_at = [&](double tau) {
    return (v.array() - tau).max(0.0).min(1.0).sum() - m;
  };
  const double lo = v.minCoeff() - 1.0;
  const double hi = v.maxCoeff();
  double tau = Bisect(sum_at, lo, hi, 1e-13, 200);
  // Exact refinement on the free coordinates.
  for (int pass = 0; pass < 3; ++pass) {
    int ones = 0;
    int free = 0;
    double free_sum = 0.0;
    for (int i = 0; i < d; ++i) {
      const double s = v[i] - tau;
      if (s >= 1.0) {
        ++ones;
      } else if (s > 0.0) {
        ++free;
        free_sum += v[i];
      }
    }
    if (free == 0) break;
    const double refined = (free_sum - (m - ones)) / free;
    if (refined == tau) break;
    tau = refined;
  }
  return (v.array() - tau).max(0.0).min(1.0).matrix();
}

QpProjection ProjectBallsAndHalfspaces(const BallsAndHalfspaces& set,
                                       const Vector& v, const Vector& metric,
                                       double tol) {
  const int n = set.d;
  RequireDim(v, n, "ProjectBallsAndHalfspaces");
  const Matrix A = set.A.size() == 0 ? Matrix(0, n) : set.A;
  const Vector b = set.b.size() == 0 ? Vector(0) : set.b;
  std::vector<ConstraintOracle> oracles;
  std::vector<BallBlock> curved;
  for (const BallBlock& blk : set.blocks) {
    if (blk.begin < 0 || blk.count <= 0 || blk.begin + blk.count > n) {
      throw InputError("ProjectBallsAndHalfspaces: block out of range");
    }
    if (blk.q == 1.0) {
      oracles.push_back(L1BallOracle(blk.begin, blk.count, blk.radius));
    } else if (IsInfinite(blk.q)) {
      oracles.push_back(LinfBallOracle(blk.begin, blk.count, blk.radius));
    } else {
      curved.push_back(blk);
    }
  }
  QpOptions qopt;
  qopt.feasibility_tol = std::max(tol, 1e-13);
  if (curved.empty()) {
    return ProjectPolyhedron(v, metric, A, b, oracles, qopt);
  }
  const Vector g = metric.size() == 0 ? Vector::Ones(n) : metric;
  if (curved.size() == 1 && curved[0].q == 2.0) {
    const BallBlock blk = curved[0];
    auto solve = [&](double mu) {
      Vector g2 = g;
      Vector v2 = v;
      for (int i = blk.begin; i < blk.begin + blk.count; ++i) {
        g2[i] = g[i] + mu;
        v2[i] = g[i] * v[i] / (g[i] + mu);
      }
      return ProjectPolyhedron(v2, g2, A, b, oracles, qopt);
    };
    auto block_norm = [&](const QpProjection& p) {
      return p.x.segment(blk.begin, blk.count).norm();
    };
    QpProjection at_zero = solve(0.0);
    const double n0 = block_norm(at_zero);
    if (n0 <= blk.radius * (1.0 + 1e-13)) return at_zero;
    // psi(mu) = 1/||z(mu)|| - 1/r is close to affine in mu; use a
    // bracketed Illinois iteration on it.
    auto psi = [&](const QpProjection& p) {
      const double nz = block_norm(p);
      return (nz > 0.0 ? 1.0 / nz : kInf) - 1.0 / blk.radius;
    };
    double lo = 0.0;
    double flo = psi(at_zero);
    double hi = std::max(1.0, n0 / blk.radius - 1.0) *
                (g.segment(blk.begin, blk.count).maxCoeff());
    QpProjection at_hi = solve(hi);
    double fhi = psi(at_hi);
    int guard = 0;
    while (fhi < 0.0 && guard++ < 200) {
      lo = hi;
      flo = fhi;
      hi *= 2.0;
      at_hi = solve(hi);
      fhi = psi(at_hi);
    }
    int side = 0;
    for (int it = 0; it < 200; ++it) {
      if (fhi <= 1e-14 / blk.radius && fhi >= 0.0) break;
      if (hi - lo <= 1e-15 * (1.0 + hi)) break;
      double mid = std::isfinite(fhi) ? (lo * fhi - hi * flo) / (fhi - flo)
                                      : 0.5 * (lo + hi);
      if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
      QpProjection at_mid = solve(mid);
      const double fm = psi(at_mid);
      if (fm >= 0.0) {
        hi = mid;
        fhi = fm;
        at_hi = std::move(at_mid);
        if (side == 1) flo *= 0.5;
        side = 1;
      } else {
        lo = mid;
        flo = fm;
        if (side == -1) fhi *= 0.5;
        side = -1;
      }
    }
    // at_hi is feasible for the ball; recompute multipliers in the original
    // metric convention (unchanged, see header).
    return at_hi;
  }
  if (metric.size() != 0 && !(metric.array() == 1.0).all()) {
    throw CapabilityError(
        "ProjectBallsAndHalfspaces: non-identity metric with general l_q "
        "blocks");
  }
  std::vector<FeasibleSet> parts;
  BallsAndHalfspaces poly;
  poly.d = n;
  poly.A = A;
  poly.b = b;
  for (const BallBlock& blk : set.blocks) {
    if (blk.q == 1.0 || IsInfinite(blk.q)) {
      poly.blocks.push_back(blk);
    } else {
      parts.push_back(LqBall{n, blk.q, blk.radius, blk.begin, blk.count});
    }
  }
  parts.push_back(poly);
  DykstraResult dr = DykstraProjectDetailed(parts, v, tol, 200000);
  QpProjection out;
  out.x = dr.x;
  out.multipliers = Vector::Zero(A.rows());
  out.iterations = dr.iterations;
  return out;
}

int AmbientDim(const FeasibleSet& set) {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SimplexSet> ||
                      std::is_same_v<T, L1Ball> || std::is_same_v<T, LqBall> ||
                      std::is_same_v<T, CappedSimplex> ||
                      std::is_same_v<T, BallsAndHalfspaces>) {
          return s.d;
        } else if constexpr (std::is_same_v<T, Halfspace>) {
          return static_cast<int>(s.normal.size());
        } else if constexpr (std::is_same_v<T, OrthantSet>) {
          return static_cast<int>(s.signs.size());
        } else if constexpr (std::is_same_v<T, ConicHull>) {
          return static_cast<int>(s.rays.rows());
        } else if constexpr (std::is_same_v<T, PolyhedralCone>) {
          return static_cast<int>(s.normals.cols());
        } else {
          if (s.sets.empty()) throw InputError("Intersection: no member sets");
          return AmbientDim(s.sets.front());
        }
      },
      set.kind);
}

Vector ProjectOnto(const FeasibleSet& set, const Vector& v, double tol) {
  RequireDim(v, AmbientDim(set), "ProjectOnto");
  RequireFinite(v, "ProjectOnto");
  return std::visit(
      [&](const auto& s) -> Vector {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SimplexSet>) {
          return ProjectSimplex(v, s.total);
        } else if constexpr (std::is_same_v<T, L1Ball>) {
          return ProjectL1Ball(v, s.radius);
        } else if constexpr (std::is_same_v<T, LqBall>) {
          const int count = BlockCount(s, s.d);
          Vector out = v;
          out.segment(s.begin, count) =
              ProjectLqBall(v.segment(s.begin, count), s.q, s.radius);
          return out;
        } else if constexpr (std::is_same_v<T, CappedSimplex>) {
          return ProjectCappedSimplex(v, s.m);
        } else if constexpr (std::is_same_v<T, Halfspace>) {
          const double excess = s.normal.dot(v) - s.offset;
          const double n2 = s.normal.squaredNorm();
          if (excess <= 0.0 || n2 == 0.0) return v;
          return v - (excess / n2) * s.normal;
        } else if constexpr (std::is_same_v<T, OrthantSet>) {
          Vector out = v;
          for (int i = 0; i < v.size(); ++i) {
            if (s.signs[i] > 0.0) out[i] = std::max(0.0, v[i]);
            if (s.signs[i] < 0.0) out[i] = std::min(0.0, v[i]);
          }
          return out;
        } else if constexpr (std::is_same_v<T, ConicHull>) {
          if (s.rays.cols() == 0) return Vector::Zero(v.size());
          return s.rays * Nnls(s.rays, v, tol);
        } else if constexpr (std::is_same_v<T, PolyhedralCone>) {
          QpOptions qopt;
          qopt.feasibility_tol = std::max(tol, 1e-13);
          return ProjectPolyhedron(v, Vector(), s.normals,
                                   Vector::Zero(s.normals.rows()), {}, qopt)
              .x;
        } else if constexpr (std::is_same_v<T, BallsAndHalfspaces>) {
          return ProjectBallsAndHalfspaces(s, v, Vector(), tol).x;
        } else {
          return DykstraProject(s.sets, v, std::max(tol, 1e-12), 200000);
        }
      },
      set.kind);
}

bool Contains(const FeasibleSet& set, const Vector& x, double tol) {
  if (x.size() != AmbientDim(set)) return false;
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SimplexSet>) {
          return x.minCoeff() >= -tol && std::abs(x.sum() - s.total) <= tol;
        } else if constexpr (std::is_same_v<T, L1Ball>) {
          return x.cwiseAbs().sum() <= s.radius + tol;
        } else if constexpr (std::is_same_v<T, LqBall>) {
          const int count = BlockCount(s, s.d);
          return LpNorm(x.segment(s.begin, count), s.q) <= s.radius + tol;
        } else if constexpr (std::is_same_v<T, CappedSimplex>) {
          return x.minCoeff() >= -tol && x.maxCoeff() <= 1.0 + tol &&
                 std::abs(x.sum() - s.m) <= tol;
        } else if constexpr (std::is_same_v<T, Halfspace>) {
          return s.normal.dot(x) <= s.offset + tol;
        } else if constexpr (std::is_same_v<T, OrthantSet>) {
          for (int i = 0; i < x.size(); ++i) {
            if (s.signs[i] * x[i] < -tol) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, ConicHull>) {
          const Vector p = ProjectOnto(set, x, 1e-14);
          return (p - x).norm() <= tol;
        } else if constexpr (std::is_same_v<T, PolyhedralCone>) {
          return s.normals.rows() == 0 ||
                 (s.normals * x).maxCoeff() <= tol;
        } else if constexpr (std::is_same_v<T, BallsAndHalfspaces>) {
          for (const BallBlock& blk : s.blocks) {
            if (LpNorm(x.segment(blk.begin, blk.count), blk.q) >
                blk.radius + tol) {
              return false;
            }
          }
          return s.A.rows() == 0 || (s.A * x - s.b).maxCoeff() <= tol;
        } else {
          for (const FeasibleSet& member : s.sets) {
            if (!Contains(member, x, tol)) return false;
          }
          return true;
        }
      },
      set.kind);
}

DykstraResult DykstraProjectDetailed(const std::vector<FeasibleSet>& sets,
                                     const Vector& v, double tol,
                                     int max_iter) {
  if (sets.empty()) throw InputError("DykstraProject: no member sets");
  const int k = static_cast<int>(sets.size());
  DykstraResult out;
  out.increments.assign(k, Vector::Zero(v.size()));
  std::vector<Vector> iterates(k, v);
  Vector x = v;
  for (int iter = 1; iter <= max_iter; ++iter) {
    double change = 0.0;
    for (int i = 0; i < k; ++i) {
      const Vector y = x + out.increments[i];
      const Vector next = ProjectOnto(sets[i], y, 1e-14);
      out.increments[i] = y - next;
      change += (next - iterates[i]).squaredNorm();
      iterates[i] = next;
      x = next;
    }
    out.iterations = iter;
    out.displacement = std::sqrt(change);
    if (out.displacement <= tol) {
      out.x = x;
      return out;
    }
  }
  throw SolverError("DykstraProject: iteration limit exceeded", x, 0.0,
                    out.displacement);
}

Vector DykstraProject(const std::vector<FeasibleSet>& sets, const Vector& v,
                      double tol, int max_iter) {
  return DykstraProjectDetailed(sets, v, tol, max_iter).x;
}

PgaResult PgaMaximize(const Objective& objective, const Projector& project,
                      const Vector& x0, const PgaOptions& options) {
  PgaResult out;
  Vector x = project(x0);
  Vector g(x.size());
  double f = objective(x, &g);
  double step = options.initial_step;
  std::vector<double> history{f};
  Vector g_new(x.size());
  for (int k = 1; k <= options.max_iter; ++k) {
    Vector x_new;
    double f_new = 0.0;
    Vector d;
    bool accepted = false;
    for (int bt = 0; bt < 80; ++bt) {
      x_new = project(x + step * g);
      d = x_new - x;
      f_new = objective(x_new, &g_new);
      const double model = f + g.dot(d) - d.squaredNorm() / (2.0 * step);
      if (std::isfinite(f_new) &&
          f_new >= model - 1e-15 * (1.0 + std::abs(f))) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    out.iterations = k;
    if (!accepted) {
      out.x = x;
      out.value = f;
      out.residual = d.norm() / step;
      return out;
    }
    out.residual = d.norm() / step;
    const double sy = d.dot(g_new - g);
    const double ss = d.squaredNorm();
    x = x_new;
    f = f_new;
    g = g_new;
    history.push_back(f);
    if (out.residual <= options.tol) {
      out.x = x;
      out.value = f;
      return out;
    }
    const int w = options.stall_window;
    if (static_cast<int>(history.size()) > w &&
        f - history[history.size() - 1 - w] <= options.tol / 10.0) {
      out.x = x;
      out.value = f;
      return out;
    }
    if (sy < 0.0 && ss > 0.0) {
      step = std::clamp(ss / -sy, 1e-12, 1e12);
    } else {
      step = std::min(step * 4.0, 1e12);
    }
  }
  throw SolverError("PgaMaximize: iteration budget exhausted", x, f,
                    out.residual);
}

Vector PgaMaximize(const Objective& objective, const FeasibleSet& set,
                   const Vector& x0, double tol) {
  PgaOptions options;
  options.tol = tol;
  return PgaMaximize(
             objective,
             [&set](const Vector& y) { return ProjectOnto(set, y, 1e-14); },
             x0, options)
      .x;
}

Vector StationaryDistribution(const Matrix& P, double damping) {
  const int n = static_cast<int>(P.rows());
  if (n == 0 || P.cols() != n) {
    throw InputError("StationaryDistribution: matrix must be square");
  }
  if (!P.allFinite() || P.minCoeff() < -1e-12) {
    throw InputError("StationaryDistribution: entries must be nonnegative");
  }
  for (int i = 0; i < n; ++i) {
    if (std::abs(P.row(i).sum() - 1.0) > 1e-10) {
      throw InputError("StationaryDistribution: row " + std::to_string(i) +
                       " does not sum to 1");
    }
  }
  Matrix A = (1.0 - damping) * P.cwiseMax(0.0) +
             Matrix::Constant(n, n, damping / n);
  for (int k = n - 1; k >= 1; --k) {
    double s = 0.0;
    for (int j = 0; j < k; ++j) s += A(k, j);
    for (int i = 0; i < k; ++i) A(i, k) /= s;
    for (int i = 0; i < k; ++i) {
      const double f = A(i, k);
      if (f == 0.0) continue;
      for (int j = 0; j < k; ++j) A(i, j) += f * A(k, j);
    }
  }
  Vector a(n);
  a[0] = 1.0;
  for (int j = 1; j < n; ++j) {
    double acc = 0.0;
    for (int i = 0; i < j; ++i) acc += a[i] * A(i, j);
    a[j] = acc;
  }
  a /= a.sum();
  const double residual = (P.transpose() * a - a).cwiseAbs().maxCoeff();
  if (residual > 1e-8) {
    throw SolverError("StationaryDistribution: residual check failed", a, 0.0,
                      residual);
  }
  return a;
}

WeightedNormMin MinWeightedLpNorm(const Vector& y, double p) {
  if (!(p > 1.0)) throw InputError("MinWeightedLpNorm: p must exceed 1");
  const int d = static_cast<int>(y.size());
  if (d == 0) throw InputError("MinWeightedLpNorm: empty vector");
  if (y.minCoeff() < 0.0) {
    throw InputError("MinWeightedLpNorm: entries must be nonnegative");
  }
  WeightedNormMin out;
  out.a = Vector::Zero(d);
  for (int i = 0; i < d; ++i) {
    if (y[i] == 0.0) {
      out.a[i] = 1.0;
      out.phi = 0.0;
      return out;
    }
  }
  const double q = DualExponent(p);
  const double s = y.minCoeff();
  double total = 0.0;
  for (int i = 0; i < d; ++i) {
    out.a[i] = std::pow(s / y[i], q);
    total += out.a[i];
  }
  out.a /= total;
  out.phi = s * std::pow(total, -1.0 / q);
  return out;
}

std::vector<SubsetWeight> CaratheodoryDecompose(const Vector& x, int m) {
  const int d = static_cast<int>(x.size());
  if (m < 1 || m > d) {
    throw InputError("CaratheodoryDecompose: m must lie in [1, d]");
  }
  if (x.minCoeff() < -1e-9 || x.maxCoeff() > 1.0 + 1e-9 ||
      std::abs(x.sum() - m) > 1e-9 * std::max(1, m)) {
    throw InputError("CaratheodoryDecompose: point outside the polytope");
  }
  Vector r = x.cwiseMax(0.0).cwiseMin(1.0);
  double remaining = 1.0;
  std::vector<SubsetWeight> out;
  std::vector<int> order(d);
  for (int round = 0; round <= d + 1 && remaining > 1e-15; ++round) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return r[a] > r[b]; });
    double w = remaining;
    for (int k = 0; k < m; ++k) w = std::min(w, r[order[k]]);
    if (m < d) w = std::min(w, remaining - r[order[m]]);
    if (w <= 1e-15) break;
    SubsetWeight sw;
    sw.subset.assign(order.begin(), order.begin() + m);
    std::sort(sw.subset.begin(), sw.subset.end());
    sw.weight = w;
    for (int i : sw.subset) r[i] -= w;
    remaining -= w;
    out.push_back(std::move(sw));
  }
  if (out.empty()) {
    throw InputError("CaratheodoryDecompose: degenerate input");
  }
  if (remaining > 0.0) out.back().weight += remaining;
  return out;
}

Vector Nnls(const Matrix& R, const Vector& y, double tol) {
  const int k = static_cast<int>(R.cols());
  if (R.rows() != y.size()) throw InputError("Nnls: dimension mismatch");
  Vector lambda = Vector::Zero(k);
  std::vector<char> passive(k, 0);
  const double scale = std::max(1.0, R.cwiseAbs().maxCoeff()) *
                       std::max(1.0, y.cwiseAbs().maxCoeff());
  const double wtol = tol * scale * std::max(1, k);
  auto solve_passive = [&]() {
    std::vector<int> idx;
    for (int j = 0; j < k; ++j) {
      if (passive[j]) idx.push_back(j);
    }
    Matrix Rp(R.rows(), idx.size());
    for (size_t c = 0; c < idx.size(); ++c) Rp.col(c) = R.col(idx[c]);
    const Vector sp = Rp.colPivHouseholderQr().solve(y);
    Vector s = Vector::Zero(k);
    for (size_t c = 0; c < idx.size(); ++c) s[idx[c]] = sp[c];
    return s;
  };
  for (int outer = 0; outer < 3 * k + 30; ++outer) {
    const Vector w = R.transpose() * (y - R * lambda);
    int enter = -1;
    double best = wtol;
    for (int j = 0; j < k; ++j) {
      if (!passive[j] && w[j] > best) {
        best = w[j];
        enter = j;
      }
    }
    if (enter < 0) break;
    passive[enter] = 1;
    for (int inner = 0; inner < 3 * k + 30; ++inner) {
      const Vector s = solve_passive();
      bool positive = true;
      for (int j = 0; j < k; ++j) {
        if (passive[j] && s[j] <= 0.0) positive = false;
      }
      if (positive) {
        lambda = s;
        break;
      }
      double alpha = kInf;
      for (int j = 0; j < k; ++j) {
        if (passive[j] && s[j] <= 0.0) {
          alpha = std::min(alpha, lambda[j] / (lambda[j] - s[j]));
        }
      }
      lambda += alpha * (s - lambda);
      for (int j = 0; j < k; ++j) {
        if (passive[j] && lambda[j] <= 1e-15 * scale) {
          passive[j] = 0;
          lambda[j] = 0.0;
        }
      }
    }
  }
  return lambda.cwiseMax(0.0);
}

NuOracleResult NuOracle(const Vector& z, const Vector& zp) {
  const int d = static_cast<int>(z.size());
  if (d == 0 || zp.size() != d) {
    throw InputError("NuOracle: z and z' must have the same positive size");
  }
  LpProblem lp;
  lp.c = Vector::Zero(2 * d);
  lp.c.tail(d).setOnes();
  lp.A = Matrix::Zero(d + 2, 2 * d);
  lp.b = Vector::Zero(d + 2);
  for (int i = 0; i < d; ++i) {
    lp.A(i, i) = z[i];
    lp.A(i, d + i) = -1.0;
    lp.b[i] = -zp[i];
  }
  lp.A.row(d).head(d).setOnes();
  lp.b[d] = 1.0;
  lp.A.row(d + 1).head(d).setConstant(-1.0);
  lp.b[d + 1] = -1.0;
  const LpResult res = LpSolve(lp);
  NuOracleResult out;
  out.a = res.solution.head(d).cwiseMax(0.0);
  out.a /= out.a.sum();
  double nu = 0.0;
  for (int i = 0; i < d; ++i) nu += std::max(0.0, z[i] * out.a[i] + zp[i]);
  out.nu = nu;
  return out;
}

}  // namespace approach
