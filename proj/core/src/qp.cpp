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

#include "approach/qp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace approach {
namespace {

struct ActiveConstraint {
  Vector a;  // unit normal in scaled coordinates
  double b = 0.0;
  int row = -1;  // explicit row index, or -1 for oracle constraints
  double scale = 1.0;  // norm of the scaled normal before normalization
  double u = 0.0;
};

}  // namespace

QpProjection ProjectPolyhedron(const Vector& v, const Vector& metric,
                               const Matrix& A, const Vector& b,
                               const std::vector<ConstraintOracle>& oracles,
                               const QpOptions& options) {
  const int n = static_cast<int>(v.size());
  const int m = static_cast<int>(A.rows());
  if (m > 0 && A.cols() != n) {
    throw InputError("ProjectPolyhedron: constraint matrix has " +
                     std::to_string(A.cols()) + " columns, expected " +
                     std::to_string(n));
  }
  if (b.size() != m) throw InputError("ProjectPolyhedron: rhs size mismatch");
  Vector root = Vector::Ones(n);
  if (metric.size() > 0) {
    RequireDim(metric, n, "ProjectPolyhedron metric");
    if ((metric.array() <= 0.0).any()) {
      throw InputError("ProjectPolyhedron: metric must be positive");
    }
    root = metric.cwiseSqrt();
  }

  // Scaled normals of the explicit rows.
  Matrix scaled_rows(m, n);
  Vector row_norm(m);
  for (int k = 0; k < m; ++k) {
    scaled_rows.row(k) = A.row(k).cwiseQuotient(root.transpose());
    row_norm[k] = scaled_rows.row(k).norm();
    if (row_norm[k] > 0.0) scaled_rows.row(k) /= row_norm[k];
  }

  Vector x = v.cwiseProduct(root);
  const double tol =
      options.feasibility_tol * (1.0 + x.cwiseAbs().maxCoeff());
  const int limit = options.max_iterations > 0
                        ? options.max_iterations
                        : 40 * (n + m + 10);
  std::vector<ActiveConstraint> active;
  std::vector<char> row_active(m, 0);
  int iterations = 0;

  Vector oracle_a(n);
  while (true) {
    // Most violated constraint.
    ActiveConstraint cand;
    double worst = tol;
    const Vector x_orig = x.cwiseQuotient(root);
    for (int k = 0; k < m; ++k) {
      if (row_active[k] || row_norm[k] == 0.0) continue;
      const double viol = scaled_rows.row(k).dot(x) - b[k] / row_norm[k];
      if (viol > worst) {
        worst = viol;
        cand.a = scaled_rows.row(k).transpose();
        cand.b = b[k] / row_norm[k];
        cand.row = k;
        cand.scale = row_norm[k];
      }
    }
    for (const ConstraintOracle& oracle : oracles) {
      double ob = 0.0;
      oracle_a.setZero();
      if (oracle(x_orig, &oracle_a, &ob) <= 0.0) continue;
      Vector sa = oracle_a.cwiseQuotient(root);
      const double norm = sa.norm();
      if (norm == 0.0) continue;
      const double viol = sa.dot(x) / norm - ob / norm;
      if (viol > worst) {
        worst = viol;
        cand.a = sa / norm;
        cand.b = ob / norm;
        cand.row = -1;
        cand.scale = norm;
      }
    }
    if (cand.a.size() == 0) break;

    double u_new = 0.0;
    while (true) {
      if (++iterations > limit) {
        throw SolverError("ProjectPolyhedron: iteration budget exhausted",
                          x.cwiseQuotient(root), 0.0, worst);
      }
      const int k = static_cast<int>(active.size());
      Vector r(k);
      Vector z = cand.a;
      if (k > 0) {
        Matrix N(n, k);
        for (int j = 0; j < k; ++j) N.col(j) = active[j].a;
        r = N.householderQr().solve(cand.a);
        z = cand.a - N * r;
      }
      double t1 = kInf;
      int drop = -1;
      for (int j = 0; j < k; ++j) {
        if (r[j] > 1e-12) {
          const double ratio = active[j].u / r[j];
          if (ratio < t1) {
            t1 = ratio;
            drop = j;
          }
        }
      }
      const double slack = cand.a.dot(x) - cand.b;
      const double z2 = z.squaredNorm();
      const double t2 = z2 > 1e-20 ? std::max(0.0, slack) / z2 : kInf;
      const double t = std::min(t1, t2);
      if (!std::isfinite(t)) {
        throw SolverError("ProjectPolyhedron: constraints are inconsistent",
                          x.cwiseQuotient(root), 0.0, slack);
      }
      if (std::isfinite(t2)) x -= t * z;
      for (int j = 0; j < k; ++j) active[j].u -= t * r[j];
      u_new += t;
      if (t2 <= t1) {
        cand.u = u_new;
        if (cand.row >= 0) row_active[cand.row] = 1;
        active.push_back(cand);
        break;
      }
      if (active[drop].row >= 0) row_active[active[drop].row] = 0;
      active.erase(active.begin() + drop);
    }
  }

  QpProjection out;
  out.x = x.cwiseQuotient(root);
  out.multipliers = Vector::Zero(m);
  for (const ActiveConstraint& c : active) {
    if (c.row >= 0) out.multipliers[c.row] = std::max(0.0, c.u) / c.scale;
  }
  out.iterations = iterations;
  return out;
}

ConstraintOracle L1BallOracle(int begin, int count, double radius) {
  return [begin, count, radius](const Vector& x, Vector* a, double* b) {
    const auto block = x.segment(begin, count);
    const double norm = block.cwiseAbs().sum();
    if (norm <= radius) return norm - radius;
    a->setZero();
    for (int i = 0; i < count; ++i) {
      const double xi = block[i];
      (*a)[begin + i] = xi > 0.0 ? 1.0 : (xi < 0.0 ? -1.0 : 0.0);
    }
    *b = radius;
    return norm - radius;
  };
}

ConstraintOracle LinfBallOracle(int begin, int count, double radius) {
  return [begin, count, radius](const Vector& x, Vector* a, double* b) {
    int arg = -1;
    double worst = -kInf;
    for (int i = 0; i < count; ++i) {
      const double xi = std::abs(x[begin + i]);
      if (xi > worst) {
        worst = xi;
        arg = i;
      }
    }
    if (arg < 0 || worst <= radius) return worst - radius;
    a->setZero();
    (*a)[begin + arg] = x[begin + arg] > 0.0 ? 1.0 : -1.0;
    *b = radius;
    return worst - radius;
  };
}

}  // namespace approach
