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

#include "approach/lp.hpp"
#include "approach/random.hpp"
#include "approach/solvers.hpp"

using approach::kInf;
using approach::LpProblem;
using approach::Matrix;
using approach::Rng;
using approach::Vector;

namespace {

Vector V(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

Matrix M(int rows, int cols, std::initializer_list<double> xs) {
  Matrix m(rows, cols);
  auto it = xs.begin();
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = *it++;
  }
  return m;
}

// min over a on a 1e-3 grid of the 2-simplex of sum max(0, z_i a_i + zp_i).
double NuGrid(const Vector& z, const Vector& zp) {
  double best = kInf;
  for (int i = 0; i <= 1000; ++i) {
    const double a = i * 1e-3;
    best = std::min(best, std::max(0.0, z[0] * a + zp[0]) +
                              std::max(0.0, z[1] * (1 - a) + zp[1]));
  }
  return best;
}

// min ||v - x||^2 over x = (s, 1 - s) on a 1e-4 grid.
Vector SimplexGridProjection(const Vector& v) {
  double best = kInf;
  Vector arg(2);
  for (int i = 0; i <= 10000; ++i) {
    const Vector x = V({i * 1e-4, 1 - i * 1e-4});
    if ((v - x).squaredNorm() < best) {
      best = (v - x).squaredNorm();
      arg = x;
    }
  }
  return arg;
}

// Minimum of c.u over {A u <= b, u >= 0} by enumerating vertices.
double VertexEnumeration(const LpProblem& p) {
  const int n = static_cast<int>(p.c.size());
  const int rows = static_cast<int>(p.A.rows());
  Matrix G(rows + n, n);
  Vector h(rows + n);
  G << p.A, -Matrix::Identity(n, n);
  h << p.b, Vector::Zero(n);
  double best = kInf;
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
      if (((G * u - h).array() <= 1e-9).all()) best = std::min(best, p.c.dot(u));
      return;
    }
    for (int i = start; i < rows + n; ++i) {
      pick[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  return best;
}

}  // namespace

TEST_CASE("lp examples") {
  LpProblem p{V({-1}), M(1, 1, {1}), V({1})};
  auto r = approach::LpSolve(p);
  CHECK(r.value == doctest::Approx(-1.0));
  CHECK(r.solution[0] == doctest::Approx(1.0));

  p = {V({1, 1}), M(1, 2, {-1, -1}), V({-1})};
  CHECK(approach::LpSolve(p).value == doctest::Approx(1.0));
}

TEST_CASE("lp reports infeasible and unbounded problems") {
  LpProblem infeasible{V({1}), M(1, 1, {1}), V({-1})};
  CHECK_THROWS_AS(approach::LpSolve(infeasible), approach::LpError);
  LpProblem unbounded{V({-1}), M(1, 1, {-1}), V({1})};
  CHECK_THROWS_AS(approach::LpSolve(unbounded), approach::LpError);
}

TEST_CASE("lp agrees with vertex enumeration") {
  Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + static_cast<int>(rng.Below(6));
    const int rows = 1 + static_cast<int>(rng.Below(4));
    LpProblem p;
    p.c = rng.GaussianVector(n);
    p.A = Matrix::NullaryExpr(rows, n, [&]() { return rng.Uniform(0.1, 1.0); });
    p.b = rng.UniformVector(rows, 0.5, 2.0);
    CHECK(approach::LpSolve(p).value ==
          doctest::Approx(VertexEnumeration(p)).epsilon(1e-9));
  }
}

TEST_CASE("lp multipliers certify optimality") {
  Rng rng(32);
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + static_cast<int>(rng.Below(6));
    const int rows = 1 + static_cast<int>(rng.Below(8));
    LpProblem p;
    p.c = rng.GaussianVector(n);
    p.A = Matrix::NullaryExpr(rows, n, [&]() { return rng.Uniform(0.1, 1.0); });
    p.b = rng.UniformVector(rows, 0.5, 2.0);
    if (k % 2 == 1) {
      p.A.row(0) = -p.A.row(0);
      p.b[0] = -0.1;
    }
    approach::LpResult r;
    try {
      r = approach::LpSolve(p);
    } catch (const approach::LpError&) {
      continue;
    }
    REQUIRE(r.duals.size() == rows);
    CHECK(r.duals.minCoeff() >= 0.0);
    CHECK((p.c + p.A.transpose() * r.duals).minCoeff() >= -1e-9);
    CHECK(r.value == doctest::Approx(-p.b.dot(r.duals)).epsilon(1e-9));
  }
}

TEST_CASE("nu oracle examples") {
  auto r = approach::NuOracle(V({-1, -1}), V({0, 0}));
  CHECK(r.nu == doctest::Approx(0.0));
  CHECK(r.a.sum() == doctest::Approx(1.0));

  r = approach::NuOracle(V({1, 1}), V({0.5, 0.5}));
  CHECK(r.nu == doctest::Approx(2.0));
  CHECK(std::abs(NuGrid(V({1, 1}), V({0.5, 0.5})) - 2.0) <= 1e-12);

  r = approach::NuOracle(V({2, -1}), V({-0.5, 0}));
  CHECK(r.nu == doctest::Approx(0.0));
  CHECK(r.a[0] <= 0.25 + 1e-9);
  CHECK(NuGrid(V({2, -1}), V({-0.5, 0})) == 0.0);
}

TEST_CASE("nu oracle matches a grid and is positively homogeneous") {
  Rng rng(33);
  for (int k = 0; k < 100; ++k) {
    const Vector z = rng.UniformVector(2, -1, 1);
    const Vector zp = rng.UniformVector(2, -1, 1);
    const double nu = approach::NuOracle(z, zp).nu;
    CHECK(std::abs(nu - NuGrid(z, zp)) <= 1e-3);
    const double lambda = rng.Uniform(0.1, 10);
    CHECK(approach::NuOracle(lambda * z, lambda * zp).nu ==
          doctest::Approx(lambda * nu).epsilon(1e-9));
  }
}

TEST_CASE("projection examples") {
  CHECK((approach::ProjectSimplex(V({0.5, 0.9})) - V({0.3, 0.7})).norm() <=
        1e-14);
  CHECK((SimplexGridProjection(V({0.5, 0.9})) - V({0.3, 0.7})).norm() <= 1e-4);
  CHECK((approach::ProjectL1Ball(V({2, 0})) - V({1, 0})).norm() == 0.0);
  CHECK((approach::ProjectCappedSimplex(V({2, 0.5, 0.5}), 2) -
         V({1, 0.5, 0.5}))
            .norm() <= 1e-10);
  CHECK((approach::ProjectLqBall(V({3, 4}), 2.0) - V({0.6, 0.8})).norm() <=
        1e-12);
}

TEST_CASE("capped simplex projection matches a grid") {
  // Points of {x in [0,1]^3, sum = 2} are (a, b, 2 - a - b).
  const Vector v = V({2, 0.5, 0.5});
  double best = kInf;
  for (int i = 0; i <= 1000; ++i) {
    for (int j = 0; j <= 1000; ++j) {
      const double a = i * 1e-3, b = j * 1e-3, c = 2 - a - b;
      if (c < 0 || c > 1) continue;
      best = std::min(best, (v - V({a, b, c})).squaredNorm());
    }
  }
  const Vector x = approach::ProjectCappedSimplex(v, 2);
  CHECK((v - x).squaredNorm() <= best + 1e-12);
}

TEST_CASE("projections satisfy the variational inequality") {
  Rng rng(35);
  for (int k = 0; k < 20; ++k) {
    const int d = 2 + static_cast<int>(rng.Below(5));
    const Vector v = 2.0 * rng.GaussianVector(d);
    const std::vector<approach::FeasibleSet> sets = {
        approach::SimplexSet{d, 1.0}, approach::L1Ball{d, 1.0},
        approach::LqBall{d, 1.5, 1.0}, approach::CappedSimplex{d, 1.5}};
    for (const auto& set : sets) {
      const Vector p = approach::ProjectOnto(set, v);
      CHECK(approach::Contains(set, p, 1e-8));
      for (int j = 0; j < 50; ++j) {
        Vector w = approach::ProjectOnto(set, 3.0 * rng.GaussianVector(d));
        CHECK((v - p).dot(w - p) <= 1e-6);
      }
    }
  }
}

TEST_CASE("dykstra examples") {
  const Vector a = approach::DykstraProject(
      {approach::OrthantSet{V({1, 1})}, approach::LqBall{2, 2.0, 1.0}},
      V({1.5, -0.5}));
  CHECK((a - V({1, 0})).norm() <= 1e-8);
  const Vector inside = V({0.3, 0.2});
  CHECK((approach::DykstraProject({approach::OrthantSet{V({1, 1})},
                                   approach::LqBall{2, 2.0, 1.0}},
                                  inside) -
         inside)
            .norm() <= 1e-12);
  const Vector z = approach::DykstraProject(
      {approach::Halfspace{V({1}), 0.0}, approach::Halfspace{V({-1}), 0.0}},
      V({3}));
  CHECK(std::abs(z[0]) <= 1e-10);
}

TEST_CASE("projected gradient ascent examples") {
  const approach::Objective dist = [](const Vector& x, Vector* g) {
    const Vector c = V({2, 0});
    if (g != nullptr) *g = -2.0 * (x - c);
    return -(x - c).squaredNorm();
  };
  const Vector x = approach::PgaMaximize(dist, approach::LqBall{2, 2.0, 1.0},
                                         Vector::Zero(2));
  CHECK((x - V({1, 0})).norm() <= 1e-6);
  const approach::Objective lin = [](const Vector& x, Vector* g) {
    if (g != nullptr) *g = V({0, 1, 0});
    return x[1];
  };
  const Vector e = approach::PgaMaximize(lin, approach::SimplexSet{3, 1.0},
                                         Vector::Constant(3, 1.0 / 3));
  CHECK((e - V({0, 1, 0})).norm() <= 1e-6);
}

TEST_CASE("stationary distribution examples") {
  const Matrix swap = M(2, 2, {0, 1, 1, 0});
  CHECK((approach::StationaryDistribution(swap) - V({0.5, 0.5})).norm() <=
        1e-10);
  const Vector id = approach::StationaryDistribution(Matrix::Identity(3, 3));
  CHECK((id - Vector::Constant(3, 1.0 / 3)).norm() <= 1e-10);
  const Matrix ds = M(3, 3, {0.2, 0.5, 0.3, 0.5, 0.1, 0.4, 0.3, 0.4, 0.3});
  CHECK((approach::StationaryDistribution(ds) - Vector::Constant(3, 1.0 / 3))
            .norm() <= 1e-10);
}

TEST_CASE("stationary distribution residual on random chains") {
  Rng rng(37);
  for (int k = 0; k < 50; ++k) {
    const int d = 2 + static_cast<int>(rng.Below(6));
    Matrix P(d, d);
    for (int i = 0; i < d; ++i) P.row(i) = rng.Dirichlet(d, 0.3).transpose();
    const Vector a = approach::StationaryDistribution(P);
    CHECK((P.transpose() * a - a).cwiseAbs().maxCoeff() <= 1e-8);
    CHECK(a.sum() == doctest::Approx(1.0));
  }
}

TEST_CASE("min weighted lp norm examples") {
  auto r = approach::MinWeightedLpNorm(V({1, 1}), kInf);
  CHECK(r.phi == doctest::Approx(0.5));
  CHECK((r.a - V({0.5, 0.5})).norm() <= 1e-12);
  r = approach::MinWeightedLpNorm(V({1, 2}), 2.0);
  CHECK(r.phi == doctest::Approx(1.0 / std::sqrt(1.25)));
  CHECK((r.a - V({0.8, 0.2})).norm() <= 1e-12);
  r = approach::MinWeightedLpNorm(V({0, 5}), 3.0);
  CHECK(r.phi == 0.0);
  CHECK((r.a - V({1, 0})).norm() == 0.0);
  CHECK_THROWS_AS(approach::MinWeightedLpNorm(V({-1, 1}), 2.0),
                  approach::InputError);
}

TEST_CASE("min weighted lp norm matches a grid") {
  Rng rng(39);
  const double exps[] = {1.5, 2.0, 3.0, kInf};
  for (int k = 0; k < 200; ++k) {
    const double p = exps[rng.Below(4)];
    const Vector y = rng.UniformVector(2, 0.05, 1.0);
    double grid = kInf;
    for (int i = 0; i <= 1000; ++i) {
      const double s = i * 1e-3;
      grid = std::min(grid,
                      approach::LpNorm(V({s * y[0], (1 - s) * y[1]}), p));
    }
    CHECK(std::abs(approach::MinWeightedLpNorm(y, p).phi - grid) <= 1e-3);
  }
}

TEST_CASE("caratheodory examples") {
  auto parts = approach::CaratheodoryDecompose(V({1, 0.5, 0.5}), 2);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].subset == std::vector<int>{0, 1});
  CHECK(parts[0].weight == doctest::Approx(0.5));
  CHECK(parts[1].subset == std::vector<int>{0, 2});
  CHECK(parts[1].weight == doctest::Approx(0.5));

  parts = approach::CaratheodoryDecompose(V({1, 1, 0}), 2);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].subset == std::vector<int>{0, 1});
  CHECK(parts[0].weight == 1.0);

  parts = approach::CaratheodoryDecompose(V({0.3, 0.7}), 1);
  REQUIRE(parts.size() == 2);
  double w0 = 0, w1 = 0;
  for (const auto& p : parts) (p.subset[0] == 0 ? w0 : w1) += p.weight;
  CHECK(w0 == doctest::Approx(0.3));
  CHECK(w1 == doctest::Approx(0.7));
}

TEST_CASE("caratheodory reconstructs random points") {
  Rng rng(41);
  for (int k = 0; k < 100; ++k) {
    const int d = 2 + static_cast<int>(rng.Below(8));
    const int m = 1 + static_cast<int>(rng.Below(d - 1));
    const Vector x = approach::ProjectCappedSimplex(rng.UniformVector(d, 0, 1), m);
    const auto parts = approach::CaratheodoryDecompose(x, m);
    CHECK(static_cast<int>(parts.size()) <= d);
    Vector rebuilt = Vector::Zero(d);
    double total = 0;
    for (const auto& p : parts) {
      CHECK(static_cast<int>(p.subset.size()) == m);
      for (int i : p.subset) rebuilt[i] += p.weight;
      total += p.weight;
    }
    CHECK((rebuilt - x).cwiseAbs().maxCoeff() <= 1e-8);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(approach::CaratheodoryDecompose(V({1, 1, 1}), 2),
                  approach::InputError);
}
