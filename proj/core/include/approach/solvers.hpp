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

#ifndef APPROACH_SOLVERS_HPP_
#define APPROACH_SOLVERS_HPP_

#include <functional>
#include <variant>
#include <vector>

#include "approach/common.hpp"
#include "approach/qp.hpp"

namespace approach {

struct FeasibleSet;

// {x >= 0 : sum x = total}.
struct SimplexSet {
  int d = 1;
  double total = 1.0;
};

// {x : ||x||_1 <= radius}.
struct L1Ball {
  int d = 1;
  double radius = 1.0;
};

// {x : ||x_[begin, begin+count)||_q <= radius}; other coordinates are free.
// count < 0 means the whole vector.
struct LqBall {
  int d = 1;
  double q = 2.0;
  double radius = 1.0;
  int begin = 0;
  int count = -1;
};

// {x in [0,1]^d : sum x = m}.
struct CappedSimplex {
  int d = 1;
  double m = 1.0;
};

// {x : normal . x <= offset}.
struct Halfspace {
  Vector normal;
  double offset = 0.0;
};

// {x : signs_i x_i >= 0}; a zero sign leaves the coordinate free.
struct OrthantSet {
  Vector signs;
};

// Cone generated by the columns of `rays`.
struct ConicHull {
  Matrix rays;
};

// {x : normals x <= 0}, one normal per row.
struct PolyhedralCone {
  Matrix normals;
};

// Norm-ball block used by BallsAndHalfspaces: ||x_block||_q <= radius.
struct BallBlock {
  double q = 2.0;
  int begin = 0;
  int count = 0;
  double radius = 1.0;
};

// Product of norm-ball blocks intersected with {x : A x <= b}.
struct BallsAndHalfspaces {
  int d = 1;
  std::vector<BallBlock> blocks;
  Matrix A;
  Vector b;
};

struct Intersection {
  std::vector<FeasibleSet> sets;
};

struct FeasibleSet {
  using Kind = std::variant<SimplexSet, L1Ball, LqBall, CappedSimplex,
                            Halfspace, OrthantSet, ConicHull, PolyhedralCone,
                            BallsAndHalfspaces, Intersection>;
  Kind kind;

  FeasibleSet() = default;
  template <typename T>
  FeasibleSet(T value) : kind(std::move(value)) {}  // NOLINT
};

// Euclidean projections with exact kernels: sort-and-threshold for the
// simplex and l1 ball, bisection with exact refinement for the capped simplex,
// nested bisection for general l_q balls, Lawson-Hanson NNLS for conic hulls,
// Goldfarb-Idnani for polyhedral sets and Dykstra for intersections.
Vector ProjectSimplex(const Vector& v, double total = 1.0);
Vector ProjectL1Ball(const Vector& v, double radius = 1.0);
Vector ProjectLqBall(const Vector& v, double q, double radius = 1.0);
Vector ProjectCappedSimplex(const Vector& v, double m);
Vector ProjectOnto(const FeasibleSet& set, const Vector& v, double tol = 1e-12);

// Exact metric projection onto balls-and-halfspaces sets. Handles any
// number of l1 / l-infinity blocks through facet oracles and a single l2
// block through bisection on its multiplier; other blocks fall back to
// Dykstra (identity metric only). Multipliers refer to the rows of A.
QpProjection ProjectBallsAndHalfspaces(const BallsAndHalfspaces& set,
                                       const Vector& v,
                                       const Vector& metric = Vector(),
                                       double tol = 1e-12);

bool Contains(const FeasibleSet& set, const Vector& x, double tol = 1e-8);
int AmbientDim(const FeasibleSet& set);

struct DykstraResult {
  Vector x;
  // Final correction term of every member set; for a cone the correction
  // lies in its normal cone at x.
  std::vector<Vector> increments;
  int iterations = 0;
  double displacement = 0.0;
};

// Dykstra alternating projections onto the intersection of `sets`. Stops
// when the cycle displacement falls below tol; throws SolverError carrying
// the last iterate and displacement after max_iter cycles.
DykstraResult DykstraProjectDetailed(const std::vector<FeasibleSet>& sets,
                                     const Vector& v, double tol,
                                     int max_iter);
Vector DykstraProject(const std::vector<FeasibleSet>& sets, const Vector& v,
                      double tol = 1e-10, int max_iter = 100000);

// Concave objective: returns F(x) and writes the gradient into *grad.
using Objective = std::function<double(const Vector& x, Vector* grad)>;
using Projector = std::function<Vector(const Vector& x)>;

struct PgaOptions {
  double tol = 1e-9;
  int max_iter = 20000;
  double initial_step = 1.0;
  int stall_window = 20;
};

struct PgaResult {
  Vector x;
  double value = 0.0;
  double residual = 0.0;  // gradient-mapping norm at the last accepted step
  int iterations = 0;
};

// Projected gradient ascent with Barzilai-Borwein trial steps and Armijo
// backtracking along the projection arc. Stops when the gradient mapping
// ||x - P(x + s g)|| / s is at most tol, or when the objective improves by
// less than tol / 10 over `stall_window` iterations. Throws SolverError
// carrying the iterate and residual when the budget is exhausted.
PgaResult PgaMaximize(const Objective& objective, const Projector& project,
                      const Vector& x0, const PgaOptions& options = {});
Vector PgaMaximize(const Objective& objective, const FeasibleSet& set,
                   const Vector& x0, double tol = 1e-9);

// Invariant distribution a^T P = a^T of a row-stochastic matrix. The damped
// chain (1 - eps) P + eps / d * ones is solved by GTH state reduction; the
// result is checked against the undamped P at 1e-8.
Vector StationaryDistribution(const Matrix& P, double damping = 1e-12);

struct WeightedNormMin {
  double phi = 0.0;
  Vector a;
};

// min over a in the simplex of ||a (.) y||_p for y >= 0, closed form
// a_i ~ y_i^{-q}, phi = (sum y_i^{-q})^{-1/q}, q the conjugate exponent.
WeightedNormMin MinWeightedLpNorm(const Vector& y, double p);

struct SubsetWeight {
  std::vector<int> subset;  // sorted, 0-based
  double weight = 0.0;
};

// Greedy Caratheodory decomposition of a point of the capped simplex
// {x in [0,1]^d, sum x = m} into indicator vectors of m-subsets.
std::vector<SubsetWeight> CaratheodoryDecompose(const Vector& x, int m);

// Lawson-Hanson non-negative least squares: argmin ||R l - y||, l >= 0.
Vector Nnls(const Matrix& R, const Vector& y, double tol = 1e-12);

struct NuOracleResult {
  double nu = 0.0;
  Vector a;
};

// min over a in the simplex of sum_i max(0, z_i a_i + zp_i), solved as an
// LP in (a, t).
NuOracleResult NuOracle(const Vector& z, const Vector& zp);

// Root of a nonincreasing or nondecreasing scalar function on [lo, hi] by
// bisection (absolute tolerance tol, at most max_iter halvings).
double Bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol = 1e-12, int max_iter = 200);

}  // namespace approach

#endif  // APPROACH_SOLVERS_HPP_
