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

#ifndef APPROACH_GEOMETRY_HPP_
#define APPROACH_GEOMETRY_HPP_

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "approach/common.hpp"
#include "approach/random.hpp"
#include "approach/solvers.hpp"

namespace approach {

// {y : signs_i y_i >= 0}, signs in {-1, +1}.
struct Orthant {
  Vector signs;
};

// Cone generated by the columns of `rays`. Zero columns describe {0}.
struct FinitelyGenerated {
  Matrix rays;
};

// {y : normals y <= 0}, one normal per row.
struct HalfspaceIntersection {
  Matrix normals;
};

// Target cone of the global-cost problem on R^{2d}:
//   {(y, y') >= 0 : ||y||_p <= min_{a in simplex} ||a (.) y'||_p}.
struct GlobalCostCone {
  int d = 2;
  double p = kInf;
};

struct ConeSpec {
  using Rep = std::variant<Orthant, FinitelyGenerated, HalfspaceIntersection,
                           GlobalCostCone>;
  Rep rep;

  ConeSpec() = default;
  template <typename T>
  ConeSpec(T value) : rep(std::move(value)) {}  // NOLINT

  int dim() const;
  std::string ToString() const;

  static ConeSpec NegativeOrthant(int n);
  static ConeSpec PositiveOrthant(int n);
};

// Norms used in the analysis.
//   Lp(p):                 ||v||_p.
//   GlobalCostPrimal(d,p): ||y||_p + ||y'||_inf on R^{2d}.
//   GlobalCostDual(d,q):   max{||z||_q, ||z'||_1} on R^{2d}.
struct NormTag {
  enum class Kind { kLp, kGlobalCostPrimal, kGlobalCostDual };
  Kind kind = Kind::kLp;
  double p = 2.0;
  int d = 0;

  static NormTag Lp(double p);
  static NormTag GlobalCostPrimal(int d, double p);
  static NormTag GlobalCostDual(int d, double q);

  double Eval(const Vector& v) const;
  NormTag Dual() const;
  // True when the unit ball is a polytope.
  bool IsPolyhedral() const;
  std::string ToString() const;
};

bool operator==(const NormTag& a, const NormTag& b);

struct SimplexGen {
  int d = 1;
};

// {x in [0,1]^d : sum x = m}.
struct CappedSimplexGen {
  int d = 1;
  int m = 1;
};

// Convex hull of the columns of `vertices`.
struct PolytopeGen {
  Matrix vertices;
};

// Unit ball of `norm` intersected with `cone`. For the global-cost outer
// approximation the cone is the half-space intersection of the cuts.
struct BallCapCone {
  NormTag norm;
  ConeSpec cone;
};

struct GeneratorSet {
  using Rep = std::variant<SimplexGen, CappedSimplexGen, PolytopeGen,
                           BallCapCone>;
  Rep rep;
  std::optional<double> delta;
  double radius = 1.0;

  int dim() const;
  std::string ToString() const;
};

GeneratorSet MakeSimplex(int d);
GeneratorSet MakeCappedSimplex(int d, int m);
GeneratorSet MakePolytope(const Matrix& vertices);
// B cap C for the unit ball B of `norm`; radius 1 (0 for the zero cone),
// delta left unset.
GeneratorSet CapGenerator(const ConeSpec& cone, const NormTag& norm);

ConeSpec Polar(const ConeSpec& cone);
bool InCone(const ConeSpec& cone, const Vector& y, double tol = 1e-9);
bool InPolar(const ConeSpec& cone, const Vector& y, double tol = 1e-9);
// Euclidean projection onto the cone.
Vector ProjectCone(const ConeSpec& cone, const Vector& y);
// Returns (proj_C y, proj_{C polar} y).
std::pair<Vector, Vector> MoreauDecompose(const Vector& y,
                                          const ConeSpec& cone);
// Distance-like violation used by feasibility searches: Euclidean distance
// for polyhedral cones; positive-part norm excess for the global-cost cone.
double MembershipResidual(const ConeSpec& cone, const Vector& y);

struct SupportValue {
  double value = 0.0;  // certified lower bound on sup_{x in X} <y, x>
  double gap = 0.0;    // upper bound minus value
  Vector argmax;       // a feasible point attaining `value`
};

// sup_{x in X} <y, x>. Exact for simplex, capped simplex, polytope, orthant
// caps and l2 caps of polyhedral cones; otherwise an LP over split variables
// with tangent-plane linearization of curved norm blocks, returning a
// feasible lower bound whose gap to the LP upper bound is at most tol.
SupportValue SupportFunctionDetailed(const GeneratorSet& X, const Vector& y,
                                     double tol = 1e-9);
double SupportFunction(const GeneratorSet& X, const Vector& y,
                       double tol = 1e-9);

// inf_{c in C} ||c - y||_* with ||.||_* the dual of `norm`, computed by a
// method independent of SupportFunction: clipping for orthants; for
// polyhedral cones with d <= 3 (half-space cones are first converted to their
// extreme rays), exhaustive vertex enumeration when ||.||_* is l1 or linf and
// zoom grid search over ray coefficients otherwise. Throws CapabilityError
// for other inputs.
double DistanceToCone(const Vector& y, const ConeSpec& cone,
                      const NormTag& norm, double tol = 1e-9);

// Euclidean projection onto X.
Vector ProjectGenerator(const GeneratorSet& X, const Vector& v,
                        double tol = 1e-12);
bool InGenerator(const GeneratorSet& X, const Vector& x, double tol = 1e-8);
// A random point of X (not uniform).
Vector SampleGenerator(const GeneratorSet& X, Rng& rng);

// Unit-ball description of a norm as disjoint l_q blocks. For kLp and
// kGlobalCostDual the ball is the product of the blocks; for
// kGlobalCostPrimal the block norms add up (sum_type is set).
std::vector<BallBlock> NormBlocks(const NormTag& norm, int n, bool* sum_type);

}  // namespace approach

#endif  // APPROACH_GEOMETRY_HPP_
