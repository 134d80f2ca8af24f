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

#include "approach/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <Eigen/LU>
#include <functional>
#include <sstream>

#include "approach/lp.hpp"

namespace approach {
namespace {

std::string FormatExponent(double p) {
  if (IsInfinite(p)) return "inf";
  std::ostringstream os;
  os << p;
  return os.str();
}

bool IsZeroCone(const ConeSpec& cone) {
  if (const auto* fg = std::get_if<FinitelyGenerated>(&cone.rep)) {
    return fg->rays.cols() == 0 || fg->rays.cwiseAbs().maxCoeff() == 0.0;
  }
  return false;
}

// Half-space rows describing an orthant or half-space intersection cone.
Matrix PolyhedralRows(const ConeSpec& cone) {
  if (const auto* o = std::get_if<Orthant>(&cone.rep)) {
    const int n = static_cast<int>(o->signs.size());
    Matrix rows = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) rows(i, i) = -o->signs[i];
    return rows;
  }
  if (const auto* h = std::get_if<HalfspaceIntersection>(&cone.rep)) {
    return h->normals;
  }
  throw CapabilityError("cone has no half-space description");
}

std::vector<FeasibleSet> BallSets(const NormTag& norm, int n) {
  bool sum_type = false;
  const std::vector<BallBlock> blocks = NormBlocks(norm, n, &sum_type);
  if (sum_type) {
    throw CapabilityError("projection onto a " + norm.ToString() +
                          " ball is not supported");
  }
  std::vector<FeasibleSet> sets;
  for (const BallBlock& b : blocks) {
    sets.push_back(LqBall{n, b.q, b.radius, b.begin, b.count});
  }
  return sets;
}

// Solves a tall LP through its dual, whose tableau has one row per column of
// the original problem.
LpResult LpSolveCompact(const LpProblem& problem) {
  if (problem.A.rows() <= problem.A.cols()) return LpSolve(problem);
  LpProblem dual;
  dual.c = problem.b;
  dual.A = -problem.A.transpose();
  dual.b = problem.c;
  LpResult d;
  try {
    d = LpSolve(dual);
  } catch (const LpError& e) {
    if (e.status() == LpError::Status::kUnbounded) {
      throw LpError(LpError::Status::kInfeasible, "LpSolve: infeasible");
    }
    if (e.status() == LpError::Status::kInfeasible) {
      throw LpError(LpError::Status::kUnbounded, "LpSolve: unbounded");
    }
    throw;
  }
  LpResult out;
  out.solution = d.duals;
  out.value = problem.c.dot(out.solution);
  out.duals = d.solution;
  out.iterations = d.iterations;
  return out;
}

// Tangent-plane LP for sup <y, x> over {||x||_B <= 1} cap K, K polyhedral.
SupportValue SupportByLp(const NormTag& norm, const ConeSpec& cone,
                         const Vector& y, double tol) {
  const int n = static_cast<int>(y.size());
  bool sum_type = false;
  const std::vector<BallBlock> blocks = NormBlocks(norm, n, &sum_type);
  const int nb = static_cast<int>(blocks.size());
  const FinitelyGenerated* fg = std::get_if<FinitelyGenerated>(&cone.rep);
  const int k = fg ? static_cast<int>(fg->rays.cols()) : 0;
  const int nvar = 2 * n + nb + k;
  const int tcol = 2 * n;
  const int lcol = 2 * n + nb;

  std::vector<Vector> rows;
  std::vector<double> rhs;
  auto add_row = [&](Vector r, double b) {
    rows.push_back(std::move(r));
    rhs.push_back(b);
  };
  if (fg) {
    for (int i = 0; i < n; ++i) {
      Vector r = Vector::Zero(nvar);
      r[i] = 1.0;
      r[n + i] = -1.0;
      for (int j = 0; j < k; ++j) r[lcol + j] = -fg->rays(i, j);
      add_row(r, 0.0);
      add_row(-r, 0.0);
    }
  } else {
    const Matrix N = PolyhedralRows(cone);
    for (int j = 0; j < N.rows(); ++j) {
      Vector r = Vector::Zero(nvar);
      r.head(n) = N.row(j).transpose();
      r.segment(n, n) = -N.row(j).transpose();
      add_row(r, 0.0);
    }
  }
  for (int b = 0; b < nb; ++b) {
    const BallBlock& blk = blocks[b];
    if (blk.q == 1.0) {
      Vector r = Vector::Zero(nvar);
      for (int i = blk.begin; i < blk.begin + blk.count; ++i) {
        r[i] = 1.0;
        r[n + i] = 1.0;
      }
      r[tcol + b] = -1.0;
      add_row(r, 0.0);
    } else {
      for (int i = blk.begin; i < blk.begin + blk.count; ++i) {
        Vector r = Vector::Zero(nvar);
        r[i] = 1.0;
        r[n + i] = 1.0;
        r[tcol + b] = -1.0;
        add_row(r, 0.0);
      }
    }
  }
  if (sum_type) {
    Vector r = Vector::Zero(nvar);
    r.segment(tcol, nb).setOnes();
    add_row(r, 1.0);
  } else {
    for (int b = 0; b < nb; ++b) {
      Vector r = Vector::Zero(nvar);
      r[tcol + b] = 1.0;
      add_row(r, 1.0);
    }
  }

  LpProblem lp;
  lp.c = Vector::Zero(nvar);
  lp.c.head(n) = -y;
  lp.c.segment(n, n) = y;

  SupportValue best;
  best.value = 0.0;
  best.gap = kInf;
  best.argmax = Vector::Zero(n);
  auto consider = [&](const Vector& sol) {
    Vector x = sol.head(n) - sol.segment(n, n);
    if (fg) x = fg->rays * sol.segment(lcol, k);
    const double gauge = norm.Eval(x);
    double val = y.dot(x);
    if (gauge > 1.0) {
      val /= gauge;
      x /= gauge;
    }
    if (val > best.value) {
      best.value = val;
      best.argmax = x;
    }
  };
  bool curved = false;
  Vector face_objective = Vector::Zero(nvar);
  for (int b = 0; b < nb; ++b) {
    if (blocks[b].q != 1.0 && !IsInfinite(blocks[b].q)) {
      curved = true;
      face_objective[tcol + b] = 1.0;
    }
  }
  auto load = [&](LpProblem* problem, int extra) {
    const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
    problem->A.resize(m + extra, nvar);
    problem->b.resize(m + extra);
    for (Eigen::Index i = 0; i < m; ++i) {
      problem->A.row(i) = rows[static_cast<size_t>(i)].transpose();
      problem->b[i] = rhs[static_cast<size_t>(i)];
    }
  };
  for (int round = 0; round < 2000; ++round) {
    load(&lp, 0);
    const LpResult res = LpSolveCompact(lp);
    const double upper = -res.value;
    consider(res.solution);
    best.gap = std::max(0.0, upper - best.value);
    if (best.gap <= tol || !curved) return best;
    // Near-optimal LP point with the smallest curved block radii.
    Vector sol = res.solution;
    LpProblem face;
    face.c = face_objective;
    load(&face, 1);
    face.A.row(face.A.rows() - 1) = lp.c.transpose();
    face.b[face.b.size() - 1] = -(upper - 0.5 * tol);
    try {
      sol = LpSolveCompact(face).solution;
      consider(sol);
    } catch (const LpError&) {
    }
    best.gap = std::max(0.0, upper - best.value);
    if (best.gap <= tol) return best;
    // Tangent planes at violated curved blocks.
    const Vector xs = sol.head(n) - sol.segment(n, n);
    bool added = false;
    for (int b = 0; b < nb; ++b) {
      const BallBlock& blk = blocks[b];
      if (blk.q == 1.0 || IsInfinite(blk.q)) continue;
      const Vector xb = xs.segment(blk.begin, blk.count);
      const double nrm = LpNorm(xb, blk.q);
      if (nrm <= sol[tcol + b] * (1.0 + 1e-13) || nrm == 0.0) {
        continue;
      }
      Vector r = Vector::Zero(nvar);
      for (int i = 0; i < blk.count; ++i) {
        const double g =
            (xb[i] >= 0.0 ? 1.0 : -1.0) *
            std::pow(std::abs(xb[i]) / nrm, blk.q - 1.0);
        r[blk.begin + i] = g;
        r[n + blk.begin + i] = -g;
      }
      r[tcol + b] = -1.0;
      add_row(r, 0.0);
      added = true;
    }
    if (!added) return best;
  }
  throw SolverError("SupportFunction: tangent-plane budget exhausted",
                    best.argmax, best.value, best.gap);
}

std::vector<Vector> ExtremeRaysOfHalfspaces(const Matrix& N) {
  const int n = static_cast<int>(N.cols());
  std::vector<Vector> cands;
  auto push = [&](Vector r) {
    const double nrm = r.norm();
    if (nrm < 1e-12) return;
    cands.push_back(r / nrm);
  };
  if (n == 1) {
    push(Vector::Constant(1, 1.0));
    push(Vector::Constant(1, -1.0));
  } else if (n == 2) {
    if (N.rows() == 0) {
      push(Vector::Unit(2, 0));
      push(-Vector::Unit(2, 0));
      push(Vector::Unit(2, 1));
      push(-Vector::Unit(2, 1));
    }
    for (int j = 0; j < N.rows(); ++j) {
      Vector perp(2);
      perp << -N(j, 1), N(j, 0);
      push(perp);
      push(-perp);
      push(-N.row(j).transpose());
    }
  } else if (n == 3) {
    if (N.rows() < 2) {
      throw CapabilityError(
          "DistanceToCone: half-space cone with a lineality plane");
    }
    for (int i = 0; i < N.rows(); ++i) {
      for (int j = i + 1; j < N.rows(); ++j) {
        const Eigen::Vector3d a = N.row(i).transpose();
        const Eigen::Vector3d b = N.row(j).transpose();
        const Eigen::Vector3d c = a.cross(b);
        push(Vector(c));
        push(Vector(-c));
      }
    }
  } else {
    throw CapabilityError("DistanceToCone: dimension above 3");
  }
  const double scale = std::max(1.0, N.size() ? N.cwiseAbs().maxCoeff() : 1.0);
  std::vector<Vector> rays;
  for (const Vector& c : cands) {
    if (N.rows() > 0 && (N * c).maxCoeff() > 1e-10 * scale) continue;
    bool dup = false;
    for (const Vector& r : rays) {
      if (r.dot(c) > 1.0 - 1e-12) dup = true;
    }
    if (!dup) rays.push_back(c);
  }
  return rays;
}

// Zoom grid minimization of f over the nonnegative orthant of R^k.
double ZoomGridMin(const std::function<double(const Vector&)>& f, int k,
                   double L0) {
  static const int kPoints[] = {0, 401, 61, 21, 11};
  const int N = kPoints[k];
  Vector best = Vector::Zero(k);
  double best_val = f(best);
  auto scan = [&](const Vector& lo, const Vector& h) {
    Vector idx = Vector::Zero(k);
    Vector point(k);
    Vector arg = best;
    double val = best_val;
    while (true) {
      for (int j = 0; j < k; ++j) point[j] = lo[j] + idx[j] * h[j];
      const double fv = f(point);
      if (fv < val) {
        val = fv;
        arg = point;
      }
      int j = 0;
      while (j < k) {
        idx[j] += 1.0;
        if (idx[j] < N) break;
        idx[j] = 0.0;
        ++j;
      }
      if (j == k) break;
    }
    best = arg;
    best_val = val;
  };
  double L = L0;
  Vector h(k);
  for (int doubling = 0; doubling < 80; ++doubling) {
    h.setConstant(L / (N - 1));
    scan(Vector::Zero(k), h);
    bool on_boundary = false;
    for (int j = 0; j < k; ++j) {
      if (best[j] >= L - 0.5 * h[j]) on_boundary = true;
    }
    if (!on_boundary) break;
    L *= 2.0;
  }
  for (int level = 0; level < 400; ++level) {
    Vector lo(k);
    Vector hn(k);
    for (int j = 0; j < k; ++j) {
      lo[j] = std::max(0.0, best[j] - 2.0 * h[j]);
      const double hi = best[j] + 2.0 * h[j];
      hn[j] = (hi - lo[j]) / (N - 1);
    }
    h = hn;
    scan(lo, h);
    if (h.maxCoeff() < 1e-11 * (1.0 + L)) break;
  }
  return best_val;
}

}  // namespace

// ---------------------------------------------------------------------------
// ConeSpec / NormTag

int ConeSpec::dim() const {
  return std::visit(
      [](const auto& c) -> int {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Orthant>) {
          return static_cast<int>(c.signs.size());
        } else if constexpr (std::is_same_v<T, FinitelyGenerated>) {
          return static_cast<int>(c.rays.rows());
        } else if constexpr (std::is_same_v<T, HalfspaceIntersection>) {
          return static_cast<int>(c.normals.cols());
        } else {
          return 2 * c.d;
        }
      },
      rep);
}

std::string ConeSpec::ToString() const {
  std::ostringstream os;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Orthant>) {
          os << "orthant(dim=" << c.signs.size() << ")";
        } else if constexpr (std::is_same_v<T, FinitelyGenerated>) {
          os << "finitely_generated(dim=" << c.rays.rows()
             << ", rays=" << c.rays.cols() << ")";
        } else if constexpr (std::is_same_v<T, HalfspaceIntersection>) {
          os << "halfspaces(dim=" << c.normals.cols()
             << ", normals=" << c.normals.rows() << ")";
        } else {
          os << "global_cost(d=" << c.d << ", p=" << FormatExponent(c.p)
             << ")";
        }
      },
      rep);
  return os.str();
}

ConeSpec ConeSpec::NegativeOrthant(int n) {
  return Orthant{Vector::Constant(n, -1.0)};
}

ConeSpec ConeSpec::PositiveOrthant(int n) {
  return Orthant{Vector::Constant(n, 1.0)};
}

NormTag NormTag::Lp(double p) {
  if (!(p >= 1.0)) throw InputError("NormTag::Lp: p must be >= 1");
  NormTag t;
  t.kind = Kind::kLp;
  t.p = p;
  return t;
}

NormTag NormTag::GlobalCostPrimal(int d, double p) {
  if (d < 1 || !(p >= 1.0)) {
    throw InputError("NormTag::GlobalCostPrimal: need d >= 1 and p >= 1");
  }
  NormTag t;
  t.kind = Kind::kGlobalCostPrimal;
  t.p = p;
  t.d = d;
  return t;
}

NormTag NormTag::GlobalCostDual(int d, double q) {
  if (d < 1 || !(q >= 1.0)) {
    throw InputError("NormTag::GlobalCostDual: need d >= 1 and q >= 1");
  }
  NormTag t;
  t.kind = Kind::kGlobalCostDual;
  t.p = q;
  t.d = d;
  return t;
}

double NormTag::Eval(const Vector& v) const {
  switch (kind) {
    case Kind::kLp:
      return LpNorm(v, p);
    case Kind::kGlobalCostPrimal:
      RequireDim(v, 2 * d, "NormTag::Eval");
      return LpNorm(v.head(d), p) + v.tail(d).cwiseAbs().maxCoeff();
    case Kind::kGlobalCostDual:
      RequireDim(v, 2 * d, "NormTag::Eval");
      return std::max(LpNorm(v.head(d), p), v.tail(d).cwiseAbs().sum());
  }
  return 0.0;
}

NormTag NormTag::Dual() const {
  switch (kind) {
    case Kind::kLp:
      return Lp(DualExponent(p));
    case Kind::kGlobalCostPrimal:
      return GlobalCostDual(d, DualExponent(p));
    case Kind::kGlobalCostDual:
      return GlobalCostPrimal(d, DualExponent(p));
  }
  return *this;
}

bool NormTag::IsPolyhedral() const { return p == 1.0 || IsInfinite(p); }

std::string NormTag::ToString() const {
  switch (kind) {
    case Kind::kLp:
      return "l" + FormatExponent(p);
    case Kind::kGlobalCostPrimal:
      return "global_cost_primal(d=" + std::to_string(d) +
             ", p=" + FormatExponent(p) + ")";
    case Kind::kGlobalCostDual:
      return "global_cost_dual(d=" + std::to_string(d) +
             ", q=" + FormatExponent(p) + ")";
  }
  return "";
}

bool operator==(const NormTag& a, const NormTag& b) {
  return a.kind == b.kind && a.p == b.p && a.d == b.d;
}

std::vector<BallBlock> NormBlocks(const NormTag& norm, int n, bool* sum_type) {
  *sum_type = false;
  switch (norm.kind) {
    case NormTag::Kind::kLp:
      return {BallBlock{norm.p, 0, n, 1.0}};
    case NormTag::Kind::kGlobalCostDual:
      if (n != 2 * norm.d) throw InputError("NormBlocks: dimension mismatch");
      return {BallBlock{norm.p, 0, norm.d, 1.0},
              BallBlock{1.0, norm.d, norm.d, 1.0}};
    case NormTag::Kind::kGlobalCostPrimal:
      if (n != 2 * norm.d) throw InputError("NormBlocks: dimension mismatch");
      *sum_type = true;
      return {BallBlock{norm.p, 0, norm.d, 1.0},
              BallBlock{kInf, norm.d, norm.d, 1.0}};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Generators

int GeneratorSet::dim() const {
  return std::visit(
      [](const auto& g) -> int {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SimplexGen> ||
                      std::is_same_v<T, CappedSimplexGen>) {
          return g.d;
        } else if constexpr (std::is_same_v<T, PolytopeGen>) {
          return static_cast<int>(g.vertices.rows());
        } else {
          return g.cone.dim();
        }
      },
      rep);
}

std::string GeneratorSet::ToString() const {
  return std::visit(
      [](const auto& g) -> std::string {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SimplexGen>) {
          return "simplex(d=" + std::to_string(g.d) + ")";
        } else if constexpr (std::is_same_v<T, CappedSimplexGen>) {
          return "capped_simplex(d=" + std::to_string(g.d) +
                 ", m=" + std::to_string(g.m) + ")";
        } else if constexpr (std::is_same_v<T, PolytopeGen>) {
          return "polytope(vertices=" + std::to_string(g.vertices.cols()) +
                 ")";
        } else {
          return "ball_cap_cone(" + g.norm.ToString() + ", " +
                 g.cone.ToString() + ")";
        }
      },
      rep);
}

GeneratorSet MakeSimplex(int d) {
  if (d < 1) throw InputError("MakeSimplex: d must be positive");
  GeneratorSet g;
  g.rep = SimplexGen{d};
  g.radius = 1.0;
  return g;
}

GeneratorSet MakeCappedSimplex(int d, int m) {
  if (d < 1 || m < 1 || m > d) {
    throw InputError("MakeCappedSimplex: need 1 <= m <= d");
  }
  GeneratorSet g;
  g.rep = CappedSimplexGen{d, m};
  g.radius = m;
  return g;
}

GeneratorSet MakePolytope(const Matrix& vertices) {
  if (vertices.cols() == 0) throw InputError("MakePolytope: no vertices");
  GeneratorSet g;
  g.rep = PolytopeGen{vertices};
  g.radius = vertices.colwise().lpNorm<1>().maxCoeff();
  return g;
}

GeneratorSet CapGenerator(const ConeSpec& cone, const NormTag& norm) {
  GeneratorSet g;
  g.rep = BallCapCone{norm, cone};
  g.radius = IsZeroCone(cone) ? 0.0 : 1.0;
  return g;
}

// ---------------------------------------------------------------------------
// Cones

ConeSpec Polar(const ConeSpec& cone) {
  return std::visit(
      [](const auto& c) -> ConeSpec {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Orthant>) {
          return Orthant{-c.signs};
        } else if constexpr (std::is_same_v<T, FinitelyGenerated>) {
          return HalfspaceIntersection{c.rays.transpose()};
        } else if constexpr (std::is_same_v<T, HalfspaceIntersection>) {
          return FinitelyGenerated{c.normals.transpose()};
        } else {
          throw CapabilityError(
              "Polar: the global-cost polar has no finite representation");
        }
      },
      cone.rep);
}

Vector ProjectCone(const ConeSpec& cone, const Vector& y) {
  RequireDim(y, cone.dim(), "ProjectCone");
  return std::visit(
      [&](const auto& c) -> Vector {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Orthant>) {
          return ProjectOnto(OrthantSet{c.signs}, y);
        } else if constexpr (std::is_same_v<T, FinitelyGenerated>) {
          return ProjectOnto(ConicHull{c.rays}, y);
        } else if constexpr (std::is_same_v<T, HalfspaceIntersection>) {
          return ProjectOnto(PolyhedralCone{c.normals}, y);
        } else {
          throw CapabilityError(
              "ProjectCone: no Euclidean projection for the global-cost cone");
        }
      },
      cone.rep);
}

std::pair<Vector, Vector> MoreauDecompose(const Vector& y,
                                          const ConeSpec& cone) {
  if (const auto* o = std::get_if<Orthant>(&cone.rep)) {
    RequireDim(y, o->signs.size(), "MoreauDecompose");
    Vector pc = Vector::Zero(y.size());
    Vector pp = Vector::Zero(y.size());
    for (int i = 0; i < y.size(); ++i) {
      if (o->signs[i] * y[i] >= 0.0) {
        pc[i] = y[i];
      } else {
        pp[i] = y[i];
      }
    }
    return {pc, pp};
  }
  Vector pc = ProjectCone(cone, y);
  return {pc, y - pc};
}

bool InCone(const ConeSpec& cone, const Vector& y, double tol) {
  if (y.size() != cone.dim()) return false;
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Orthant>) {
          return (c.signs.cwiseProduct(y).array() >= -tol).all();
        } else if constexpr (std::is_same_v<T, FinitelyGenerated>) {
          return (ProjectCone(cone, y) - y).norm() <= tol * (1.0 + y.norm());
        } else if constexpr (std::is_same_v<T, HalfspaceIntersection>) {
          return c.normals.rows() == 0 ||
                 (c.normals * y).maxCoeff() <= tol * (1.0 + y.norm());
        } else {
          const Vector a = y.head(c.d);
          const Vector b = y.tail(c.d);
          if (a.minCoeff() < -tol || b.minCoeff() < -tol) return false;
          const double phi = MinWeightedLpNorm(b.cwiseMax(0.0), c.p).phi;
          return LpNorm(a.cwiseMax(0.0), c.p) <= phi + tol;
        }
      },
      cone.rep);
}

bool InPolar(const ConeSpec& cone, const Vector& y, double tol) {
  if (const auto* gc = std::get_if<GlobalCostCone>(&cone.rep)) {
    if (y.size() != 2 * gc->d) return false;
    const Vector z = y.head(gc->d);
    const Vector zp = y.tail(gc->d);
    if (zp.maxCoeff() > tol) return false;
    const double q = DualExponent(gc->p);
    const double r = q / (q + 1.0);
    const Vector u = (-zp).cwiseMax(0.0);
    double acc = 0.0;
    for (int i = 0; i < u.size(); ++i) acc += std::pow(u[i], r);
    const double quasi = acc > 0.0 ? std::pow(acc, 1.0 / r) : 0.0;
    return LpNorm(z.cwiseMax(0.0), q) <= quasi + tol;
  }
  return InCone(Polar(cone), y, tol);
}

double MembershipResidual(const ConeSpec& cone, const Vector& y) {
  if (const auto* gc = std::get_if<GlobalCostCone>(&cone.rep)) {
    RequireDim(y, 2 * gc->d, "MembershipResidual");
    const Vector a = y.head(gc->d);
    const Vector b = y.tail(gc->d);
    const double phi = MinWeightedLpNorm(b.cwiseMax(0.0), gc->p).phi;
    return std::max(0.0, LpNorm(a.cwiseMax(0.0), gc->p) - phi) +
           a.cwiseMin(0.0).norm() + b.cwiseMin(0.0).norm();
  }
  return (ProjectCone(cone, y) - y).norm();
}

// ---------------------------------------------------------------------------
// Support function, distance, projection

SupportValue SupportFunctionDetailed(const GeneratorSet& X, const Vector& y,
                                     double tol) {
  RequireDim(y, X.dim(), "SupportFunction");
  RequireFinite(y, "SupportFunction");
  return std::visit(
      [&](const auto& g) -> SupportValue {
        using T = std::decay_t<decltype(g)>;
        SupportValue out;
        if constexpr (std::is_same_v<T, SimplexGen>) {
          Eigen::Index arg;
          out.value = y.maxCoeff(&arg);
          out.argmax = Vector::Unit(g.d, arg);
        } else if constexpr (std::is_same_v<T, CappedSimplexGen>) {
          std::vector<int> order(g.d);
          for (int i = 0; i < g.d; ++i) order[i] = i;
          std::stable_sort(order.begin(), order.end(),
                           [&](int a, int b) { return y[a] > y[b]; });
          out.argmax = Vector::Zero(g.d);
          for (int k = 0; k < g.m; ++k) {
            out.value += y[order[k]];
            out.argmax[order[k]] = 1.0;
          }
        } else if constexpr (std::is_same_v<T, PolytopeGen>) {
          Eigen::Index arg;
          out.value = (g.vertices.transpose() * y).maxCoeff(&arg);
          out.argmax = g.vertices.col(arg);
        } else {
          const int n = static_cast<int>(y.size());
          out.argmax = Vector::Zero(n);
          if (IsZeroCone(g.cone) || y.isZero(0.0)) return out;
          if (std::holds_alternative<GlobalCostCone>(g.cone.rep)) {
            throw CapabilityError(
                "SupportFunction: cap the half-space outer approximation "
                "instead of the global-cost cone");
          }
          if (const auto* o = std::get_if<Orthant>(&g.cone.rep)) {
            const Vector w = o->signs.cwiseProduct(y).cwiseMax(0.0);
            out.value = g.norm.Dual().Eval(w);
            return out;
          }
          if (g.norm.kind == NormTag::Kind::kLp && g.norm.p == 2.0) {
            const Vector pk = ProjectCone(g.cone, y);
            out.value = pk.norm();
            if (out.value > 0.0) out.argmax = pk / out.value;
            return out;
          }
          return SupportByLp(g.norm, g.cone, y, tol);
        }
        return out;
      },
      X.rep);
}

double SupportFunction(const GeneratorSet& X, const Vector& y, double tol) {
  return SupportFunctionDetailed(X, y, tol).value;
}

// min_{lambda >= 0} ||y - R lambda||_p for p in {1, inf}, written as an LP in
// (lambda, t) and solved by enumerating every vertex of its feasible region.
double VertexEnumerationMin(const Matrix& R, const Vector& y, double p) {
  const int n = static_cast<int>(R.rows());
  const int k = static_cast<int>(R.cols());
  const int slack = IsInfinite(p) ? 1 : n;
  const int nv = k + slack;
  const int m = 2 * n + k;
  Matrix G = Matrix::Zero(m, nv);
  Vector h = Vector::Zero(m);
  Vector c = Vector::Zero(nv);
  c.tail(slack).setOnes();
  for (int i = 0; i < n; ++i) {
    G.row(i).head(k) = R.row(i);
    G.row(n + i).head(k) = -R.row(i);
    G(i, k + (slack == 1 ? 0 : i)) = -1.0;
    G(n + i, k + (slack == 1 ? 0 : i)) = -1.0;
    h[i] = y[i];
    h[n + i] = -y[i];
  }
  for (int j = 0; j < k; ++j) G(2 * n + j, j) = -1.0;
  const double feas = 1e-9 * (1.0 + y.cwiseAbs().maxCoeff());
  double best = kInf;
  std::vector<int> pick(nv);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == nv) {
      Matrix S(nv, nv);
      Vector r(nv);
      for (int i = 0; i < nv; ++i) {
        S.row(i) = G.row(pick[i]);
        r[i] = h[pick[i]];
      }
      const Eigen::FullPivLU<Matrix> lu(S);
      if (!lu.isInvertible()) return;
      const Vector z = lu.solve(r);
      if (((G * z - h).array() <= feas).all()) best = std::min(best, c.dot(z));
      return;
    }
    for (int i = start; i <= m - (nv - depth); ++i) {
      pick[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  if (!std::isfinite(best)) {
    throw SolverError("DistanceToCone: vertex enumeration found no vertex",
                      Vector(), kInf, kInf);
  }
  return std::max(best, 0.0);
}

double DistanceToCone(const Vector& y, const ConeSpec& cone,
                      const NormTag& norm, double tol) {
  (void)tol;
  RequireDim(y, cone.dim(), "DistanceToCone");
  const NormTag dual = norm.Dual();
  if (const auto* o = std::get_if<Orthant>(&cone.rep)) {
    Vector c = y;
    for (int i = 0; i < y.size(); ++i) {
      if (o->signs[i] * y[i] < 0.0) c[i] = 0.0;
    }
    return dual.Eval(y - c);
  }
  if (std::holds_alternative<GlobalCostCone>(cone.rep)) {
    throw CapabilityError("DistanceToCone: global-cost cone not supported");
  }
  const int n = static_cast<int>(y.size());
  if (n > 3) throw CapabilityError("DistanceToCone: dimension above 3");
  std::vector<Vector> rays;
  if (const auto* fg = std::get_if<FinitelyGenerated>(&cone.rep)) {
    for (int j = 0; j < fg->rays.cols(); ++j) {
      const double nrm = fg->rays.col(j).norm();
      if (nrm > 0.0) rays.push_back(fg->rays.col(j) / nrm);
    }
  } else {
    rays = ExtremeRaysOfHalfspaces(
        std::get<HalfspaceIntersection>(cone.rep).normals);
  }
  if (rays.empty()) return dual.Eval(y);
  const int k = static_cast<int>(rays.size());
  if (k > 4) {
    throw CapabilityError("DistanceToCone: more than 4 generating rays");
  }
  Matrix R(n, k);
  for (int j = 0; j < k; ++j) R.col(j) = rays[j];
  if (dual.kind == NormTag::Kind::kLp &&
      (dual.p == 1.0 || IsInfinite(dual.p))) {
    return VertexEnumerationMin(R, y, dual.p);
  }
  auto f = [&](const Vector& lambda) { return dual.Eval(y - R * lambda); };
  const double L0 = 4.0 * std::max(y.norm(), 1e-12);
  return ZoomGridMin(f, k, L0);
}

Vector ProjectGenerator(const GeneratorSet& X, const Vector& v, double tol) {
  RequireDim(v, X.dim(), "ProjectGenerator");
  return std::visit(
      [&](const auto& g) -> Vector {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SimplexGen>) {
          return ProjectSimplex(v);
        } else if constexpr (std::is_same_v<T, CappedSimplexGen>) {
          return ProjectCappedSimplex(v, g.m);
        } else if constexpr (std::is_same_v<T, PolytopeGen>) {
          throw CapabilityError(
              "ProjectGenerator: projection onto a vertex list");
        } else {
          const int n = static_cast<int>(v.size());
          if (IsZeroCone(g.cone)) return Vector::Zero(n);
          if (std::holds_alternative<GlobalCostCone>(g.cone.rep)) {
            throw CapabilityError(
                "ProjectGenerator: global-cost cone needs cutting planes");
          }
          if (g.norm.kind == NormTag::Kind::kLp && g.norm.p == 2.0) {
            Vector w = ProjectCone(g.cone, v);
            const double nrm = w.norm();
            if (nrm > 1.0) w /= nrm;
            return w;
          }
          if (std::holds_alternative<FinitelyGenerated>(g.cone.rep)) {
            std::vector<FeasibleSet> sets = BallSets(g.norm, n);
            sets.push_back(
                ConicHull{std::get<FinitelyGenerated>(g.cone.rep).rays});
            return DykstraProject(sets, v, std::max(tol, 1e-12), 200000);
          }
          bool sum_type = false;
          BallsAndHalfspaces set;
          set.d = n;
          set.blocks = NormBlocks(g.norm, n, &sum_type);
          if (sum_type) {
            throw CapabilityError("ProjectGenerator: sum-type norm ball");
          }
          set.A = PolyhedralRows(g.cone);
          set.b = Vector::Zero(set.A.rows());
          return ProjectBallsAndHalfspaces(set, v, Vector(), tol).x;
        }
      },
      X.rep);
}

bool InGenerator(const GeneratorSet& X, const Vector& x, double tol) {
  if (x.size() != X.dim()) return false;
  return std::visit(
      [&](const auto& g) -> bool {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SimplexGen>) {
          return Contains(SimplexSet{g.d, 1.0}, x, tol);
        } else if constexpr (std::is_same_v<T, CappedSimplexGen>) {
          return Contains(CappedSimplex{g.d, static_cast<double>(g.m)}, x,
                          tol);
        } else if constexpr (std::is_same_v<T, PolytopeGen>) {
          const int k = static_cast<int>(g.vertices.cols());
          const double big = 1e3 * (1.0 + g.vertices.cwiseAbs().maxCoeff());
          Matrix R(g.vertices.rows() + 1, k);
          R.topRows(g.vertices.rows()) = g.vertices;
          R.row(g.vertices.rows()).setConstant(big);
          Vector target(x.size() + 1);
          target.head(x.size()) = x;
          target[x.size()] = big;
          const Vector lambda = Nnls(R, target);
          return (R * lambda - target).norm() <= tol * (1.0 + big);
        } else {
          return g.norm.Eval(x) <= 1.0 + tol && InCone(g.cone, x, tol);
        }
      },
      X.rep);
}

Vector SampleGenerator(const GeneratorSet& X, Rng& rng) {
  return std::visit(
      [&](const auto& g) -> Vector {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SimplexGen>) {
          return rng.Dirichlet(g.d, 1.0);
        } else if constexpr (std::is_same_v<T, CappedSimplexGen>) {
          Vector v = rng.UniformVector(g.d, -0.5, 1.5);
          return ProjectCappedSimplex(v, g.m);
        } else if constexpr (std::is_same_v<T, PolytopeGen>) {
          return g.vertices *
                 rng.Dirichlet(static_cast<int>(g.vertices.cols()), 1.0);
        } else {
          const Vector v = rng.GaussianVector(X.dim()) * 2.0;
          return ProjectGenerator(X, v) * rng.Uniform(0.0, 1.0);
        }
      },
      X.rep);
}

}  // namespace approach
