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

#include "approach/lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace approach {
namespace {

class Tableau {
 public:
  Tableau(int rows, int cols) : t_(rows + 1, cols + 1), basis_(rows, -1) {
    t_.setZero();
  }

  int rows() const { return static_cast<int>(basis_.size()); }
  int cols() const { return static_cast<int>(t_.cols()) - 1; }
  double& at(int r, int c) { return t_(r + 1, c); }
  double& rhs(int r) { return t_(r + 1, cols()); }
  double& cost(int c) { return t_(0, c); }
  double& objective() { return t_(0, cols()); }
  std::vector<int>& basis() { return basis_; }

  void Pivot(int row, int col) {
    const int r = row + 1;
    const double p = t_(r, col);
    t_.row(r) /= p;
    for (int i = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      const double f = t_(i, col);
      if (f != 0.0) t_.row(i) -= f * t_.row(r);
    }
    basis_[row] = col;
  }

  void DeleteRow(int row) {
    const int r = row + 1;
    const int last = static_cast<int>(t_.rows()) - 1;
    if (r != last) {
      t_.row(r) = t_.row(last);
      basis_[row] = basis_.back();
    }
    t_.conservativeResize(last, Eigen::NoChange);
    basis_.pop_back();
  }

  // Runs Bland's rule on the current cost row. Columns with allowed[c] false
  // never enter. Returns false when the problem is unbounded.
  bool Optimize(const std::vector<char>& allowed, const LpOptions& opt,
                int* iterations, int limit) {
    while (true) {
      int enter = -1;
      for (int c = 0; c < cols(); ++c) {
        if (allowed[c] && cost(c) < -opt.pivot_tol * 10.0) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best_ratio = kInf;
      for (int r = 0; r < rows(); ++r) {
        const double a = at(r, enter);
        if (a > opt.pivot_tol) {
          const double ratio = rhs(r) / a;
          if (ratio < best_ratio - 1e-12 ||
              (std::abs(ratio - best_ratio) <= 1e-12 && leave >= 0 &&
               basis_[r] < basis_[leave])) {
            best_ratio = ratio;
            leave = r;
          }
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
      if (++*iterations > limit) {
        throw LpError(LpError::Status::kIterationLimit,
                      "LpSolve: iteration limit exceeded");
      }
    }
  }

 private:
  Matrix t_;
  std::vector<int> basis_;
};

}  // namespace

LpResult LpSolve(const LpProblem& problem, const LpOptions& options) {
  const int n = static_cast<int>(problem.c.size());
  const int m = static_cast<int>(problem.b.size());
  if (problem.A.rows() != m || problem.A.cols() != n) {
    throw InputError("LpSolve: constraint matrix is " +
                     std::to_string(problem.A.rows()) + "x" +
                     std::to_string(problem.A.cols()) + ", expected " +
                     std::to_string(m) + "x" + std::to_string(n));
  }
  if (!problem.c.allFinite() || !problem.A.allFinite() ||
      !problem.b.allFinite()) {
    throw InputError("LpSolve: non-finite problem data");
  }

  std::vector<int> artificial_rows;
  for (int i = 0; i < m; ++i) {
    if (problem.b[i] < 0.0) artificial_rows.push_back(i);
  }
  const int k = static_cast<int>(artificial_rows.size());
  const int slack0 = n;
  const int art0 = n + m;
  Tableau tab(m, n + m + k);
  int a = 0;
  for (int i = 0; i < m; ++i) {
    const double sign = problem.b[i] < 0.0 ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) tab.at(i, j) = sign * problem.A(i, j);
    tab.at(i, slack0 + i) = sign;
    tab.rhs(i) = sign * problem.b[i];
    if (sign < 0.0) {
      tab.at(i, art0 + a) = 1.0;
      tab.basis()[i] = art0 + a;
      ++a;
    } else {
      tab.basis()[i] = slack0 + i;
    }
  }

  const int limit = options.max_iterations > 0
                        ? options.max_iterations
                        : 50 * (m + n) + 1000;
  int iterations = 0;
  std::vector<char> allowed(n + m + k, 1);

  if (k > 0) {
    // Phase one: minimize the sum of artificial variables.
    for (int c = 0; c < n + m + k; ++c) tab.cost(c) = 0.0;
    tab.objective() = 0.0;
    for (int r = 0; r < m; ++r) {
      if (tab.basis()[r] >= art0) {
        for (int c = 0; c < n + m; ++c) tab.cost(c) -= tab.at(r, c);
        tab.objective() -= tab.rhs(r);
      }
    }
    if (!tab.Optimize(allowed, options, &iterations, limit)) {
      throw LpError(LpError::Status::kIterationLimit,
                    "LpSolve: phase one reported unbounded");
    }
    if (-tab.objective() > options.feasibility_tol *
                               (1.0 + problem.b.cwiseAbs().maxCoeff())) {
      throw LpError(LpError::Status::kInfeasible, "LpSolve: infeasible");
    }
    // Drive remaining artificial variables out of the basis.
    for (int r = tab.rows() - 1; r >= 0; --r) {
      if (tab.basis()[r] < art0) continue;
      int col = -1;
      double best = options.pivot_tol;
      for (int c = 0; c < n + m; ++c) {
        if (std::abs(tab.at(r, c)) > best) {
          best = std::abs(tab.at(r, c));
          col = c;
        }
      }
      if (col >= 0) {
        tab.Pivot(r, col);
      } else {
        tab.DeleteRow(r);
      }
    }
    for (int c = art0; c < n + m + k; ++c) allowed[c] = 0;
  }

  // Phase two.
  for (int c = 0; c < n + m + k; ++c) tab.cost(c) = c < n ? problem.c[c] : 0.0;
  tab.objective() = 0.0;
  for (int r = 0; r < tab.rows(); ++r) {
    const int bc = tab.basis()[r];
    const double cb = bc < n ? problem.c[bc] : 0.0;
    if (cb != 0.0) {
      for (int c = 0; c < n + m + k; ++c) tab.cost(c) -= cb * tab.at(r, c);
      tab.objective() -= cb * tab.rhs(r);
    }
  }
  if (!tab.Optimize(allowed, options, &iterations, limit)) {
    throw LpError(LpError::Status::kUnbounded, "LpSolve: unbounded");
  }

  LpResult result;
  result.solution = Vector::Zero(n);
  for (int r = 0; r < tab.rows(); ++r) {
    const int bc = tab.basis()[r];
    if (bc < n) result.solution[bc] = std::max(0.0, tab.rhs(r));
  }
  result.value = problem.c.dot(result.solution);
  result.duals = Vector::Zero(m);
  for (int i = 0; i < m; ++i) {
    result.duals[i] = std::max(0.0, tab.cost(slack0 + i));
  }
  result.iterations = iterations;
  return result;
}

}  // namespace approach
