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

#ifndef APPROACH_LP_HPP_
#define APPROACH_LP_HPP_

#include "approach/common.hpp"

namespace approach {

// Linear program in inequality form:
//   minimize    c . u
//   subject to  A u <= b,  u >= 0.
struct LpProblem {
  Vector c;
  Matrix A;
  Vector b;
};

struct LpResult {
  double value = 0.0;
  Vector solution;
  // Multipliers w >= 0 of the rows: c + A^T w >= 0 and c . u = -b . w.
  Vector duals;
  int iterations = 0;
};

struct LpOptions {
  double pivot_tol = 1e-11;
  double feasibility_tol = 1e-9;
  int max_iterations = 0;  // 0 selects 50 * (rows + cols) + 1000.
};

// Dense two-phase tableau simplex method with Bland's anti-cycling rule.
// Throws LpError on infeasible or unbounded problems and InputError on
// inconsistent dimensions or non-finite data.
LpResult LpSolve(const LpProblem& problem, const LpOptions& options = {});

}  // namespace approach

#endif  // APPROACH_LP_HPP_
