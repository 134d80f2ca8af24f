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

#ifndef APPROACH_QP_HPP_
#define APPROACH_QP_HPP_

#include <functional>
#include <vector>

#include "approach/common.hpp"

namespace approach {

// Separation oracle for an implicitly described family of valid linear
// inequalities. Given x it writes the most violated inequality a . x <= b
// into (*a, *b) and returns its violation a . x - b; a non-positive return
// value means every inequality of the family holds at x.
using ConstraintOracle =
    std::function<double(const Vector& x, Vector* a, double* b)>;

struct QpProjection {
  Vector x;
  // Multipliers of the explicit rows (zero for inactive rows), in the
  // convention  G (x - v) + A^T multipliers + (oracle terms) = 0.
  Vector multipliers;
  int iterations = 0;
};

struct QpOptions {
  double feasibility_tol = 1e-11;
  int max_iterations = 0;  // 0 selects an automatic bound.
};

// Metric projection
//   argmin 1/2 sum_i g_i (x_i - v_i)^2  s.t.  A x <= b, oracle families,
// by the Goldfarb-Idnani dual active-set method. `metric` holds the positive
// diagonal g (empty means the identity). Throws SolverError if the
// constraints are inconsistent or the iteration budget is exhausted.
QpProjection ProjectPolyhedron(const Vector& v, const Vector& metric,
                               const Matrix& A, const Vector& b,
                               const std::vector<ConstraintOracle>& oracles,
                               const QpOptions& options = {});

// Oracle for the l1 ball of the given radius on coordinates
// [begin, begin + count).
ConstraintOracle L1BallOracle(int begin, int count, double radius);
// Oracle for the l-infinity ball of the given radius on a block.
ConstraintOracle LinfBallOracle(int begin, int count, double radius);

}  // namespace approach

#endif  // APPROACH_QP_HPP_
