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

#ifndef APPROACH_COMMON_HPP_
#define APPROACH_COMMON_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace approach {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Raised when a caller violates a documented precondition (shape, sign,
// range of a parameter).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an operation is asked for a representation or dimension it
// does not support.
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what)
      : std::runtime_error(what) {}
};

// Raised by iterative kernels that exhaust their budget. Carries the best
// iterate found, its objective value and the residual or optimality gap.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, Vector best, double value, double gap)
      : std::runtime_error(what),
        best_(std::move(best)),
        value_(value),
        gap_(gap) {}

  const Vector& best() const { return best_; }
  double value() const { return value_; }
  double gap() const { return gap_; }

 private:
  Vector best_;
  double value_;
  double gap_;
};

// Raised by the linear programming solver.
class LpError : public std::runtime_error {
 public:
  enum class Status { kInfeasible, kUnbounded, kIterationLimit };

  LpError(Status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}

  Status status() const { return status_; }

 private:
  Status status_;
};

inline bool IsInfinite(double p) { return std::isinf(p); }

// Holder conjugate exponent: 1/p + 1/q = 1, with 1 <-> infinity.
inline double DualExponent(double p) {
  if (IsInfinite(p)) return 1.0;
  if (p == 1.0) return kInf;
  return p / (p - 1.0);
}

// l_p norm for p in [1, infinity].
inline double LpNorm(const Eigen::Ref<const Vector>& v, double p) {
  if (v.size() == 0) return 0.0;
  if (IsInfinite(p)) return v.cwiseAbs().maxCoeff();
  if (p == 1.0) return v.cwiseAbs().sum();
  if (p == 2.0) return v.norm();
  const double scale = v.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    acc += std::pow(std::abs(v[i]) / scale, p);
  }
  return scale * std::pow(acc, 1.0 / p);
}

inline void RequireDim(const Vector& v, Eigen::Index n, const char* what) {
  if (v.size() != n) {
    throw InputError(std::string(what) + ": expected dimension " +
                     std::to_string(n) + ", got " + std::to_string(v.size()));
  }
}

inline void RequireFinite(const Vector& v, const char* what) {
  if (!v.allFinite()) {
    throw InputError(std::string(what) + ": entries must be finite");
  }
}

}  // namespace approach

#endif  // APPROACH_COMMON_HPP_
