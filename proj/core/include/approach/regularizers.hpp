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

#ifndef APPROACH_REGULARIZERS_HPP_
#define APPROACH_REGULARIZERS_HPP_

#include <cstdint>

#include "approach/common.hpp"
#include "approach/geometry.hpp"

namespace approach {

struct Certificate {
  double delta = 0.0;
  double K = 1.0;
  NormTag norm;
};

struct Regularizer {
  enum class Kind {
    kEntropic,
    kScaledEntropic,
    kLpSquared,
    kEuclideanSquared,
    kCompositeGlobalCost
  };
  Kind kind = Kind::kEntropic;
  GeneratorSet domain;
  // kScaledEntropic: subset size m.
  int m = 1;
  // kLpSquared: (scale/2)||x||_{q'}^2; kCompositeGlobalCost: block exponent.
  double q_prime = 2.0;
  double scale = 1.0;
  // kLpSquared: dimension entering the strong-convexity constant (0 means
  // the ambient dimension of the domain).
  int constant_dim = 0;
  // kCompositeGlobalCost: (A/2)||z||_2^2 + 1/2 ||z'||_{q'}^2 with z, z' in
  // R^d, for a global cost of exponent p.
  double A = 1.0;
  int d = 0;
  double p = kInf;

  static Regularizer Entropic(int d);
  static Regularizer ScaledEntropic(int d, int m);
  static Regularizer LpSquared(const GeneratorSet& domain, double q_prime,
                               double scale = 1.0, int constant_dim = 0);
  static Regularizer EuclideanSquared(const GeneratorSet& domain);
  static Regularizer CompositeGlobalCost(const GeneratorSet& domain, int d,
                                         double p, double A, double q_prime);

  // Same regularizer on another domain (used for outer approximations).
  Regularizer WithDomain(const GeneratorSet& other) const;

  double Value(const Vector& x) const;
  Vector Gradient(const Vector& x) const;
  std::string ToString() const;
};

// argmax_{x in domain} <y, x> - h(x). `warm` is an optional starting point
// for the iterative paths.
Vector ConjArgmax(const Regularizer& h, const Vector& y, double tol = 1e-10,
                  const Vector* warm = nullptr);

// Exact maximizer of <y, x> - sum (x_i/m) log(x_i/m) over the capped simplex.
Vector ScaledEntropicArgmax(const Vector& y, int m);

Vector Softmax(const Vector& y);

Certificate CertifyConstants(const Regularizer& h);

struct StrongConvexityReport {
  bool pass = true;
  double worst_margin = kInf;
  int samples = 0;
};

StrongConvexityReport StrongConvexityCheck(const Regularizer& h, int samples,
                                           std::uint64_t seed,
                                           double tolerance = 1e-10);
// Same test against an explicit (K, norm) instead of the certified one.
StrongConvexityReport StrongConvexityCheck(const Regularizer& h,
                                           const Certificate& cert,
                                           int samples, std::uint64_t seed,
                                           double tolerance = 1e-10);

}  // namespace approach

#endif  // APPROACH_REGULARIZERS_HPP_
