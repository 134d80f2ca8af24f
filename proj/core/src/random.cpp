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

#include "approach/random.hpp"

#include <cmath>
#include <numbers>

namespace approach {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index) {
  return SplitMix64(master ^ index);
}

double Rng::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::Below(std::uint64_t n) {
  if (n == 0) throw InputError("Rng::Below: n must be positive");
  const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

double Rng::Gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1;
  do {
    u1 = Uniform();
  } while (u1 <= 0.0);
  const double u2 = Uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

double Rng::Exponential() {
  double u;
  do {
    u = Uniform();
  } while (u <= 0.0);
  return -std::log(u);
}

double Rng::Gamma(double shape) {
  if (shape <= 0.0) throw InputError("Rng::Gamma: shape must be positive");
  if (shape < 1.0) {
    double u;
    do {
      u = Uniform();
    } while (u <= 0.0);
    return Gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x, v;
    do {
      x = Gaussian();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = Uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      return d * v;
    }
  }
}

Vector Rng::GaussianVector(int n) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = Gaussian();
  return v;
}

Vector Rng::UniformVector(int n, double lo, double hi) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = Uniform(lo, hi);
  return v;
}

Vector Rng::Dirichlet(int n, double alpha) {
  Vector v(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    v[i] = Gamma(alpha);
    total += v[i];
  }
  if (total <= 0.0) {
    v.setZero();
    v[static_cast<int>(Below(n))] = 1.0;
    return v;
  }
  return v / total;
}

}  // namespace approach
