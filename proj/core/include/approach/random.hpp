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

#ifndef APPROACH_RANDOM_HPP_
#define APPROACH_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "approach/common.hpp"

namespace approach {

// SplitMix64 finalizer. Used to derive independent per-run seeds from a
// master seed: seed_i = SplitMix64(master ^ i).
std::uint64_t SplitMix64(std::uint64_t x);
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index);

// Deterministic random stream on std::mt19937_64 with every derived
// distribution computed here; streams are bit-identical across standard
// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // Uniform integer in [0, n).
  std::uint64_t Below(std::uint64_t n);
  double Gaussian();
  double Exponential();
  // Gamma(shape, 1) by Marsaglia-Tsang, boosted for shape < 1.
  double Gamma(double shape);
  Vector GaussianVector(int n);
  Vector UniformVector(int n, double lo, double hi);
  // Dirichlet(alpha, ..., alpha) sample on the simplex.
  Vector Dirichlet(int n, double alpha);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace approach

#endif  // APPROACH_RANDOM_HPP_
