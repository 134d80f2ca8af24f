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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "approach/random.hpp"
#include "approach/regularizers.hpp"
#include "approach/solvers.hpp"

using approach::Certificate;
using approach::ConeSpec;
using approach::GeneratorSet;
using approach::kInf;
using approach::NormTag;
using approach::Regularizer;
using approach::Rng;
using approach::Vector;

namespace {

Vector V(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

GeneratorSet QuarterDisk() {
  return approach::CapGenerator(ConeSpec::PositiveOrthant(2), NormTag::Lp(2.0));
}

}  // namespace

TEST_CASE("entropic argmax at zero is uniform") {
  const Vector x = approach::ConjArgmax(Regularizer::Entropic(5), Vector::Zero(5));
  CHECK((x - Vector::Constant(5, 0.2)).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("entropic argmax is the softmax") {
  const Vector x =
      approach::ConjArgmax(Regularizer::Entropic(2), V({std::log(2.0), 0.0}));
  CHECK(x[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("euclidean argmax on the quarter disk is a projection") {
  const Regularizer h = Regularizer::EuclideanSquared(QuarterDisk());
  const Vector y = V({1.5, -0.5});
  const Vector x = approach::ConjArgmax(h, y);
  CHECK((x - V({1.0, 0.0})).norm() <= 1e-10);
  const Vector dykstra = approach::DykstraProject(
      {approach::OrthantSet{V({1.0, 1.0})}, approach::LqBall{2, 2.0, 1.0}}, y,
      1e-12);
  CHECK((x - dykstra).norm() <= 1e-8);
}

TEST_CASE("argmax lies in the domain and beats sampled points") {
  Rng rng(21);
  const std::vector<Regularizer> hs = {
      Regularizer::Entropic(4), Regularizer::ScaledEntropic(6, 2),
      Regularizer::LpSquared(approach::MakeSimplex(3), 1.5),
      Regularizer::EuclideanSquared(QuarterDisk())};
  for (const Regularizer& h : hs) {
    for (int k = 0; k < 5; ++k) {
      const Vector y = 2.0 * rng.GaussianVector(h.domain.dim());
      const Vector xs = approach::ConjArgmax(h, y, 1e-10);
      CHECK(approach::InGenerator(h.domain, xs, 1e-8));
      const double best = y.dot(xs) - h.Value(xs);
      for (int j = 0; j < 50; ++j) {
        const Vector x = approach::SampleGenerator(h.domain, rng);
        CHECK(y.dot(x) - h.Value(x) <= best + 1e-8);
      }
    }
  }
}

TEST_CASE("softmax agrees with projected gradient ascent") {
  Rng rng(23);
  for (int k = 0; k < 20; ++k) {
    const int d = 2 + static_cast<int>(rng.Below(4));
    const Vector y = 2.0 * rng.GaussianVector(d);
    const Regularizer h = Regularizer::Entropic(d);
    const approach::Objective f = [&](const Vector& x, Vector* g) {
      if (g != nullptr) *g = y - h.Gradient(x.cwiseMax(1e-300));
      return y.dot(x) - h.Value(x);
    };
    const Vector pga = approach::PgaMaximize(
        f, approach::SimplexSet{d, 1.0}, Vector::Constant(d, 1.0 / d), 1e-12);
    CHECK((pga - approach::Softmax(y)).cwiseAbs().maxCoeff() <= 1e-6);
  }
}

TEST_CASE("argmax depends on eta and Y only through their product") {
  Rng rng(25);
  const Regularizer h = Regularizer::LpSquared(approach::MakeSimplex(4), 1.7);
  const Vector Y = rng.GaussianVector(4);
  const double eta = 0.37;
  const Vector a = approach::ConjArgmax(h, eta * Y);
  const Vector b = approach::ConjArgmax(h, (2.0 * eta) * (0.5 * Y));
  CHECK(a == b);
}

TEST_CASE("certified constants") {
  Certificate c = approach::CertifyConstants(Regularizer::Entropic(4));
  CHECK(c.delta == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(c.K == 1.0);
  CHECK(c.norm == NormTag::Lp(1.0));

  c = approach::CertifyConstants(Regularizer::ScaledEntropic(8, 2));
  CHECK(c.delta == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(c.K == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(c.norm == NormTag::Lp(1.0));

  c = approach::CertifyConstants(Regularizer::EuclideanSquared(QuarterDisk()));
  CHECK(c.delta == doctest::Approx(0.5));
  CHECK(c.K == 1.0);
  CHECK(c.norm == NormTag::Lp(2.0));

  GeneratorSet simplex = approach::MakeSimplex(4);
  simplex.delta = 0.5;
  c = approach::CertifyConstants(Regularizer::LpSquared(simplex, 1.5));
  CHECK(c.delta == 0.5);
  CHECK(c.K == doctest::Approx(0.5 * std::pow(4.0, 2.0 * (1.0 / 1.5 - 1.0))));
  CHECK(c.norm == NormTag::Lp(1.0));
}

TEST_CASE("composite global-cost constants") {
  const int d = 4;
  const double qp = 1.0 + 1.0 / (2.0 * std::log(4.0) - 1.0);
  CHECK(qp == doctest::Approx(1.5641).epsilon(1e-4));
  const GeneratorSet X = approach::CapGenerator(approach::GlobalCostCone{d, kInf},
                                                NormTag::GlobalCostDual(d, 1.0));
  const Certificate c = approach::CertifyConstants(
      Regularizer::CompositeGlobalCost(X, d, kInf, 1.0, qp));
  // Delta = (A d^{max(2/p - 1, 0)} + 1) / 2 with A = 1, p = inf.
  CHECK(c.delta == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c.K == doctest::Approx(std::min(
                   1.0, (qp - 1.0) * std::pow(4.0, 2.0 * (1.0 / qp - 1.0)))));
  CHECK(c.norm == NormTag::GlobalCostDual(d, kInf));
}

TEST_CASE("strong convexity holds with the certified constant") {
  const auto report =
      approach::StrongConvexityCheck(Regularizer::Entropic(3), 1000, 1);
  CHECK(report.pass);
  CHECK(report.worst_margin >= -1e-10);
  CHECK(report.samples == 1000);
}

TEST_CASE("strong convexity fails with an inflated constant") {
  const Regularizer h = Regularizer::Entropic(3);
  Certificate c = approach::CertifyConstants(h);
  c.K *= 1.5;
  CHECK_FALSE(approach::StrongConvexityCheck(h, c, 1000, 1).pass);
}

TEST_CASE("strong convexity is tight at the endpoints") {
  const Regularizer h = Regularizer::Entropic(3);
  const Vector x = V({0.2, 0.3, 0.5});
  const Vector xp = V({0.6, 0.1, 0.3});
  for (double lambda : {0.0, 1.0}) {
    const Vector mid = lambda * x + (1.0 - lambda) * xp;
    const double rhs = lambda * h.Value(x) + (1.0 - lambda) * h.Value(xp);
    CHECK(rhs - h.Value(mid) == 0.0);
  }
}
