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

#include "approach/phi_regret.hpp"

#include <algorithm>
#include <cmath>

namespace approach {

PhiFamily PhiFamily::Transpositions(int d) {
  if (d < 2) throw InputError("Transpositions: d must be >= 2");
  PhiFamily f;
  f.kind = Kind::kTranspositions;
  f.d = d;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      std::vector<int> m(d);
      for (int k = 0; k < d; ++k) m[k] = k;
      std::swap(m[i], m[j]);
      f.maps.push_back(std::move(m));
    }
  }
  return f;
}

PhiFamily PhiFamily::Internal(int d) {
  if (d < 2) throw InputError("Internal: d must be >= 2");
  PhiFamily f;
  f.kind = Kind::kInternal;
  f.d = d;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      std::vector<int> m(d);
      for (int k = 0; k < d; ++k) m[k] = k;
      m[i] = j;
      f.maps.push_back(std::move(m));
    }
  }
  return f;
}

PhiFamily PhiFamily::AllMaps(int d) {
  if (d < 1 || d > 5) throw InputError("AllMaps: d must lie in [1, 5]");
  PhiFamily f;
  f.kind = Kind::kAllMaps;
  f.d = d;
  std::vector<int> m(d, 0);
  while (true) {
    f.maps.push_back(m);
    int k = 0;
    while (k < d && ++m[k] == d) m[k++] = 0;
    if (k == d) break;
  }
  return f;
}

PhiFamily PhiFamily::External(int d) {
  if (d < 1) throw InputError("External: d must be >= 1");
  PhiFamily f;
  f.kind = Kind::kExternal;
  f.d = d;
  for (int j = 0; j < d; ++j) f.maps.emplace_back(d, j);
  return f;
}

PhiFamily PhiFamily::Custom(int d, std::vector<std::vector<int>> maps) {
  if (d < 1) throw InputError("Custom: d must be >= 1");
  if (maps.empty()) throw InputError("Custom: Phi must be nonempty");
  for (const auto& m : maps) {
    if (static_cast<int>(m.size()) != d) {
      throw InputError("Custom: every map needs d images");
    }
    for (int v : m) {
      if (v < 0 || v >= d) throw InputError("Custom: image out of range");
    }
  }
  PhiFamily f;
  f.kind = Kind::kCustom;
  f.d = d;
  f.maps = std::move(maps);
  return f;
}

std::string PhiFamily::ToString() const {
  std::string k;
  switch (kind) {
    case Kind::kTranspositions:
      k = "transpositions";
      break;
    case Kind::kInternal:
      k = "internal";
      break;
    case Kind::kAllMaps:
      k = "all_maps";
      break;
    case Kind::kExternal:
      k = "external";
      break;
    case Kind::kCustom:
      k = "custom";
      break;
  }
  return k + "(d=" + std::to_string(d) + ", |Phi|=" + std::to_string(size()) +
         ")";
}

Vector PhiPayoff(int i, const Vector& v, const PhiFamily& family) {
  RequireDim(v, family.d, "PhiPayoff");
  if (i < 0 || i >= family.d) throw InputError("PhiPayoff: bad action");
  Vector r(family.size());
  for (int k = 0; k < family.size(); ++k) {
    r[k] = v[family.maps[k][i]] - v[i];
  }
  return r;
}

Vector PhiExpectedPayoff(const Vector& a, const Vector& v,
                         const PhiFamily& family) {
  RequireDim(a, family.d, "PhiExpectedPayoff");
  RequireDim(v, family.d, "PhiExpectedPayoff");
  Vector r = Vector::Zero(family.size());
  for (int k = 0; k < family.size(); ++k) {
    double acc = 0.0;
    for (int i = 0; i < family.d; ++i) {
      acc += a[i] * (v[family.maps[k][i]] - v[i]);
    }
    r[k] = acc;
  }
  return r;
}

Vector PhiFtrlWeights(const Vector& R, double eta) {
  if (!(eta > 0.0)) throw InputError("PhiFtrlWeights: eta must be positive");
  return Softmax(eta * R);
}

Matrix PhiTransitionMatrix(const Vector& x, const PhiFamily& family) {
  RequireDim(x, family.size(), "PhiTransitionMatrix");
  Vector w = x.cwiseMax(0.0);
  double total = w.sum();
  if (total <= 0.0) {
    w = Vector::Ones(family.size());
    total = w.sum();
  }
  w /= total;
  Matrix P = Matrix::Zero(family.d, family.d);
  for (int k = 0; k < family.size(); ++k) {
    for (int i = 0; i < family.d; ++i) P(i, family.maps[k][i]) += w[k];
  }
  return P;
}

Vector PhiOracle(const Vector& x, const PhiFamily& family) {
  return StationaryDistribution(PhiTransitionMatrix(x, family));
}

PhiRegretTracker::PhiRegretTracker(PhiFamily family)
    : family_(std::move(family)),
      S_(Matrix::Zero(family_.d, family_.d)) {}

void PhiRegretTracker::Add(int i, const Vector& v) {
  RequireDim(v, family_.d, "PhiRegretTracker::Add");
  S_.row(i) += v.transpose();
  ++rounds_;
}

void PhiRegretTracker::AddMixed(const Vector& a, const Vector& v) {
  RequireDim(v, family_.d, "PhiRegretTracker::AddMixed");
  S_ += a * v.transpose();
  ++rounds_;
}

double PhiRegretTracker::Regret() const {
  const double played = S_.trace();
  if (family_.kind == PhiFamily::Kind::kAllMaps) {
    return S_.rowwise().maxCoeff().sum() - played;
  }
  double best = -kInf;
  for (const auto& m : family_.maps) {
    double acc = 0.0;
    for (int i = 0; i < family_.d; ++i) acc += S_(i, m[i]);
    best = std::max(best, acc);
  }
  return best - played;
}

void PhiRegretTracker::Observe(int, const Decision& decision,
                               std::int64_t pure, const Vector& b) {
  if (pure >= 0) {
    Add(static_cast<int>(pure), b);
  } else {
    AddMixed(decision.action, b);
  }
}

double PhiRegretTracker::AverageRegret() const {
  return rounds_ > 0 ? Regret() / rounds_ : 0.0;
}

double PhiRegretEval(const std::vector<int>& actions,
                     const std::vector<Vector>& payoffs,
                     const PhiFamily& family) {
  if (actions.empty() || actions.size() != payoffs.size()) {
    throw InputError("PhiRegretEval: need a nonempty matching history");
  }
  PhiRegretTracker tracker(family);
  for (size_t t = 0; t < actions.size(); ++t) {
    tracker.Add(actions[t], payoffs[t]);
  }
  return tracker.Regret();
}

PhiGame::PhiGame(PhiFamily family, double payoff_scale, double M,
                 NormTag norm)
    : family_(std::move(family)),
      scale_(payoff_scale),
      M_(M),
      norm_(norm) {
  if (family_.maps.empty()) throw InputError("PhiGame: empty family");
}

std::string PhiGame::name() const { return "phi_game " + family_.ToString(); }

FeasibleSet PhiGame::decision_set() const { return SimplexSet{family_.d, 1.0}; }

Decision PhiGame::Oracle(const Vector& x) const {
  Decision dec;
  dec.action = PhiOracle(x, family_);
  for (int i = 0; i < family_.d; ++i) {
    dec.pure_ids.push_back(i);
    dec.pure_weights.push_back(dec.action[i]);
  }
  return dec;
}

Vector PhiGame::Payoff(const Vector& action, const Vector& b) const {
  return scale_ * PhiExpectedPayoff(action, b, family_);
}

Vector PhiGame::PurePayoff(std::int64_t pure, const Vector& b) const {
  return scale_ * PhiPayoff(static_cast<int>(pure), b, family_);
}

ConeSpec PhiGame::target() const {
  return ConeSpec::NegativeOrthant(family_.size());
}

Regularizer PhiRegularizer(const PhiFamily& family) {
  return Regularizer::Entropic(family.size());
}

Schedule PhiSchedule(const PhiFamily& family) {
  Schedule s;
  s.delta = std::log(static_cast<double>(family.size()));
  s.K = 1.0;
  s.M = 2.0;
  return s;
}

}  // namespace approach
