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

#include "approach/combinatorial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace approach {
namespace {

void CheckInstance(const CombInstance& inst) {
  if (inst.d < 1 || inst.m < 1 || inst.m > inst.d) {
    throw InputError("CombInstance: need 1 <= m <= d");
  }
}

}  // namespace

std::int64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::int64_t RankSubset(const std::vector<int>& subset) {
  std::int64_t rank = 0;
  for (size_t k = 0; k < subset.size(); ++k) {
    rank += Binomial(subset[k], static_cast<int>(k) + 1);
  }
  return rank;
}

std::vector<int> UnrankSubset(std::int64_t rank, int m) {
  std::vector<int> subset(static_cast<size_t>(m));
  for (int k = m; k >= 1; --k) {
    int c = k - 1;
    while (Binomial(c + 1, k) <= rank) ++c;
    subset[static_cast<size_t>(k - 1)] = c;
    rank -= Binomial(c, k);
  }
  return subset;
}

Vector CombPayoff(const std::vector<int>& subset, const Vector& v, int m) {
  if (static_cast<int>(subset.size()) != m) {
    throw InputError("CombPayoff: subset must have m elements");
  }
  double acc = 0.0;
  for (int i : subset) {
    if (i < 0 || i >= v.size()) throw InputError("CombPayoff: bad index");
    acc += v[i];
  }
  return (v.array() - acc / m).matrix();
}

Vector CombExpectedPayoff(const Vector& x, const Vector& v, int m) {
  RequireDim(x, v.size(), "CombExpectedPayoff");
  return (v.array() - v.dot(x) / m).matrix();
}

Vector CombFtrlStep(const Vector& Y, double eta, const CombInstance& inst) {
  CheckInstance(inst);
  RequireDim(Y, inst.d, "CombFtrlStep");
  if (!(eta > 0.0)) throw InputError("CombFtrlStep: eta must be positive");
  return ScaledEntropicArgmax(eta * Y, inst.m);
}

std::vector<SubsetWeight> CombOracle(const Vector& x, int m) {
  return CaratheodoryDecompose(x, m);
}

CombRegretTracker::CombRegretTracker(CombInstance inst)
    : inst_(inst), cumulative_(Vector::Zero(inst.d)) {
  CheckInstance(inst_);
}

void CombRegretTracker::Add(const std::vector<int>& subset, const Vector& v) {
  RequireDim(v, inst_.d, "CombRegretTracker::Add");
  cumulative_ += v;
  for (int i : subset) played_ += v[i];
  ++rounds_;
}

void CombRegretTracker::AddMixed(const Vector& x, const Vector& v) {
  RequireDim(v, inst_.d, "CombRegretTracker::AddMixed");
  cumulative_ += v;
  played_ += v.dot(x);
  ++rounds_;
}

double CombRegretTracker::Regret() const {
  std::vector<double> values(cumulative_.data(),
                             cumulative_.data() + cumulative_.size());
  std::partial_sort(values.begin(), values.begin() + inst_.m, values.end(),
                    std::greater<>());
  return std::accumulate(values.begin(), values.begin() + inst_.m, 0.0) -
         played_;
}

void CombRegretTracker::Observe(int, const Decision& decision,
                                std::int64_t pure, const Vector& b) {
  if (pure >= 0) {
    Add(UnrankSubset(pure, inst_.m), b);
  } else {
    AddMixed(decision.action, b);
  }
}

double CombRegretTracker::AverageRegret() const {
  return rounds_ > 0 ? Regret() / rounds_ : 0.0;
}

double CombRegret(const std::vector<std::vector<int>>& subsets,
                  const std::vector<Vector>& payoffs, int m) {
  if (subsets.empty() || subsets.size() != payoffs.size()) {
    throw InputError("CombRegret: need a nonempty matching history");
  }
  CombRegretTracker tracker(
      CombInstance{static_cast<int>(payoffs.front().size()), m});
  for (size_t t = 0; t < subsets.size(); ++t) {
    tracker.Add(subsets[t], payoffs[t]);
  }
  return tracker.Regret();
}

CombGame::CombGame(CombInstance inst) : inst_(inst) { CheckInstance(inst_); }

std::string CombGame::name() const {
  return "combinatorial(d=" + std::to_string(inst_.d) +
         ", m=" + std::to_string(inst_.m) + ")";
}

FeasibleSet CombGame::decision_set() const {
  return CappedSimplex{inst_.d, static_cast<double>(inst_.m)};
}

Decision CombGame::Oracle(const Vector& x) const {
  Decision dec;
  dec.action = x;
  for (const SubsetWeight& sw : CombOracle(x, inst_.m)) {
    dec.pure_ids.push_back(RankSubset(sw.subset));
    dec.pure_weights.push_back(sw.weight);
  }
  return dec;
}

Vector CombGame::Payoff(const Vector& action, const Vector& b) const {
  return CombExpectedPayoff(action, b, inst_.m);
}

Vector CombGame::PurePayoff(std::int64_t pure, const Vector& b) const {
  return CombPayoff(UnrankSubset(pure, inst_.m), b, inst_.m);
}

ConeSpec CombGame::target() const {
  return ConeSpec::NegativeOrthant(inst_.d);
}

Regularizer CombRegularizer(const CombInstance& inst) {
  CheckInstance(inst);
  return Regularizer::ScaledEntropic(inst.d, inst.m);
}

Schedule CombSchedule(const CombInstance& inst) {
  CheckInstance(inst);
  Schedule s;
  s.delta = std::log(static_cast<double>(inst.d) / inst.m);
  s.K = 1.0 / (static_cast<double>(inst.m) * inst.m);
  s.M = 2.0;
  return s;
}

}  // namespace approach
