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

#ifndef APPROACH_HARNESS_CHECKS_HPP_
#define APPROACH_HARNESS_CHECKS_HPP_

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace approach::harness {

// One verified property. `value` is compared against `limit`; `margin` is
// positive when the check passes with room to spare.
struct CheckResult {
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  double margin = 0.0;
  bool pass = false;
  std::string detail;
};

// Acceptance criteria, numbered as in the README.
CheckResult CheckSwapRegret();             // 1
CheckResult CheckInternalRegret();         // 2
CheckResult CheckCombinatorialRegret();    // 3
CheckResult CheckGlobalCostLinf();         // 4
CheckResult CheckGlobalCostNorm();         // 5
CheckResult CheckBlackwellGuarantee();     // 6
CheckResult CheckEquivalence();            // 7
CheckResult CheckDistanceSupport();        // 8
CheckResult CheckHighProbability();        // 9
CheckResult CheckRates();                  // 10
CheckResult CheckClosedFormOracles();      // 11

struct Criterion {
  int number = 0;
  std::function<CheckResult()> run;
};

std::vector<Criterion> AcceptanceCriteria();

std::vector<std::string> SuiteNames();
// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> RunSuite(const std::string& suite);

void PrintTable(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace approach::harness

#endif  // APPROACH_HARNESS_CHECKS_HPP_
