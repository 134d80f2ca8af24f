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

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "approach_harness/checks.hpp"

int main() {
  using approach::harness::CheckResult;
  int failures = 0;
  const auto criteria = approach::harness::AcceptanceCriteria();
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = criterion.run();
    } catch (const std::exception& e) {
      r.name = "exception";
      r.pass = false;
      r.detail = e.what();
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (!r.pass) ++failures;
    std::printf("criterion %d: %s %s value=%.6g limit=%.6g margin=%.6g "
                "(%.1fs) %s\n",
                criterion.number, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.value, r.limit, r.margin, seconds, r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
