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

#ifndef APPROACH_HARNESS_COMMANDS_HPP_
#define APPROACH_HARNESS_COMMANDS_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace approach::harness {

// Exit codes: 0 success, 1 configuration or usage error, 2 a run aborted on
// the oracle-slack hard limit.
int CmdRun(const std::string& config_path, const std::string& out_dir,
           std::ostream& out, std::ostream& err);
int CmdVerify(const std::string& suite, std::ostream& out, std::ostream& err);
int CmdSweep(const std::string& config_path, const std::vector<int>& grid,
             const std::string& out_dir, std::ostream& out, std::ostream& err);

// Parses "256,1024,4096" into integers; throws std::invalid_argument.
std::vector<int> ParseGrid(const std::string& text);

}  // namespace approach::harness

#endif  // APPROACH_HARNESS_COMMANDS_HPP_
