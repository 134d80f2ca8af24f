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

#ifndef APPROACH_APPROACH_HPP_
#define APPROACH_APPROACH_HPP_

#include "approach/blackwell.hpp"
#include "approach/combinatorial.hpp"
#include "approach/common.hpp"
#include "approach/engine.hpp"
#include "approach/games.hpp"
#include "approach/geometry.hpp"
#include "approach/global_cost.hpp"
#include "approach/lp.hpp"
#include "approach/phi_regret.hpp"
#include "approach/qp.hpp"
#include "approach/random.hpp"
#include "approach/regularizers.hpp"
#include "approach/solvers.hpp"

#endif  // APPROACH_APPROACH_HPP_
