// Copyright 2026 The sblab Authors
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

#ifndef SBLAB_RULES_SELECTION_HPP_
#define SBLAB_RULES_SELECTION_HPP_

#include <span>

#include "sblab/rules/gains.hpp"
#include "sblab/rules/last_assignment.hpp"
#include "sblab/rules/rule_config.hpp"

namespace sblab::rules {

struct ScoredGain {
  int var = -1;
  GainPair gains;
};

struct SelectionContext {
  // Incumbent bound and node LP bound, minimization sense. An infinite
  // incumbent means none is known.
  double incumbent = kInfiniteGain;
  double node_bound = 0.0;
  // Absolute pruning tolerance at the current incumbent.
  double prune_tol = 0.0;
  Exponents exponents;
};

// Additive primal-dual gap |incumbent - node_bound|, +inf without incumbent.
double primal_dual_gap(const SelectionContext& ctx);

// Returns the chosen variable. Ties go to the lowest variable index. Throws
// ContractViolation on an empty candidate list.
int select_variable(std::span<const ScoredGain> gains, const ScoreParams& p,
                    const SelectionContext& ctx);

}  // namespace sblab::rules

#endif  // SBLAB_RULES_SELECTION_HPP_
