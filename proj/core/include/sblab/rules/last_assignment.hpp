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

#ifndef SBLAB_RULES_LAST_ASSIGNMENT_HPP_
#define SBLAB_RULES_LAST_ASSIGNMENT_HPP_

#include "sblab/engine/leaf_log.hpp"
#include "sblab/rules/rule_config.hpp"

namespace sblab::rules {

struct Exponents {
  double a0 = 0.0;
  double a1 = 0.0;
  bool operator==(const Exponents&) const = default;
};

enum class LaMode { kLastAssignment, kRebalanced };

// LA counts only integral/infeasible leaves; RLA counts every leaf. Below the
// k_I gate both exponents are zero.
Exponents last_assignment_exponents(const engine::LeafLog& log, const ScoreParams& p,
                                    LaMode mode);

// RLA when integral/infeasible leaves are a fraction below pa_threshold of all
// leaves, LA otherwise. An empty log selects RLA.
LaMode pa_select_mode(const engine::LeafLog& log, const ScoreParams& p);

}  // namespace sblab::rules

#endif  // SBLAB_RULES_LAST_ASSIGNMENT_HPP_
