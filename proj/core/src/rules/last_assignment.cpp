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

#include "sblab/rules/last_assignment.hpp"

namespace sblab::rules {

Exponents last_assignment_exponents(const engine::LeafLog& log, const ScoreParams& p,
                                    LaMode mode) {
  const bool la = mode == LaMode::kLastAssignment;
  const std::int64_t n0 = la ? log.n0_ii : log.n0_all;
  const std::int64_t n1 = la ? log.n1_ii : log.n1_all;
  const std::int64_t gate_count = la ? log.total_ii : log.total_leaves;
  if (gate_count < p.k_i || n0 + n1 == 0) return {};
  const double a = static_cast<double>(n0 - n1) / static_cast<double>(n0 + n1);
  if (a > 0.0) return {0.0, p.eta * a};
  return {-p.eta * a, 0.0};
}

LaMode pa_select_mode(const engine::LeafLog& log, const ScoreParams& p) {
  if (log.total_leaves <= 0) return LaMode::kRebalanced;
  const double share =
      static_cast<double>(log.total_ii) / static_cast<double>(log.total_leaves);
  return share < p.pa_threshold ? LaMode::kRebalanced : LaMode::kLastAssignment;
}

}  // namespace sblab::rules
