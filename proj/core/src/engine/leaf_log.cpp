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

#include "sblab/engine/leaf_log.hpp"

#include "sblab/errors.hpp"

namespace sblab::engine {

std::string_view to_string(LeafReason reason) {
  switch (reason) {
    case LeafReason::kInfeasible:
      return "infeasible";
    case LeafReason::kIntegral:
      return "integral";
    case LeafReason::kBoundPruned:
      return "bound_pruned";
  }
  return "?";
}

void record_leaf(LeafLog& log, const std::optional<BranchTag>& last_branch, LeafReason reason) {
  if (last_branch && last_branch->side != 0 && last_branch->side != 1) {
    throw ContractViolation("record_leaf: branch side must be 0 or 1");
  }
  ++log.total_leaves;
  const bool ii = reason != LeafReason::kBoundPruned;
  if (ii) ++log.total_ii;
  switch (reason) {
    case LeafReason::kInfeasible:
      ++log.infeasible;
      break;
    case LeafReason::kIntegral:
      ++log.integral;
      break;
    case LeafReason::kBoundPruned:
      ++log.bound_pruned;
      break;
  }
  if (!last_branch) return;
  if (last_branch->side == 0) {
    ++log.n0_all;
    if (ii) ++log.n0_ii;
  } else {
    ++log.n1_all;
    if (ii) ++log.n1_ii;
  }
}

}  // namespace sblab::engine
