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

#ifndef SBLAB_ENGINE_LEAF_LOG_HPP_
#define SBLAB_ENGINE_LEAF_LOG_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

namespace sblab::engine {

enum class LeafReason { kInfeasible, kIntegral, kBoundPruned };
std::string_view to_string(LeafReason reason);

// The branching that created a node: variable and the side (0 or 1) it was
// fixed to.
struct BranchTag {
  int var = -1;
  int side = 0;
  bool operator==(const BranchTag&) const = default;
};

// Global leaf classification counters. "II" leaves are the integral and
// infeasible ones; the side counters attribute each leaf to the last fixing
// on its path.
struct LeafLog {
  std::int64_t n0_ii = 0;
  std::int64_t n1_ii = 0;
  std::int64_t n0_all = 0;
  std::int64_t n1_all = 0;
  std::int64_t total_leaves = 0;
  std::int64_t total_ii = 0;
  std::int64_t infeasible = 0;
  std::int64_t integral = 0;
  std::int64_t bound_pruned = 0;

  bool operator==(const LeafLog&) const = default;
};

// Records one leaf. last_branch is empty only for the root.
void record_leaf(LeafLog& log, const std::optional<BranchTag>& last_branch, LeafReason reason);

}  // namespace sblab::engine

#endif  // SBLAB_ENGINE_LEAF_LOG_HPP_
