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

#ifndef SBLAB_RULES_BRANCHER_HPP_
#define SBLAB_RULES_BRANCHER_HPP_

#include <array>
#include <memory>
#include <optional>

#include "sblab/engine/leaf_log.hpp"
#include "sblab/rules/last_assignment.hpp"
#include "sblab/rules/pseudocost.hpp"
#include "sblab/rules/rule_config.hpp"
#include "sblab/rules/strong_branching.hpp"
#include "sblab/simplex/simplex.hpp"

namespace sblab::rules {

struct BranchContext {
  const lp::LpView* view = nullptr;
  const lp::LpOutcome* lp = nullptr;  // optimal node LP with a factorization
  double incumbent = kInfiniteGain;   // minimization sense
  double prune_tol = 0.0;
};

struct BranchDecision {
  int var = -1;
  double value = 0.0;
  Exponents exponents;
  int num_candidates = 0;
  GainPair gains;
  // Exact child LPs computed while scoring, if any.
  std::array<std::optional<lp::LpOutcome>, 2> children;
};

// Per-solve branching state: rule configuration, current global exponents,
// pseudocosts and the detected cardinality row.
class Brancher {
 public:
  Brancher(RuleConfig rule, const model::Instance& inst, lp::SimplexOptions options = {});

  const RuleConfig& rule() const { return rule_; }
  const Exponents& exponents() const { return exponents_; }
  std::optional<int> cardinality_row() const { return cardinality_row_; }
  const PseudocostStore& pseudocosts() const { return store_; }

  // Recomputes the global exponents from the leaf statistics.
  void refresh(const engine::LeafLog& log);

  // Picks the branching variable at a node with at least one fractional
  // binary. Throws ContractViolation otherwise.
  BranchDecision choose(const BranchContext& ctx);

  // Feeds the outcome of an actual branching into the pseudocosts.
  void observe_child(int var, int side, double value, double parent_bound,
                     const lp::LpOutcome& child);

 private:
  RuleConfig rule_;
  const model::Instance& inst_;
  lp::SimplexOptions options_;
  Exponents exponents_;
  PseudocostStore store_;
  std::optional<int> cardinality_row_;
};

}  // namespace sblab::rules

#endif  // SBLAB_RULES_BRANCHER_HPP_
