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

#ifndef SBLAB_RULES_STRONG_BRANCHING_HPP_
#define SBLAB_RULES_STRONG_BRANCHING_HPP_

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "sblab/rules/gains.hpp"
#include "sblab/rules/pseudocost.hpp"
#include "sblab/rules/rule_config.hpp"
#include "sblab/simplex/simplex.hpp"

namespace sblab::rules {

struct Candidate {
  int var = -1;
  double value = 0.0;  // fractional LP value at the node
};

struct CandidateGains {
  int var = -1;
  GainPair gains;
  // True when both children were solved to completion.
  bool exact = false;
  // Completed child LPs, kept so the engine can reuse them.
  std::array<std::optional<lp::LpOutcome>, 2> children;
};

// Binaries whose node LP value is more than tol away from {0, 1}, by index.
std::vector<Candidate> fractional_candidates(const model::Instance& inst,
                                             std::span<const double> primal, double tol = 1e-6);

// Solves both children of every candidate. node_lp must be optimal for view.
std::vector<CandidateGains> full_strong_gains(const lp::LpOutcome& node_lp,
                                              const lp::LpView& view,
                                              std::span<const Candidate> candidates,
                                              const lp::SimplexOptions& options = {});

// Pseudocost estimates for reliable candidates; strong branching (capped,
// most fractional first, up to the budget) for the others, whose results are
// recorded in the store; fallback estimates beyond the budget.
std::vector<CandidateGains> reliability_gains(const lp::LpOutcome& node_lp,
                                              const lp::LpView& view,
                                              std::span<const Candidate> candidates,
                                              PseudocostStore& store,
                                              const ReliabilityParams& params, double epsilon,
                                              const lp::SimplexOptions& options = {});

}  // namespace sblab::rules

#endif  // SBLAB_RULES_STRONG_BRANCHING_HPP_
