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

#include "sblab/rules/brancher.hpp"

#include <utility>
#include <vector>

#include "sblab/errors.hpp"
#include "sblab/rules/cardinality.hpp"
#include "sblab/rules/selection.hpp"

namespace sblab::rules {

Brancher::Brancher(RuleConfig rule, const model::Instance& inst, lp::SimplexOptions options)
    : rule_(std::move(rule)), inst_(inst), options_(options), store_(inst.num_vars()) {
  rule_.validate();
  exponents_ = {rule_.score.a0, rule_.score.a1};
  if (rule_.score.asymmetry == Asymmetry::kCardinality) {
    cardinality_row_ = detect_cardinality(inst, rule_.score.cardinality_min_rhs);
  }
}

void Brancher::refresh(const engine::LeafLog& log) {
  switch (rule_.score.asymmetry) {
    case Asymmetry::kLastAssignment:
      exponents_ = last_assignment_exponents(log, rule_.score, LaMode::kLastAssignment);
      break;
    case Asymmetry::kRebalanced:
      exponents_ = last_assignment_exponents(log, rule_.score, LaMode::kRebalanced);
      break;
    case Asymmetry::kPruningAware:
      exponents_ = last_assignment_exponents(log, rule_.score, pa_select_mode(log, rule_.score));
      break;
    case Asymmetry::kNone:
    case Asymmetry::kCardinality:
      break;
  }
}

BranchDecision Brancher::choose(const BranchContext& ctx) {
  if (ctx.view == nullptr || ctx.lp == nullptr) throw ContractViolation("incomplete branch context");
  const lp::LpOutcome& node_lp = *ctx.lp;
  const std::vector<Candidate> candidates = fractional_candidates(inst_, node_lp.primal);
  if (candidates.empty()) throw ContractViolation("no fractional binary to branch on");

  std::vector<CandidateGains> gains =
      rule_.method == GainMethod::kFullStrong
          ? full_strong_gains(node_lp, *ctx.view, candidates, options_)
          : reliability_gains(node_lp, *ctx.view, candidates, store_, rule_.reliability,
                              rule_.score.epsilon, options_);

  SelectionContext sel;
  sel.incumbent = ctx.incumbent;
  sel.node_bound = node_lp.objective;
  sel.prune_tol = ctx.prune_tol;
  sel.exponents = exponents_;
  if (cardinality_row_) {
    sel.exponents = cardinality_exponents(
        cardinality_state(inst_, *cardinality_row_, ctx.view->structural_bounds()));
  }

  std::vector<ScoredGain> scored;
  scored.reserve(gains.size());
  for (const CandidateGains& g : gains) scored.push_back({g.var, g.gains});
  const int var = select_variable(scored, rule_.score, sel);

  BranchDecision d;
  d.var = var;
  d.exponents = sel.exponents;
  d.num_candidates = static_cast<int>(candidates.size());
  for (std::size_t i = 0; i < gains.size(); ++i) {
    if (gains[i].var != var) continue;
    d.value = candidates[i].value;
    d.gains = gains[i].gains;
    d.children = std::move(gains[i].children);
  }
  return d;
}

void Brancher::observe_child(int var, int side, double value, double parent_bound,
                             const lp::LpOutcome& child) {
  if (rule_.method != GainMethod::kReliability) return;
  if (child.status != lp::LpStatus::kOptimal) return;
  store_.record_gain(var, side, value, clamp_gain(child.objective - parent_bound));
}

}  // namespace sblab::rules
