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

#include "sblab/rules/selection.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sblab/errors.hpp"
#include "sblab/rules/scores.hpp"

namespace sblab::rules {

namespace {

// Keeps the candidate with the largest key; ties keep the lower variable.
class ArgMax {
 public:
  void offer(int var, double key) {
    if (var_ < 0 || key > key_ || (key == key_ && var < var_)) {
      var_ = var;
      key_ = key;
    }
  }
  int var() const { return var_; }

 private:
  int var_ = -1;
  double key_ = 0.0;
};

double score_of(double q0, double q1, const ScoreParams& p, const Exponents& e) {
  return asymmetric_score(q0, q1, e.a0, e.a1, p.a_min, p.a_max);
}

// Infeasible children first: two beat one; one-infeasible candidates compete
// on the feasible side's gain; otherwise the score decides.
int select_by_class(std::span<const ScoredGain> gains, const ScoreParams& p,
                    const SelectionContext& ctx, auto&& closed) {
  ArgMax both;
  ArgMax one;
  ArgMax none;
  for (const ScoredGain& g : gains) {
    const bool c0 = closed(g, 0);
    const bool c1 = closed(g, 1);
    if (c0 && c1) {
      both.offer(g.var, 0.0);
    } else if (c0 || c1) {
      one.offer(g.var, c0 ? g.gains.delta1 : g.gains.delta0);
    } else {
      const double q0 = std::max(g.gains.delta0, p.epsilon);
      const double q1 = std::max(g.gains.delta1, p.epsilon);
      none.offer(g.var, score_of(q0, q1, p, ctx.exponents));
    }
  }
  if (both.var() >= 0) return both.var();
  if (one.var() >= 0) return one.var();
  return none.var();
}

}  // namespace

double primal_dual_gap(const SelectionContext& ctx) {
  if (!std::isfinite(ctx.incumbent)) return kInfiniteGain;
  return std::abs(ctx.incumbent - ctx.node_bound);
}

int select_variable(std::span<const ScoredGain> gains, const ScoreParams& p,
                    const SelectionContext& ctx) {
  if (gains.empty()) throw ContractViolation("select_variable: no candidates");

  if (p.pruning_focused) {
    const double cutoff = ctx.incumbent - ctx.prune_tol;
    return select_by_class(gains, p, ctx, [&](const ScoredGain& g, int side) {
      const double delta = g.gains.side(side);
      return std::isinf(delta) || ctx.node_bound + delta >= cutoff;
    });
  }

  const double delta_pd = primal_dual_gap(ctx);
  if (p.gain_source == GainSource::kRaw || std::isinf(delta_pd)) {
    return select_by_class(gains, p, ctx, [](const ScoredGain& g, int side) {
      return std::isinf(g.gains.side(side));
    });
  }

  ArgMax best;
  for (const ScoredGain& g : gains) {
    const EfficaciousPair q = efficacious_clip(g.gains, delta_pd, p.epsilon);
    best.offer(g.var, score_of(q.q0, q.q1, p, ctx.exponents));
  }
  return best.var();
}

}  // namespace sblab::rules
