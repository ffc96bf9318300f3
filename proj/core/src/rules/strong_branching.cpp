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

#include "sblab/rules/strong_branching.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sblab/errors.hpp"

namespace sblab::rules {

namespace {

// Child bound in the minimization sense; +inf for proven infeasibility.
double child_bound(const lp::LpOutcome& child) {
  switch (child.status) {
    case lp::LpStatus::kOptimal:
      return child.objective;
    case lp::LpStatus::kInfeasible:
      return kInfiniteGain;
    case lp::LpStatus::kIterationLimit:
      return child.dual_bound;
    case lp::LpStatus::kUnbounded:
      break;
  }
  throw NumericalFailure("child LP relaxation is unbounded");
}

lp::LpOutcome solve_child(const lp::LpOutcome& node_lp, const lp::LpView& view, int var,
                          int side, std::optional<std::int64_t> cap,
                          const lp::SimplexOptions& options) {
  const model::Bounds fixed{static_cast<double>(side), static_cast<double>(side)};
  return lp::resolve_bound_change(node_lp, view, var, fixed, cap, options);
}

CandidateGains evaluate(const lp::LpOutcome& node_lp, const lp::LpView& view, int var,
                        std::optional<std::int64_t> cap, const lp::SimplexOptions& options) {
  CandidateGains out;
  out.var = var;
  out.exact = true;
  std::array<double, 2> bounds{};
  for (int side = 0; side < 2; ++side) {
    lp::LpOutcome child = solve_child(node_lp, view, var, side, cap, options);
    bounds[side] = child_bound(child);
    if (child.status == lp::LpStatus::kIterationLimit) {
      out.exact = false;
    } else {
      child.basis.drop_factorization();
      out.children[side] = std::move(child);
    }
  }
  out.gains = make_gain_pair(node_lp.objective, bounds[0], bounds[1]);
  return out;
}

void require_optimal(const lp::LpOutcome& node_lp) {
  if (node_lp.status != lp::LpStatus::kOptimal) {
    throw ContractViolation("strong branching needs an optimal node LP");
  }
}

}  // namespace

std::vector<Candidate> fractional_candidates(const model::Instance& inst,
                                             std::span<const double> primal, double tol) {
  std::vector<Candidate> out;
  for (int j = 0; j < inst.num_vars(); ++j) {
    if (!inst.is_binary(j)) continue;
    const double v = primal[j];
    if (std::min(std::abs(v), std::abs(v - 1.0)) > tol) out.push_back({j, v});
  }
  return out;
}

std::vector<CandidateGains> full_strong_gains(const lp::LpOutcome& node_lp,
                                              const lp::LpView& view,
                                              std::span<const Candidate> candidates,
                                              const lp::SimplexOptions& options) {
  require_optimal(node_lp);
  std::vector<CandidateGains> out;
  out.reserve(candidates.size());
  for (const Candidate& c : candidates) {
    out.push_back(evaluate(node_lp, view, c.var, std::nullopt, options));
  }
  return out;
}

std::vector<CandidateGains> reliability_gains(const lp::LpOutcome& node_lp,
                                              const lp::LpView& view,
                                              std::span<const Candidate> candidates,
                                              PseudocostStore& store,
                                              const ReliabilityParams& params, double epsilon,
                                              const lp::SimplexOptions& options) {
  require_optimal(node_lp);
  const std::size_t count = candidates.size();
  std::vector<CandidateGains> out(count);
  std::vector<bool> done(count, false);

  std::vector<std::size_t> unreliable;
  for (std::size_t i = 0; i < count; ++i) {
    if (!store.reliable(candidates[i].var, params.reliability)) unreliable.push_back(i);
  }
  std::stable_sort(unreliable.begin(), unreliable.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(candidates[a].value - 0.5) < std::abs(candidates[b].value - 0.5);
  });
  const std::size_t budget =
      std::min<std::size_t>(unreliable.size(), static_cast<std::size_t>(params.budget));
  for (std::size_t r = 0; r < budget; ++r) {
    const std::size_t i = unreliable[r];
    const Candidate& c = candidates[i];
    out[i] = evaluate(node_lp, view, c.var, params.iteration_cap, options);
    for (int side = 0; side < 2; ++side) {
      store.record_gain(c.var, side, c.value, out[i].gains.side(side));
    }
    done[i] = true;
  }

  for (std::size_t i = 0; i < count; ++i) {
    if (done[i]) continue;
    const Candidate& c = candidates[i];
    const double f = c.value - std::floor(c.value);
    out[i].var = c.var;
    out[i].gains = {store.estimate(c.var, 0, f, epsilon), store.estimate(c.var, 1, 1.0 - f, epsilon)};
  }
  return out;
}

}  // namespace sblab::rules
