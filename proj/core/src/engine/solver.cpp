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

#include "sblab/engine/solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include "json.hpp"
#include <utility>

#include "sblab/errors.hpp"
#include "sblab/rules/brancher.hpp"

namespace sblab::engine {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kNodeLimit:
      return "node_limit";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kError:
      return "error";
  }
  return "?";
}

std::string_view to_string(IncumbentSource source) {
  switch (source) {
    case IncumbentSource::kNone:
      return "none";
    case IncumbentSource::kInitial:
      return "initial";
    case IncumbentSource::kDiscovered:
      return "discovered";
  }
  return "?";
}

double SolveReport::user_value(double minimization_value) const {
  return sense == model::Sense::kMaximize ? -minimization_value : minimization_value;
}

double init_primal_bound(double z_star, double gap, model::Sense sense, std::string* warning) {
  if (!std::isfinite(z_star)) throw ContractViolation("init_primal_bound: z* must be finite");
  if (!(gap >= 0.0)) throw ContractViolation("init_primal_bound: gap must be nonnegative");
  if (z_star == 0.0 && gap > 0.0 && warning != nullptr) {
    *warning = "relative primal gap is undefined at z* = 0; using z*";
  }
  const double shift = gap * std::abs(z_star);
  return sense == model::Sense::kMinimize ? z_star + shift : z_star - shift;
}

double prune_tolerance(double z) {
  if (!std::isfinite(z)) return 0.0;
  return 1e-6 * std::max(1.0, std::abs(z));
}

namespace {

constexpr double kIntegralityTol = 1e-6;

struct Node {
  std::int64_t id = 0;
  int depth = 0;
  double bound = 0.0;
  std::optional<BranchTag> last_branch;
  std::vector<BranchTag> fixings;
  lp::LpOutcome lp;
};

using FrontierKey = std::pair<double, std::int64_t>;

class Search {
 public:
  Search(const model::Instance& inst, const rules::RuleConfig& rule, const SolveOptions& opt)
      : inst_(inst),
        opt_(opt),
        model_(std::make_shared<const lp::LpModel>(inst)),
        base_view_(model_),
        brancher_(rule, inst, opt.simplex) {
    report_.instance = inst.name;
    report_.rule = rule.name;
    report_.sense = inst.sense;
    if (opt.init_primal) {
      report_.incumbent.bound = inst.to_canonical(*opt.init_primal);
      report_.incumbent.source = IncumbentSource::kInitial;
    }
  }

  SolveReport run() {
    try {
      search();
    } catch (const NumericalFailure& e) {
      report_.status = SolveStatus::kError;
      report_.diagnostic = e.what();
      report_.dual_bound = -model::kInf;
    }
    finish_gap();
    return std::move(report_);
  }

 private:
  double incumbent() const { return report_.incumbent.bound; }

  bool prunable(double bound) const {
    return bound >= incumbent() - prune_tolerance(incumbent());
  }

  lp::LpView view_for(const Node& node) const {
    lp::LpView view(base_view_);
    for (const BranchTag& f : node.fixings) {
      view.set_bounds(f.var, {static_cast<double>(f.side), static_cast<double>(f.side)});
    }
    return view;
  }

  void count_lp(const lp::LpOutcome& out) { report_.lp_iterations += out.iterations; }

  void search() {
    report_.tree_size = 1;
    lp::LpOutcome root_lp = lp::solve_root(base_view_, opt_.simplex);
    count_lp(root_lp);
    if (root_lp.status == lp::LpStatus::kUnbounded) {
      throw NumericalFailure("LP relaxation at the root is unbounded");
    }
    if (root_lp.status == lp::LpStatus::kInfeasible) {
      record_leaf(report_.leaves, std::nullopt, LeafReason::kInfeasible);
      report_.root_bound = model::kInf;
      report_.dual_bound = model::kInf;
      report_.status = SolveStatus::kInfeasible;
      return;
    }
    report_.root_bound = root_lp.objective;
    Node root;
    root.id = next_id_++;
    root.bound = root_lp.objective;
    root.lp = std::move(root_lp);
    root.lp.basis.drop_factorization();
    push(std::move(root));

    while (!frontier_.empty()) {
      auto it = frontier_.begin();
      Node node = std::move(it->second);
      frontier_.erase(it);

      if (prunable(node.bound)) {
        record_leaf(report_.leaves, node.last_branch, LeafReason::kBoundPruned);
        continue;
      }
      if (is_integral(node.lp.primal)) {
        accept_solution(node);
        record_leaf(report_.leaves, node.last_branch, LeafReason::kIntegral);
        prune_frontier();
        continue;
      }
      if (report_.tree_size + 2 > opt_.node_limit) {
        const double bound = node.bound;
        push(std::move(node));
        report_.status = SolveStatus::kNodeLimit;
        report_.dual_bound = std::min(bound, incumbent());
        return;
      }
      branch(std::move(node));
    }

    if (report_.incumbent.source == IncumbentSource::kNone) {
      report_.status = SolveStatus::kInfeasible;
      report_.dual_bound = model::kInf;
    } else {
      // With only an initial bound, exhausting the tree proves that nothing
      // beats it; the bound is then taken as the optimal value.
      report_.status = SolveStatus::kOptimal;
      report_.dual_bound = incumbent();
    }
  }

  bool is_integral(const std::vector<double>& x) const {
    for (int j = 0; j < inst_.num_vars(); ++j) {
      if (!inst_.is_binary(j)) continue;
      if (std::min(std::abs(x[j]), std::abs(x[j] - 1.0)) > kIntegralityTol) return false;
    }
    return true;
  }

  void accept_solution(const Node& node) {
    model::Assignment a{node.lp.primal};
    for (int j = 0; j < inst_.num_vars(); ++j) {
      if (!inst_.is_binary(j)) continue;
      const double r = std::round(a.values[j]) + 0.0;  // no -0
      if (std::abs(a.values[j] - r) <= 1e-9) a.values[j] = r;
    }
    const model::SolutionCheck check = model::check_solution(inst_, a);
    if (!check.feasible) {
      throw NumericalFailure("integral LP solution violates the model by " +
                             std::to_string(check.worst_violation));
    }
    const double value = inst_.to_canonical(check.objective);
    if (value >= incumbent()) return;
    report_.incumbent.bound = value;
    report_.incumbent.solution = std::move(a);
    report_.incumbent.source = IncumbentSource::kDiscovered;
  }

  void prune_frontier() {
    const double cutoff = incumbent() - prune_tolerance(incumbent());
    auto first = frontier_.lower_bound({cutoff, std::numeric_limits<std::int64_t>::min()});
    for (auto it = first; it != frontier_.end(); ++it) {
      record_leaf(report_.leaves, it->second.last_branch, LeafReason::kBoundPruned);
    }
    frontier_.erase(first, frontier_.end());
  }

  void push(Node node) {
    const FrontierKey key{node.bound, node.id};
    frontier_.emplace(key, std::move(node));
  }

  void branch(Node node) {
    const rules::ScoreParams& params = brancher_.rule().score;
    if (report_.branchings % params.update_period == 0) brancher_.refresh(report_.leaves);

    const lp::LpView view = view_for(node);
    lp::attach_factorization(node.lp, view, opt_.simplex);

    rules::BranchContext ctx;
    ctx.view = &view;
    ctx.lp = &node.lp;
    ctx.incumbent = incumbent();
    ctx.prune_tol = prune_tolerance(incumbent());
    rules::BranchDecision decision = brancher_.choose(ctx);

    if (opt_.record_telemetry) {
      report_.telemetry.push_back({node.id, node.depth, inst_.to_user(node.bound), decision.var,
                                   decision.num_candidates, decision.exponents.a0,
                                   decision.exponents.a1});
    }
    ++report_.branchings;
    report_.tree_size += 2;

    for (int side = 0; side < 2; ++side) {
      lp::LpOutcome child_lp;
      if (decision.children[side]) {
        child_lp = std::move(*decision.children[side]);
      } else {
        const double v = side;
        child_lp = lp::resolve_bound_change(node.lp, view, decision.var, {v, v}, std::nullopt,
                                            opt_.simplex);
        brancher_.observe_child(decision.var, side, decision.value, node.bound, child_lp);
      }
      count_lp(child_lp);
      const BranchTag tag{decision.var, side};
      if (child_lp.status == lp::LpStatus::kUnbounded) {
        throw NumericalFailure("child LP relaxation is unbounded");
      }
      if (child_lp.status != lp::LpStatus::kOptimal) {
        record_leaf(report_.leaves, tag, LeafReason::kInfeasible);
        continue;
      }
      Node child;
      child.id = next_id_++;
      child.depth = node.depth + 1;
      child.bound = std::max(child_lp.objective, node.bound);
      child.last_branch = tag;
      child.fixings = node.fixings;
      child.fixings.push_back(tag);
      child.lp = std::move(child_lp);
      child.lp.basis.drop_factorization();
      push(std::move(child));
    }
  }

  void finish_gap() {
    SolveReport& r = report_;
    if (r.status == SolveStatus::kOptimal || r.status == SolveStatus::kInfeasible) {
      r.gap_remaining = 0.0;
      return;
    }
    const double denom = std::abs(r.incumbent.bound - r.root_bound);
    if (!std::isfinite(r.incumbent.bound) || !std::isfinite(r.dual_bound) || !(denom > 0.0)) {
      r.gap_remaining = 1.0;
      return;
    }
    r.gap_remaining = std::clamp((r.incumbent.bound - r.dual_bound) / denom, 0.0, 1.0);
  }

  const model::Instance& inst_;
  SolveOptions opt_;
  std::shared_ptr<const lp::LpModel> model_;
  lp::LpView base_view_;
  rules::Brancher brancher_;
  std::map<FrontierKey, Node> frontier_;
  std::int64_t next_id_ = 0;
  SolveReport report_;
};

}  // namespace

SolveReport solve(const model::Instance& inst, const rules::RuleConfig& rule,
                  const SolveOptions& options) {
  if (options.node_limit < 1) throw ContractViolation("node_limit must be at least 1");
  model::validate(inst);
  Search search(inst, rule, options);
  return search.run();
}

SolveReport solve(const model::Instance& inst, const rules::RuleConfig& rule,
                  std::optional<double> init_primal, std::int64_t node_limit,
                  std::uint64_t seed) {
  SolveOptions options;
  options.init_primal = init_primal;
  options.node_limit = node_limit;
  options.seed = seed;
  return solve(inst, rule, options);
}

namespace {

nlohmann::ordered_json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

std::string report_json(const SolveReport& r, bool with_telemetry) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance;
  j["rule"] = r.rule;
  j["sense"] = std::string(model::to_string(r.sense));
  j["status"] = std::string(to_string(r.status));
  j["tree_size"] = r.tree_size;
  j["branchings"] = r.branchings;
  j["primal_bound"] = number_or_null(r.user_primal());
  j["dual_bound"] = number_or_null(r.user_dual());
  j["root_bound"] = number_or_null(r.user_root());
  j["gap_remaining"] = r.gap_remaining;
  j["incumbent_source"] = std::string(to_string(r.incumbent.source));
  if (r.incumbent.solution) {
    j["solution"] = r.incumbent.solution->values;
  } else {
    j["solution"] = nullptr;
  }
  const LeafLog& l = r.leaves;
  j["leaves"] = {{"total", l.total_leaves},   {"integral_or_infeasible", l.total_ii},
                 {"infeasible", l.infeasible}, {"integral", l.integral},
                 {"bound_pruned", l.bound_pruned}, {"n0_ii", l.n0_ii},
                 {"n1_ii", l.n1_ii},           {"n0_all", l.n0_all},
                 {"n1_all", l.n1_all}};
  j["lp_iterations"] = r.lp_iterations;
  j["diagnostic"] = r.diagnostic;
  if (with_telemetry) j["telemetry_csv"] = telemetry_csv(r.telemetry);
  return j.dump(2);
}

}  // namespace sblab::engine
