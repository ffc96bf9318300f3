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

// Acceptance checks 1-9. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. Pass criterion numbers as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sblab/bench/campaign.hpp"
#include "sblab/bench/metrics.hpp"
#include "sblab/bench/summary.hpp"
#include "sblab/engine/leaf_log.hpp"
#include "sblab/engine/solver.hpp"
#include "sblab/engine/telemetry.hpp"
#include "sblab/generators/generators.hpp"
#include "sblab/generators/rng.hpp"
#include "sblab/rules/gains.hpp"
#include "sblab/rules/last_assignment.hpp"
#include "sblab/rules/rule_config.hpp"
#include "sblab/rules/scores.hpp"
#include "sblab/rules/selection.hpp"
#include "sblab/simplex/lp_model.hpp"
#include "sblab/simplex/simplex.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

namespace {

using sblab::engine::SolveOptions;
using sblab::engine::SolveReport;
using sblab::engine::SolveStatus;
using sblab::model::Instance;
using sblab::rules::kInfiniteGain;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first few are kept for the report line.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    Outcome o;
    o.pass = failures_ == 0;
    std::ostringstream s;
    s << summary << " (" << checks_ << " checks";
    if (failures_ > 0) s << ", " << failures_ << " failed: " << first_;
    s << ")";
    o.detail = s.str();
    return o;
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string first_;
};

std::string fmt(double v, int digits = 4) {
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << v;
  return s.str();
}

Outcome score_fidelity() {
  using namespace sblab::rules;
  Checker c;
  // Example 2 gains, clipped at an additive gap of 1.
  const EfficaciousPair qi = efficacious_clip({0.7, 0.9}, 1.0);
  const EfficaciousPair qj = efficacious_clip({0.6, kInfiniteGain}, 1.0);
  const double si = std::pow(product_score(qi.q0, qi.q1, 0.5, 0.5), 2);
  const double sj = std::pow(product_score(qj.q0, qj.q1, 0.5, 0.5), 2);
  c.expect(std::abs(si - 0.63) < 1e-12, "score(i) = " + fmt(si, 12));
  c.expect(std::abs(sj - 0.60) < 1e-12, "score(j) = " + fmt(sj, 12));
  const double ti = product_score(qi.q0, qi.q1, 0.3, 0.7);
  const double tj = product_score(qj.q0, qj.q1, 0.3, 0.7);
  c.expect(std::abs(ti - 0.834) <= 0.005, "(0.3,0.7) score(i) = " + fmt(ti));
  c.expect(std::abs(tj - 0.858) <= 0.005, "(0.3,0.7) score(j) = " + fmt(tj));

  SelectionContext ctx;
  ctx.node_bound = 0.0;
  ctx.incumbent = 1.0;
  const std::vector<ScoredGain> ex2 = {{0, {0.7, 0.9}}, {1, {0.6, kInfiniteGain}}};
  c.expect(select_variable(ex2, make_rule("eff-sb").score, ctx) == 0, "Eff-SB(0.5,0.5) picks i");
  c.expect(select_variable(ex2, make_rule("eff-sb-37").score, ctx) == 1, "Eff-SB(3,7) picks j");
  c.expect(select_variable(ex2, make_rule("def-sb").score, ctx) == 1, "Def-SB picks j");
  const std::vector<ScoredGain> ex1 = {{0, {0.6, 1.8}}, {1, {0.9, 1.0}}};
  c.expect(select_variable(ex1, make_rule("def-sb").score, ctx) == 0, "Example 1: Def-SB picks i");
  c.expect(select_variable(ex1, make_rule("eff-sb").score, ctx) == 1, "Example 1: Eff-SB picks j");
  return c.outcome("scores 0.63/0.60, (0.3,0.7) " + fmt(ti, 3) + "/" + fmt(tj, 3) +
                   ", selection flips i->j");
}

Outcome lp_oracle_equivalence() {
  Checker c;
  sblab::gen::Rng rng(20240601);
  int optimal = 0, infeasible = 0;
  const int draws = 300;
  for (int t = 0; t < draws; ++t) {
    const Instance inst = sblab::testing::random_lp(rng);
    const auto want = sblab::testing::lp_vertex_oracle(inst);
    const sblab::lp::LpView view(std::make_shared<sblab::lp::LpModel>(inst));
    const sblab::lp::LpOutcome got = sblab::lp::solve_root(view);
    if (!want.feasible) {
      ++infeasible;
      c.expect(got.status == sblab::lp::LpStatus::kInfeasible,
               "draw " + std::to_string(t) + " should be infeasible");
      continue;
    }
    ++optimal;
    const bool ok = got.status == sblab::lp::LpStatus::kOptimal &&
                    std::abs(inst.to_user(got.objective) - want.objective) <= 1e-6;
    c.expect(ok, "draw " + std::to_string(t) + " objective mismatch");
  }
  return c.outcome(std::to_string(draws) + " LPs, " + std::to_string(optimal) + " optimal, " +
                   std::to_string(infeasible) + " infeasible");
}

Outcome bb_oracle_equivalence() {
  Checker c;
  sblab::gen::Rng rng(777);
  const double kNoGap = std::numeric_limits<double>::infinity();
  int instances = 0, infeasible = 0, solves = 0;
  std::int64_t nodes = 0, max_tree = 0;
  while (instances < 70) {
    // Random models, correlated knapsacks and small multi-dimensional
    // knapsacks.
    Instance inst;
    if (instances % 5 == 4) {
      inst = sblab::gen::generate(
          {"mdk_large", static_cast<std::uint64_t>(instances), {{"n", 12}, {"m", 3}}});
    } else if (instances % 5 == 3) {
      inst = sblab::testing::correlated_knapsack(rng, 12, static_cast<int>(rng.uniform_int(1, 3)));
    } else {
      const int nb = static_cast<int>(rng.uniform_int(7, 12));
      const int nc = static_cast<int>(rng.uniform_int(0, 3));
      const int m = static_cast<int>(rng.uniform_int(3, 8));
      inst = sblab::testing::random_milp(rng, nb, nc, m, true);
    }
    const auto want = sblab::testing::milp_brute_force(inst);
    ++instances;
    if (!want.feasible) ++infeasible;
    for (const std::string& name : sblab::rules::rule_names()) {
      const auto rule = sblab::rules::make_rule(name);
      for (double gap : {0.0, 0.05, kNoGap}) {
        if (!want.feasible && !std::isinf(gap)) continue;
        SolveOptions opt;
        opt.record_telemetry = false;
        if (!std::isinf(gap)) {
          opt.init_primal = sblab::engine::init_primal_bound(want.objective, gap, inst.sense);
        }
        const SolveReport r = sblab::engine::solve(inst, rule, opt);
        ++solves;
        nodes += r.tree_size;
        if (std::isinf(gap)) max_tree = std::max(max_tree, r.tree_size);
        const std::string tag = "instance " + std::to_string(instances) + " " + name + " gap " +
                                (std::isinf(gap) ? "none" : fmt(gap, 2));
        if (!want.feasible) {
          c.expect(r.status == SolveStatus::kInfeasible, tag + " should be infeasible");
          continue;
        }
        c.expect(r.status == SolveStatus::kOptimal && std::abs(r.user_primal() - want.objective) <= 1e-6,
                 tag + " got " + fmt(r.user_primal(), 6) + " want " + fmt(want.objective, 6));
      }
    }
  }
  return c.outcome(std::to_string(instances) + " MILPs (" + std::to_string(infeasible) +
                   " infeasible), 13 rules, " + std::to_string(solves) + " solves, mean tree " +
                   fmt(static_cast<double>(nodes) / solves, 1) +
                   ", largest " + std::to_string(max_tree));
}

// Node-for-node comparison: same tree size and the same branching sequence.
bool same_tree(const SolveReport& a, const SolveReport& b) {
  return a.tree_size == b.tree_size && a.status == b.status &&
         sblab::engine::telemetry_csv(a.telemetry) == sblab::engine::telemetry_csv(b.telemetry);
}

Outcome def_eff_reduction() {
  Checker c;
  sblab::gen::Rng rng(4242);
  const auto def = sblab::rules::make_rule("def-sb");
  const auto eff = sblab::rules::make_rule("eff-sb");
  int compared = 0;
  std::int64_t nodes = 0;
  // Integer-infeasible models: no incumbent ever exists, so the additive gap
  // stays infinite at every node.
  for (int t = 0; t < 400 && compared < 25; ++t) {
    const Instance inst = sblab::testing::parity_infeasible(rng, static_cast<int>(rng.uniform_int(6, 12)));
    const SolveReport a = sblab::engine::solve(inst, def);
    if (a.tree_size < 3) continue;
    const SolveReport b = sblab::engine::solve(inst, eff);
    ++compared;
    nodes += a.tree_size;
    c.expect(a.incumbent.source == sblab::engine::IncumbentSource::kNone, "unexpected incumbent");
    c.expect(same_tree(a, b), "trees differ on draw " + std::to_string(t));
  }
  c.expect(compared >= 20, "only " + std::to_string(compared) + " instances compared");

  // Feasible models, for information: identical until an incumbent appears,
  // after which the clipped scores may diverge.
  int feasible_same = 0, feasible_total = 0;
  for (int t = 0; t < 20; ++t) {
    const Instance inst = sblab::testing::random_milp(rng, 10, 1, 5);
    const SolveReport a = sblab::engine::solve(inst, def);
    if (a.tree_size < 3) continue;
    ++feasible_total;
    feasible_same += same_tree(a, sblab::engine::solve(inst, eff));
  }
  return c.outcome(std::to_string(compared) + " incumbent-free instances identical, mean tree " +
                   fmt(compared ? static_cast<double>(nodes) / compared : 0.0, 1) +
                   "; feasible instances identical " + std::to_string(feasible_same) + "/" +
                   std::to_string(feasible_total));
}

Outcome rb_degeneration() {
  Checker c;
  sblab::gen::Rng rng(9001);
  const std::string degenerate = ":reliability=1e18,sb_budget=1e9,sb_iteration_cap=-1";
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"def-rb" + degenerate, "def-sb"}, {"eff-rb-37" + degenerate, "eff-sb-37"}};
  std::vector<Instance> instances;
  while (instances.size() < 12) {
    const Instance inst = sblab::testing::random_milp(rng, 12, 2, 6);
    if (sblab::engine::solve(inst, sblab::rules::make_rule("def-sb")).tree_size >= 5) {
      instances.push_back(inst);
    }
  }
  instances.push_back(sblab::gen::generate({"mdk_large", 1, {{"n", 30}, {"m", 10}}}));
  instances.push_back(sblab::gen::generate({"set_packing", 1, {{"n", 40}, {"m", 80}}}));
  instances.push_back(sblab::gen::generate({"cflp", 1, {{"customers", 8}, {"facilities", 6}}}));
  std::int64_t nodes = 0;
  for (const Instance& inst : instances) {
    for (const auto& [rb, fsb] : pairs) {
      const SolveReport a = sblab::engine::solve(inst, sblab::rules::parse_rule(rb));
      const SolveReport b = sblab::engine::solve(inst, sblab::rules::parse_rule(fsb));
      nodes += b.tree_size;
      c.expect(same_tree(a, b), inst.name + " " + fsb + " trees differ (" +
                                    std::to_string(a.tree_size) + " vs " +
                                    std::to_string(b.tree_size) + ")");
    }
  }
  return c.outcome(std::to_string(instances.size()) + " instances x 2 rule pairs identical, " +
                   std::to_string(nodes) + " FSB nodes");
}

Outcome algorithm1_conformance() {
  using namespace sblab::rules;
  Checker c;
  sblab::gen::Rng rng(61);
  for (int t = 0; t < 5000; ++t) {
    sblab::engine::LeafLog log;
    log.n0_ii = rng.uniform_int(0, 60);
    log.n1_ii = rng.uniform_int(0, 60);
    log.n0_all = log.n0_ii + rng.uniform_int(0, 200);
    log.n1_all = log.n1_ii + rng.uniform_int(0, 200);
    log.total_ii = log.n0_ii + log.n1_ii;
    log.total_leaves = log.n0_all + log.n1_all + rng.uniform_int(0, 3);  // root leaves
    ScoreParams p;
    p.eta = rng.uniform(0.0, 0.5);
    p.k_i = static_cast<int>(rng.uniform_int(1, 80));
    for (LaMode mode : {LaMode::kLastAssignment, LaMode::kRebalanced, pa_select_mode(log, p)}) {
      const Exponents e = last_assignment_exponents(log, p, mode);
      const bool la = mode == LaMode::kLastAssignment;
      const std::int64_t gate = la ? log.total_ii : log.total_leaves;
      const std::string tag = "draw " + std::to_string(t);
      if (gate < p.k_i) {
        c.expect(e.a0 == 0.0 && e.a1 == 0.0, tag + " gate not respected");
        continue;
      }
      c.expect(e.a0 >= 0.0 && e.a0 <= p.eta && e.a1 >= 0.0 && e.a1 <= p.eta, tag + " range");
      c.expect(e.a0 * e.a1 == 0.0, tag + " a0*a1 != 0");
      const double n0 = static_cast<double>(la ? log.n0_ii : log.n0_all);
      const double n1 = static_cast<double>(la ? log.n1_ii : log.n1_all);
      if (n0 + n1 > 0) {
        const double a = (n0 - n1) / (n0 + n1);
        const double want0 = a > 0 ? 0.0 : -p.eta * a;
        const double want1 = a > 0 ? p.eta * a : 0.0;
        c.expect(std::abs(e.a0 - want0) < 1e-15 && std::abs(e.a1 - want1) < 1e-15,
                 tag + " value");
      }
    }
  }
  sblab::engine::LeafLog log;
  log.n0_ii = log.n0_all = 30;
  log.n1_ii = log.n1_all = 10;
  log.total_ii = log.total_leaves = 40;
  const Exponents e = last_assignment_exponents(log, ScoreParams{}, LaMode::kLastAssignment);
  c.expect(e.a0 == 0.0 && std::abs(e.a1 - 0.075) < 1e-15, "(30,10,0.15) gave (" + fmt(e.a0) +
                                                              "," + fmt(e.a1) + ")");
  return c.outcome("5000 random leaf logs x 3 modes; (30,10,0.15) -> (0, 0.075)");
}

struct FamilyResult {
  std::map<std::string, std::vector<double>> trees;
  std::map<std::string, int> solved;
};

FamilyResult run_family(const std::string& kind, const std::map<std::string, double>& dims,
                        const std::vector<std::string>& rules) {
  FamilyResult out;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Instance inst = sblab::gen::generate({kind, seed, dims});
    SolveOptions boot;
    boot.node_limit = 1000000;
    boot.record_telemetry = false;
    const SolveReport ref = sblab::engine::solve(inst, sblab::rules::make_rule("def-sb"), boot);
    if (ref.status != SolveStatus::kOptimal) continue;
    for (const std::string& rule : rules) {
      SolveOptions opt;
      opt.node_limit = 50000;
      opt.record_telemetry = false;
      opt.init_primal = sblab::engine::init_primal_bound(ref.user_primal(), 0.0, inst.sense);
      const SolveReport r = sblab::engine::solve(inst, sblab::rules::make_rule(rule), opt);
      out.trees[rule].push_back(static_cast<double>(r.tree_size));
      out.solved[rule] += r.status == SolveStatus::kOptimal;
    }
  }
  return out;
}

Outcome desk_scale_direction() {
  Checker c;
  using sblab::bench::kTreeShift;
  using sblab::bench::shifted_geomean;
  const FamilyResult pack =
      run_family("set_packing", {{"n", 100}, {"m", 250}}, {"def-sb", "eff-sb-37"});
  const FamilyResult knap =
      run_family("mdk_large", {{"n", 50}, {"m", 25}}, {"eff-sb-37", "la-sb"});
  c.expect(pack.trees.count("def-sb") && pack.trees.at("def-sb").size() == 5,
           "set packing reference solves incomplete");
  c.expect(knap.trees.count("la-sb") && knap.trees.at("la-sb").size() == 5,
           "knapsack reference solves incomplete");
  if (!pack.trees.count("def-sb") || !knap.trees.count("la-sb")) return c.outcome("no data");

  const double p_def = shifted_geomean(pack.trees.at("def-sb"), kTreeShift);
  const double p_eff = shifted_geomean(pack.trees.at("eff-sb-37"), kTreeShift);
  const double k_eff = shifted_geomean(knap.trees.at("eff-sb-37"), kTreeShift);
  const double k_la = shifted_geomean(knap.trees.at("la-sb"), kTreeShift);
  c.expect(p_eff <= p_def, "set packing: Eff-SB(3,7) " + fmt(p_eff, 1) + " > Def-SB " +
                               fmt(p_def, 1));
  c.expect(k_la <= k_eff, "knapsack: LA-SB " + fmt(k_la, 1) + " > Eff-SB(3,7) " + fmt(k_eff, 1));
  std::ostringstream s;
  s << "set packing sgm Def-SB " << fmt(p_def, 1) << " vs Eff-SB(3,7) " << fmt(p_eff, 1) << " ("
    << fmt(sblab::bench::pct_reduction(p_def, p_eff), 1) << "% reduction, solved "
    << pack.solved.at("def-sb") << "/" << pack.solved.at("eff-sb-37") << "); mdk_large Eff-SB(3,7) "
    << fmt(k_eff, 1) << " vs LA-SB " << fmt(k_la, 1) << " ("
    << fmt(sblab::bench::pct_reduction(k_eff, k_la), 1) << "% reduction, solved "
    << knap.solved.at("eff-sb-37") << "/" << knap.solved.at("la-sb") << ")";
  return c.outcome(s.str());
}

Outcome metric_fidelity() {
  using namespace sblab::bench;
  Checker c;
  const std::vector<double> a = {100, 300};
  c.expect(std::abs(shifted_geomean(a, 100) - (std::sqrt(80000.0) - 100)) <= 1e-9, "[100,300]");
  for (double x : {0.0, 7.0, 4149.0}) {
    const std::vector<double> one = {x};
    c.expect(std::abs(shifted_geomean(one, 100) - x) <= 1e-9, "singleton " + fmt(x, 0));
    c.expect(std::abs(shifted_geomean(one, 0.01) - x) <= 1e-9, "singleton gap " + fmt(x, 0));
  }
  const std::vector<double> zeros = {0, 0};
  c.expect(std::abs(shifted_geomean(zeros, 100)) <= 1e-9, "[0,0]");
  const double red = pct_reduction(4149, 3596);
  c.expect(fmt(red, 1) == "13.3", "pct_reduction gave " + fmt(red, 3));
  const std::vector<ResultRow> rows = {{"f-1", "def-sb", 0.0, 0, "optimal", 4149, 0.0, 0.0},
                                       {"f-1", "eff-sb-37", 0.0, 0, "optimal", 3596, 0.0, 0.0}};
  const std::string md = summary_markdown(parse_results_csv(results_csv(rows)), "def-sb");
  c.expect(md.find("13.3%") != std::string::npos, "summary table lacks 13.3%");
  return c.outcome("shifted geomean closed forms, (4149, 3596) -> " + fmt(red, 1) + "%");
}

Outcome determinism() {
  Checker c;
  sblab::gen::Rng rng(5150);
  std::vector<Instance> instances;
  for (int i = 0; i < 3; ++i) instances.push_back(sblab::testing::random_milp(rng, 12, 2, 6));
  instances.push_back(sblab::gen::generate({"portfolio_ccp", 2, {{"n", 6}, {"m", 14}, {"k", 4}}}));
  instances.push_back(sblab::gen::generate({"lotsizing", 2, {{"n", 8}}}));
  int runs = 0;
  for (const Instance& inst : instances) {
    const SolveReport ref = sblab::engine::solve(inst, sblab::rules::make_rule("def-sb"));
    if (ref.status != SolveStatus::kOptimal) continue;
    for (const std::string& rule : sblab::rules::rule_names()) {
      for (double gap : {0.0, 0.05, std::numeric_limits<double>::infinity()}) {
        SolveOptions opt;
        opt.seed = 3;
        if (!std::isinf(gap)) {
          opt.init_primal = sblab::engine::init_primal_bound(ref.user_primal(), gap, inst.sense);
        }
        const auto rc = sblab::rules::make_rule(rule);
        const SolveReport a = sblab::engine::solve(inst, rc, opt);
        const SolveReport b = sblab::engine::solve(inst, rc, opt);
        ++runs;
        c.expect(sblab::engine::report_json(a, true) == sblab::engine::report_json(b, true) &&
                     sblab::engine::telemetry_csv(a.telemetry) ==
                         sblab::engine::telemetry_csv(b.telemetry),
                 inst.name + " " + rule + " differs");
      }
    }
  }
  sblab::bench::Campaign camp;
  camp.instances.push_back({"", sblab::gen::GenSpec{"mdk_small", 5, {{"n", 20}, {"m", 5}}}});
  camp.instances.push_back({"", sblab::gen::GenSpec{"set_covering", 5, {{"n", 30}, {"m", 60}}}});
  camp.rules = {"def-sb", "pala-sb", "eff-rb-37"};
  camp.primal_gaps = {0.0, 0.05, std::numeric_limits<double>::infinity()};
  camp.seeds = {0, 1};
  camp.record_wall_time = false;
  const std::string csv1 = sblab::bench::results_csv(sblab::bench::run_campaign(camp, 1).rows);
  const std::string csv2 = sblab::bench::results_csv(sblab::bench::run_campaign(camp, 2).rows);
  c.expect(csv1 == csv2, "campaign CSV differs between runs");
  return c.outcome(std::to_string(runs) + " paired solves byte-identical; campaign CSV identical");
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "score formulas", score_fidelity},
      {2, "LP oracle equivalence", lp_oracle_equivalence},
      {3, "B&B oracle equivalence", bb_oracle_equivalence},
      {4, "Def/Eff reduction", def_eff_reduction},
      {5, "RB degeneration", rb_degeneration},
      {6, "last-assignment exponents", algorithm1_conformance},
      {7, "desk-scale direction", desk_scale_direction},
      {8, "metric fidelity", metric_fidelity},
      {9, "determinism", determinism},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const Criterion& cr : all) {
    if (!wanted.empty() && !wanted.count(cr.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("%s criterion %d (%s): %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", cr.id,
                cr.title.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
