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

#include <benchmark/benchmark.h>

#include <memory>
#include <string>
#include <vector>

#include "sblab/engine/solver.hpp"
#include "sblab/generators/generators.hpp"
#include "sblab/generators/rng.hpp"
#include "sblab/rules/rule_config.hpp"
#include "sblab/rules/scores.hpp"
#include "sblab/rules/selection.hpp"
#include "sblab/simplex/lp_model.hpp"
#include "sblab/simplex/simplex.hpp"

namespace {

using sblab::gen::GenSpec;

const std::vector<GenSpec>& root_specs() {
  static const std::vector<GenSpec> specs = {
      {"mdk_large", 1, {}},
      {"set_packing", 1, {{"n", 100}, {"m", 250}}},
      {"cflp", 1, {{"customers", 30}, {"facilities", 20}}},
      {"set_covering", 1, {}},
  };
  return specs;
}

void BM_RootLp(benchmark::State& state) {
  const GenSpec& spec = root_specs()[state.range(0)];
  const auto inst = sblab::gen::generate(spec);
  const sblab::lp::LpView view(std::make_shared<sblab::lp::LpModel>(inst));
  std::int64_t iterations = 0;
  for (auto _ : state) {
    const auto r = sblab::lp::solve_root(view);
    iterations = r.iterations;
    benchmark::DoNotOptimize(r.objective);
  }
  state.SetLabel(spec.kind);
  state.counters["lp_iters"] = static_cast<double>(iterations);
}
BENCHMARK(BM_RootLp)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_StrongBranchChild(benchmark::State& state) {
  const auto inst = sblab::gen::generate({"set_packing", 2, {{"n", 100}, {"m", 250}}});
  const sblab::lp::LpView view(std::make_shared<sblab::lp::LpModel>(inst));
  const auto root = sblab::lp::solve_root(view);
  int var = 0;
  for (int j = 0; j < inst.num_vars(); ++j) {
    if (root.primal[j] > 1e-6 && root.primal[j] < 1 - 1e-6) var = j;
  }
  for (auto _ : state) {
    auto r = sblab::lp::resolve_bound_change(root, view, var, {1, 1});
    benchmark::DoNotOptimize(r.dual_bound);
  }
}
BENCHMARK(BM_StrongBranchChild)->Unit(benchmark::kMicrosecond);

void BM_ProductScore(benchmark::State& state) {
  double q0 = 0.7, q1 = 0.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sblab::rules::product_score(q0, q1, 0.3, 0.7));
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_ProductScore);

void BM_AsymmetricScore(benchmark::State& state) {
  double q0 = 0.5, q1 = 0.8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sblab::rules::asymmetric_score(q0, q1, 0.0, 0.075, 0.3, 0.7));
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_AsymmetricScore);

void BM_SelectVariable(benchmark::State& state) {
  sblab::gen::Rng rng(1);
  std::vector<sblab::rules::ScoredGain> gains;
  for (int i = 0; i < state.range(0); ++i) {
    gains.push_back({i, {rng.uniform(0, 3), rng.uniform(0, 3)}});
  }
  const auto rule = sblab::rules::make_rule("eff-sb-37");
  sblab::rules::SelectionContext ctx;
  ctx.incumbent = 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sblab::rules::select_variable(gains, rule.score, ctx));
  }
}
BENCHMARK(BM_SelectVariable)->Range(8, 512);

void BM_SolveSmall(benchmark::State& state) {
  const std::string rule = sblab::rules::rule_names()[state.range(0)];
  const auto inst = sblab::gen::generate({"mdk_large", 3, {{"n", 30}, {"m", 10}}});
  sblab::engine::SolveOptions opt;
  opt.record_telemetry = false;
  std::int64_t nodes = 0;
  for (auto _ : state) {
    const auto r = sblab::engine::solve(inst, sblab::rules::make_rule(rule), opt);
    nodes = r.tree_size;
  }
  state.SetLabel(rule);
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SolveSmall)->DenseRange(0, 12)->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State& state) {
  const std::string kind = sblab::gen::generator_kinds()[state.range(0)];
  for (auto _ : state) {
    auto inst = sblab::gen::generate({kind, 1, {}});
    benchmark::DoNotOptimize(inst.rows.data());
  }
  state.SetLabel(kind);
}
BENCHMARK(BM_Generate)->DenseRange(0, 13)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
