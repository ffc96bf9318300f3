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

#include <gtest/gtest.h>

#include <cmath>
#include <memory>

#include "sblab/errors.hpp"
#include "sblab/simplex/lp_model.hpp"
#include "sblab/simplex/simplex.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

namespace sblab::lp {
namespace {

using model::Instance;

LpView view_of(const Instance& inst) { return LpView(std::make_shared<LpModel>(inst)); }

TEST(SolveRoot, KnapsackRelaxation) {
  const Instance inst = testing::knapsack3_lp();
  const LpOutcome r = solve_root(view_of(inst));
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  // Minimization sense: -32/3.
  EXPECT_NEAR(r.objective, -32.0 / 3.0, 1e-9);
  EXPECT_NEAR(r.primal[0], 1.0, 1e-9);
  EXPECT_NEAR(r.primal[1], 2.0 / 3.0, 1e-9);
  EXPECT_NEAR(r.primal[2], 1.0, 1e-9);
  EXPECT_FALSE(r.basis.empty());
}

TEST(SolveRoot, ContradictoryOverlayIsInfeasible) {
  Instance inst = testing::knapsack3_lp();
  inst.rows.push_back(model::Row{{0}, {1}, model::Relation::kLessEqual, 0});
  LpView view = view_of(inst);
  view.set_bounds(0, {1, 1});
  EXPECT_EQ(solve_root(view).status, LpStatus::kInfeasible);
}

TEST(SolveRoot, EmptyRowSetPicksCorner) {
  Instance inst;
  inst.objective = {2, -3, 0.5};
  inst.bounds = {{-1, 4}, {0, 2}, {1, 3}};
  inst.var_kind.assign(3, model::VarKind::kContinuous);
  const LpOutcome r = solve_root(view_of(inst));
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, -2 - 6 + 0.5, 1e-12);
  EXPECT_DOUBLE_EQ(r.primal[0], -1);
  EXPECT_DOUBLE_EQ(r.primal[1], 2);
  EXPECT_DOUBLE_EQ(r.primal[2], 1);
}

TEST(SolveRoot, Unbounded) {
  Instance inst;
  inst.objective = {-1, 0};
  inst.bounds = {{0, model::kInf}, {0, 1}};
  inst.var_kind.assign(2, model::VarKind::kContinuous);
  inst.rows.push_back(model::Row{{0, 1}, {1, -1}, model::Relation::kGreaterEqual, 0});
  EXPECT_EQ(solve_root(view_of(inst)).status, LpStatus::kUnbounded);
}

TEST(ResolveBoundChange, KnapsackChildren) {
  const Instance inst = testing::knapsack3_lp();
  const LpView view = view_of(inst);
  const LpOutcome root = solve_root(view);
  const LpOutcome down = resolve_bound_change(root, view, 1, {0, 0});
  ASSERT_EQ(down.status, LpStatus::kOptimal);
  EXPECT_NEAR(down.objective, -8.0, 1e-9);
  EXPECT_NEAR(down.objective - root.objective, 8.0 / 3.0, 1e-9);
  const LpOutcome up = resolve_bound_change(root, view, 1, {1, 1});
  ASSERT_EQ(up.status, LpStatus::kOptimal);
  EXPECT_NEAR(up.objective, -9.5, 1e-9);
  EXPECT_NEAR(up.objective - root.objective, 7.0 / 6.0, 1e-9);

  // Independent from-scratch solves agree.
  LpView fixed = view;
  fixed.set_bounds(1, {0, 0});
  EXPECT_NEAR(solve_root(fixed).objective, down.objective, 1e-9);
  fixed.set_bounds(1, {1, 1});
  EXPECT_NEAR(solve_root(fixed).objective, up.objective, 1e-9);
}

TEST(ResolveBoundChange, ZeroIterationCap) {
  const Instance inst = testing::knapsack3_lp();
  const LpView view = view_of(inst);
  const LpOutcome root = solve_root(view);
  const LpOutcome r = resolve_bound_change(root, view, 1, {0, 0}, 0);
  EXPECT_EQ(r.status, LpStatus::kIterationLimit);
  EXPECT_NEAR(r.dual_bound, root.objective, 1e-12);
}

TEST(ResolveBoundChange, RequiresOptimalParent) {
  Instance inst = testing::knapsack3_lp();
  inst.rows.push_back(model::Row{{0}, {1}, model::Relation::kGreaterEqual, 2});
  const LpView view = view_of(inst);
  const LpOutcome root = solve_root(view);
  ASSERT_EQ(root.status, LpStatus::kInfeasible);
  EXPECT_THROW(resolve_bound_change(root, view, 0, {0, 0}), ContractViolation);
}

TEST(ResolveBoundChange, DroppedFactorizationStillWarmStarts) {
  const Instance inst = testing::knapsack3_lp();
  const LpView view = view_of(inst);
  LpOutcome root = solve_root(view);
  root.basis.drop_factorization();
  attach_factorization(root, view);
  EXPECT_NEAR(resolve_bound_change(root, view, 1, {0, 0}).objective, -8.0, 1e-9);
}

TEST(Simplex, MatchesVertexOracleOnRandomLps) {
  gen::Rng rng(2024);
  for (int t = 0; t < 150; ++t) {
    const Instance inst = testing::random_lp(rng);
    const testing::OracleResult want = testing::lp_vertex_oracle(inst);
    const LpOutcome got = solve_root(view_of(inst));
    if (!want.feasible) {
      EXPECT_EQ(got.status, LpStatus::kInfeasible) << "draw " << t;
      continue;
    }
    ASSERT_EQ(got.status, LpStatus::kOptimal) << "draw " << t;
    EXPECT_NEAR(inst.to_user(got.objective), want.objective, 1e-6) << "draw " << t;
  }
}

// Capped dual bounds never exceed the true optimum; tightening never lowers it.
TEST(Simplex, BoundValidityAndMonotonicity) {
  gen::Rng rng(77);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    const Instance inst = testing::random_lp(rng);
    const LpView view = view_of(inst);
    const LpOutcome root = solve_root(view);
    if (root.status != LpStatus::kOptimal) continue;
    const int j = static_cast<int>(rng.uniform_int(0, inst.num_vars() - 1));
    const model::Bounds b = view.bounds(j);
    const double mid = 0.5 * (b.lower + b.upper);
    for (model::Bounds nb : {model::Bounds{b.lower, mid}, model::Bounds{mid, b.upper}}) {
      const LpOutcome full = resolve_bound_change(root, view, j, nb);
      if (full.status == LpStatus::kOptimal) {
        EXPECT_GE(full.objective, root.objective - 1e-9);
      }
      for (std::int64_t cap : {0, 1, 2, 3}) {
        const LpOutcome capped = resolve_bound_change(root, view, j, nb, cap);
        EXPECT_LE(capped.dual_bound, full.dual_bound + 1e-9);
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace sblab::lp
