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

#include "support/instances.hpp"

#include <cmath>
#include <string>

namespace sblab::testing {

using model::Bounds;
using model::Instance;
using model::Relation;
using model::Row;
using model::Sense;
using model::VarKind;

Instance knapsack3() {
  Instance inst;
  inst.name = "knapsack3";
  inst.sense = Sense::kMaximize;
  inst.objective = {5, 4, 3};
  inst.bounds.assign(3, Bounds{0, 1});
  inst.var_kind.assign(3, VarKind::kBinary);
  inst.rows.push_back(Row{{0, 1, 2}, {2, 3, 1}, Relation::kLessEqual, 5});
  return inst;
}

Instance knapsack3_lp() {
  Instance inst = knapsack3();
  inst.name = "knapsack3_lp";
  inst.var_kind.assign(3, VarKind::kContinuous);
  return inst;
}

namespace {

double coefficient(gen::Rng& rng) {
  // Integers in [-5, 5] with extra weight on zero.
  if (rng.bernoulli(0.3)) return 0.0;
  return static_cast<double>(rng.uniform_int(-5, 5));
}

Relation relation(gen::Rng& rng) {
  const auto r = rng.uniform_int(0, 5);
  if (r == 0) return Relation::kEqual;
  return r <= 3 ? Relation::kLessEqual : Relation::kGreaterEqual;
}

// Row through `point` with slack pushing the rhs away from the point on the
// feasible side (or, when `cut`, on the infeasible side).
Row row_around(gen::Rng& rng, const std::vector<double>& point, bool cut) {
  Row row;
  double act = 0.0;
  for (int j = 0; j < static_cast<int>(point.size()); ++j) {
    const double a = coefficient(rng);
    if (a == 0.0) continue;
    row.indices.push_back(j);
    row.values.push_back(a);
    act += a * point[j];
  }
  row.relation = relation(rng);
  const double slack = static_cast<double>(rng.uniform_int(0, 4));
  const double sign = cut ? -1.0 : 1.0;
  switch (row.relation) {
    case Relation::kLessEqual:
      row.rhs = act + sign * slack;
      break;
    case Relation::kGreaterEqual:
      row.rhs = act - sign * slack;
      break;
    case Relation::kEqual:
      row.rhs = cut ? act + 1.0 : act;
      break;
  }
  return row;
}

}  // namespace

Instance random_lp(gen::Rng& rng, int max_vars, int max_rows) {
  Instance inst;
  const int n = static_cast<int>(rng.uniform_int(1, max_vars));
  const int m = static_cast<int>(rng.uniform_int(0, max_rows));
  inst.name = "lp";
  inst.sense = rng.bernoulli(0.5) ? Sense::kMinimize : Sense::kMaximize;
  std::vector<double> point(n);
  for (int j = 0; j < n; ++j) {
    inst.objective.push_back(coefficient(rng));
    const double lo = static_cast<double>(rng.uniform_int(-4, 2));
    const double hi = lo + static_cast<double>(rng.uniform_int(0, 6));
    inst.bounds.push_back(Bounds{lo, hi});
    inst.var_kind.push_back(VarKind::kContinuous);
    point[j] = lo + (hi - lo) * rng.uniform01();
  }
  const bool cut = rng.bernoulli(0.2);
  for (int i = 0; i < m; ++i) inst.rows.push_back(row_around(rng, point, cut && i == 0));
  return inst;
}

Instance random_milp(gen::Rng& rng, int binaries, int continuous, int rows,
                     bool may_be_infeasible) {
  Instance inst;
  const int n = binaries + continuous;
  inst.name = "milp";
  inst.sense = rng.bernoulli(0.5) ? Sense::kMinimize : Sense::kMaximize;
  std::vector<double> point(n);
  for (int j = 0; j < n; ++j) {
    const bool binary = j < binaries;
    inst.objective.push_back(static_cast<double>(rng.uniform_int(-9, 9)));
    if (binary) {
      inst.bounds.push_back(Bounds{0, 1});
      inst.var_kind.push_back(VarKind::kBinary);
      point[j] = rng.bernoulli(0.5) ? 1.0 : 0.0;
    } else {
      const double lo = static_cast<double>(rng.uniform_int(-3, 0));
      const double hi = lo + static_cast<double>(rng.uniform_int(1, 5));
      inst.bounds.push_back(Bounds{lo, hi});
      inst.var_kind.push_back(VarKind::kContinuous);
      point[j] = lo + (hi - lo) * rng.uniform01();
    }
  }
  for (int i = 0; i < rows; ++i) {
    Row row = row_around(rng, point, may_be_infeasible && i == 0 && rng.bernoulli(0.3));
    // Equalities over binaries alone are almost always infeasible.
    if (row.relation == Relation::kEqual && continuous == 0) {
      row.relation = Relation::kLessEqual;
    }
    inst.rows.push_back(std::move(row));
  }
  return inst;
}

Instance correlated_knapsack(gen::Rng& rng, int binaries, int rows) {
  Instance inst;
  inst.name = "knapsack";
  inst.sense = Sense::kMaximize;
  std::vector<double> weight(binaries);
  for (int j = 0; j < binaries; ++j) {
    weight[j] = static_cast<double>(rng.uniform_int(20, 60));
    inst.objective.push_back(weight[j] + 10.0);
    inst.bounds.push_back(Bounds{0, 1});
    inst.var_kind.push_back(VarKind::kBinary);
  }
  for (int i = 0; i < rows; ++i) {
    Row row;
    double sum = 0.0;
    for (int j = 0; j < binaries; ++j) {
      // The first row uses the profit-correlated weights; later rows perturb them.
      const double w = i == 0 ? weight[j] : weight[j] + static_cast<double>(rng.uniform_int(-10, 10));
      row.indices.push_back(j);
      row.values.push_back(w);
      sum += w;
    }
    row.relation = Relation::kLessEqual;
    row.rhs = std::floor(0.5 * sum) + static_cast<double>(rng.uniform_int(0, 5));
    inst.rows.push_back(std::move(row));
  }
  return inst;
}

Instance parity_infeasible(gen::Rng& rng, int binaries) {
  Instance inst;
  inst.name = "parity";
  inst.sense = Sense::kMinimize;
  Row eq;
  double total = 0.0;
  for (int j = 0; j < binaries; ++j) {
    inst.objective.push_back(static_cast<double>(rng.uniform_int(-9, 9)));
    inst.bounds.push_back(Bounds{0, 1});
    inst.var_kind.push_back(VarKind::kBinary);
    const double a = 2.0 * static_cast<double>(rng.uniform_int(1, 4));
    eq.indices.push_back(j);
    eq.values.push_back(a);
    total += a;
  }
  eq.relation = Relation::kEqual;
  eq.rhs = 2.0 * std::floor(total / 4.0) + 1.0;
  inst.rows.push_back(std::move(eq));
  for (int i = 0; i < 2; ++i) {
    Row pack;
    double sum = 0.0;
    for (int j = 0; j < binaries; ++j) {
      if (!rng.bernoulli(0.5)) continue;
      const double a = static_cast<double>(rng.uniform_int(1, 6));
      pack.indices.push_back(j);
      pack.values.push_back(a);
      sum += a;
    }
    if (pack.indices.empty()) continue;
    pack.relation = Relation::kLessEqual;
    pack.rhs = std::ceil(0.6 * sum);
    inst.rows.push_back(std::move(pack));
  }
  return inst;
}

}  // namespace sblab::testing
