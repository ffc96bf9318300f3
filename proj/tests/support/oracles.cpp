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

#include "support/oracles.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace sblab::testing {

namespace {

constexpr double kFeasTol = 1e-7;

// One constraint a.x (rel) rhs in dense form.
struct Dense {
  std::vector<double> a;
  model::Relation rel = model::Relation::kLessEqual;
  double rhs = 0.0;
};

bool satisfied(const Dense& c, const Eigen::VectorXd& x) {
  double act = 0.0;
  for (std::size_t j = 0; j < c.a.size(); ++j) act += c.a[j] * x[static_cast<Eigen::Index>(j)];
  const double tol = kFeasTol * std::max(1.0, std::abs(c.rhs));
  switch (c.rel) {
    case model::Relation::kLessEqual:
      return act <= c.rhs + tol;
    case model::Relation::kGreaterEqual:
      return act >= c.rhs - tol;
    case model::Relation::kEqual:
      return std::abs(act - c.rhs) <= tol;
  }
  return false;
}

// Minimizes cost.x over {rows, box} by vertex enumeration.
OracleResult enumerate(const std::vector<double>& cost, const std::vector<Dense>& rows,
                       const std::vector<model::Bounds>& box) {
  const int n = static_cast<int>(cost.size());
  OracleResult best;
  if (n == 0) {
    Eigen::VectorXd x(0);
    for (const Dense& r : rows) {
      if (!satisfied(r, x)) return best;
    }
    best.feasible = true;
    return best;
  }
  // Candidate tight constraints: every row, then lower and upper bounds.
  std::vector<Dense> tight = rows;
  for (int j = 0; j < n; ++j) {
    for (double side : {box[j].lower, box[j].upper}) {
      if (!std::isfinite(side)) throw std::invalid_argument("oracle needs finite bounds");
      Dense d;
      d.a.assign(n, 0.0);
      d.a[j] = 1.0;
      d.rel = model::Relation::kEqual;
      d.rhs = side;
      tight.push_back(std::move(d));
    }
  }
  const int t = static_cast<int>(tight.size());
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  Eigen::MatrixXd a(n, n);
  Eigen::VectorXd b(n);
  while (true) {
    for (int r = 0; r < n; ++r) {
      for (int j = 0; j < n; ++j) a(r, j) = tight[pick[r]].a[j];
      b[r] = tight[pick[r]].rhs;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    lu.setThreshold(1e-10);
    if (lu.isInvertible()) {
      const Eigen::VectorXd x = lu.solve(b);
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) {
        ok = x[j] >= box[j].lower - kFeasTol * std::max(1.0, std::abs(box[j].lower)) &&
             x[j] <= box[j].upper + kFeasTol * std::max(1.0, std::abs(box[j].upper));
      }
      for (std::size_t r = 0; r < rows.size() && ok; ++r) ok = satisfied(rows[r], x);
      if (ok) {
        double obj = 0.0;
        for (int j = 0; j < n; ++j) obj += cost[j] * x[j];
        if (!best.feasible || obj < best.objective) {
          best.feasible = true;
          best.objective = obj;
          best.x.assign(x.data(), x.data() + n);
        }
      }
    }
    // Next n-subset of [0, t) in lexicographic order.
    int i = n - 1;
    while (i >= 0 && pick[i] == t - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int k = i + 1; k < n; ++k) pick[k] = pick[k - 1] + 1;
  }
  return best;
}

std::vector<Dense> dense_rows(const model::Instance& inst) {
  std::vector<Dense> rows;
  for (const model::Row& r : inst.rows) {
    Dense d;
    d.a.assign(inst.num_vars(), 0.0);
    for (std::size_t k = 0; k < r.size(); ++k) d.a[r.indices[k]] += r.values[k];
    d.rel = r.relation;
    d.rhs = r.rhs;
    rows.push_back(std::move(d));
  }
  return rows;
}

}  // namespace

OracleResult lp_vertex_oracle(const model::Instance& inst,
                              std::span<const model::Bounds> bounds) {
  std::vector<model::Bounds> box(inst.bounds);
  if (!bounds.empty()) box.assign(bounds.begin(), bounds.end());
  OracleResult r = enumerate(inst.canonical_cost(), dense_rows(inst), box);
  if (r.feasible) r.objective = inst.to_user(r.objective);
  return r;
}

OracleResult milp_brute_force(const model::Instance& inst) {
  const int n = inst.num_vars();
  std::vector<int> bin, cont;
  for (int j = 0; j < n; ++j) (inst.is_binary(j) ? bin : cont).push_back(j);
  if (bin.size() > 20) throw std::invalid_argument("too many binaries for brute force");
  const std::vector<Dense> rows = dense_rows(inst);
  const std::vector<double> cost = inst.canonical_cost();

  OracleResult best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bin.size()); ++mask) {
    std::vector<double> fixed(n, 0.0);
    bool in_box = true;
    double fixed_cost = 0.0;
    for (std::size_t k = 0; k < bin.size(); ++k) {
      const double v = (mask >> k) & 1 ? 1.0 : 0.0;
      const model::Bounds& b = inst.bounds[bin[k]];
      if (v < b.lower || v > b.upper) in_box = false;
      fixed[bin[k]] = v;
      fixed_cost += cost[bin[k]] * v;
    }
    if (!in_box) continue;
    // Reduced problem over the continuous variables.
    std::vector<Dense> sub;
    for (const Dense& r : rows) {
      Dense d;
      d.rel = r.rel;
      d.rhs = r.rhs;
      for (int j : bin) d.rhs -= r.a[j] * fixed[j];
      for (int j : cont) d.a.push_back(r.a[j]);
      sub.push_back(std::move(d));
    }
    std::vector<double> sub_cost;
    std::vector<model::Bounds> sub_box;
    for (int j : cont) {
      sub_cost.push_back(cost[j]);
      sub_box.push_back(inst.bounds[j]);
    }
    const OracleResult r = enumerate(sub_cost, sub, sub_box);
    if (!r.feasible) continue;
    const double obj = fixed_cost + r.objective;
    if (!best.feasible || obj < best.objective - 1e-12) {
      best.feasible = true;
      best.objective = obj;
      best.x = fixed;
      for (std::size_t k = 0; k < cont.size(); ++k) best.x[cont[k]] = r.x[k];
    }
  }
  if (best.feasible) best.objective = inst.to_user(best.objective);
  return best;
}

}  // namespace sblab::testing
