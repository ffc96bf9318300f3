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

#include "sblab/model/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "sblab/errors.hpp"

namespace sblab::model {

std::string_view to_string(Sense sense) {
  return sense == Sense::kMaximize ? "maximize" : "minimize";
}

std::string_view to_string(VarKind kind) {
  return kind == VarKind::kBinary ? "binary" : "continuous";
}

std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kEqual:
      return "=";
    case Relation::kGreaterEqual:
      return ">=";
  }
  return "?";
}

int Instance::num_binaries() const {
  return static_cast<int>(
      std::count(var_kind.begin(), var_kind.end(), VarKind::kBinary));
}

std::vector<double> Instance::canonical_cost() const {
  std::vector<double> cost(objective);
  if (sense == Sense::kMaximize) {
    for (double& c : cost) c = -c;
  }
  return cost;
}

namespace {

std::vector<std::pair<int, double>> sorted_terms(const Row& row) {
  std::vector<std::pair<int, double>> terms;
  terms.reserve(row.size());
  for (std::size_t k = 0; k < row.size(); ++k) {
    terms.emplace_back(row.indices[k], row.values[k]);
  }
  std::sort(terms.begin(), terms.end());
  return terms;
}

}  // namespace

bool Instance::equivalent(const Instance& other) const {
  if (name != other.name || sense != other.sense ||
      objective != other.objective || bounds != other.bounds ||
      var_kind != other.var_kind || rows.size() != other.rows.size()) {
    return false;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& a = rows[i];
    const Row& b = other.rows[i];
    if (a.relation != b.relation || a.rhs != b.rhs) return false;
    if (sorted_terms(a) != sorted_terms(b)) return false;
  }
  return true;
}

void canonicalize_rows(Instance& inst) {
  for (Row& row : inst.rows) {
    auto terms = sorted_terms(row);
    for (std::size_t k = 0; k < terms.size(); ++k) {
      row.indices[k] = terms[k].first;
      row.values[k] = terms[k].second;
    }
  }
}

void validate(const Instance& inst) {
  const std::size_t n = inst.objective.size();
  if (inst.bounds.size() != n || inst.var_kind.size() != n) {
    throw ValidationError("instance '" + inst.name +
                          "': objective, bounds and var_kind sizes differ");
  }
  for (std::size_t j = 0; j < n; ++j) {
    const std::string where = "variable " + std::to_string(j);
    if (!std::isfinite(inst.objective[j])) {
      throw ValidationError(where + ": objective coefficient is not finite");
    }
    const Bounds& b = inst.bounds[j];
    if (std::isnan(b.lower) || std::isnan(b.upper) || b.lower == kInf ||
        b.upper == -kInf) {
      throw ValidationError(where + ": invalid bounds");
    }
    if (b.lower > b.upper) {
      throw ValidationError(where + ": lower bound exceeds upper bound");
    }
    if (inst.var_kind[j] == VarKind::kBinary &&
        (b.lower != 0.0 || b.upper != 1.0)) {
      throw ValidationError(where + ": binary variable must have bounds [0,1]");
    }
  }
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < inst.rows.size(); ++i) {
    const Row& row = inst.rows[i];
    const std::string where = "row " + std::to_string(i);
    if (row.indices.size() != row.values.size()) {
      throw ValidationError(where + ": indices and values sizes differ");
    }
    if (!std::isfinite(row.rhs)) {
      throw ValidationError(where + ": right-hand side is not finite");
    }
    for (std::size_t k = 0; k < row.size(); ++k) {
      const int j = row.indices[k];
      if (j < 0 || static_cast<std::size_t>(j) >= n) {
        throw ValidationError(where + ": column index out of range");
      }
      if (seen[j]) {
        throw ValidationError(where + ": duplicate column index " +
                              std::to_string(j));
      }
      seen[j] = 1;
      if (!std::isfinite(row.values[k])) {
        throw ValidationError(where + ": coefficient is not finite");
      }
    }
    for (int j : row.indices) seen[j] = 0;
  }
}

SolutionCheck check_solution(const Instance& inst, const Assignment& a,
                             double tol) {
  if (!(tol > 0.0)) throw ContractViolation("check_solution: tol must be > 0");
  if (static_cast<int>(a.values.size()) != inst.num_vars()) {
    throw ContractViolation("check_solution: assignment has " +
                            std::to_string(a.values.size()) +
                            " values, instance has " +
                            std::to_string(inst.num_vars()) + " variables");
  }
  SolutionCheck out;
  double worst = 0.0;
  for (int j = 0; j < inst.num_vars(); ++j) {
    const double v = a.values[j];
    out.objective += inst.objective[j] * v;
    const Bounds& b = inst.bounds[j];
    worst = std::max({worst, b.lower - v, v - b.upper});
    if (inst.is_binary(j)) {
      worst = std::max(worst, std::min(std::abs(v), std::abs(v - 1.0)));
    }
  }
  for (const Row& row : inst.rows) {
    double activity = 0.0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      activity += row.values[k] * a.values[row.indices[k]];
    }
    switch (row.relation) {
      case Relation::kLessEqual:
        worst = std::max(worst, activity - row.rhs);
        break;
      case Relation::kGreaterEqual:
        worst = std::max(worst, row.rhs - activity);
        break;
      case Relation::kEqual:
        worst = std::max(worst, std::abs(activity - row.rhs));
        break;
    }
  }
  out.worst_violation = worst;
  out.feasible = worst <= tol;
  return out;
}

}  // namespace sblab::model
