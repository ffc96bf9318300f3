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

#ifndef SBLAB_MODEL_INSTANCE_HPP_
#define SBLAB_MODEL_INSTANCE_HPP_

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace sblab::model {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kDefaultFeasibilityTol = 1e-6;

enum class Sense { kMinimize, kMaximize };
enum class VarKind { kBinary, kContinuous };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };

std::string_view to_string(Sense sense);
std::string_view to_string(VarKind kind);
std::string_view to_string(Relation rel);

struct Bounds {
  double lower = 0.0;
  double upper = kInf;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

// One sparse constraint row: sum_k values[k] * x[indices[k]]  (rel)  rhs.
struct Row {
  std::vector<int> indices;
  std::vector<double> values;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;

  std::size_t size() const { return indices.size(); }
  friend bool operator==(const Row&, const Row&) = default;
};

// Mixed-binary linear program. The objective is stored in the user's sense;
// every solver component works on `canonical_cost()`, which is always a
// minimization objective.
struct Instance {
  std::string name;
  Sense sense = Sense::kMinimize;
  std::vector<double> objective;
  std::vector<Bounds> bounds;
  std::vector<VarKind> var_kind;
  std::vector<Row> rows;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_binaries() const;
  bool is_binary(int j) const { return var_kind[j] == VarKind::kBinary; }

  // +1 for minimize, -1 for maximize.
  double sense_factor() const { return sense == Sense::kMaximize ? -1.0 : 1.0; }
  std::vector<double> canonical_cost() const;
  // Maps an objective value between the user's sense and minimization form.
  double to_canonical(double user_value) const { return sense_factor() * user_value; }
  double to_user(double canonical_value) const { return sense_factor() * canonical_value; }

  // Field-wise equality with rows compared up to coefficient order.
  bool equivalent(const Instance& other) const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws ValidationError describing the first broken invariant.
void validate(const Instance& inst);

struct Assignment {
  std::vector<double> values;
};

struct SolutionCheck {
  bool feasible = false;
  double objective = 0.0;
  double worst_violation = 0.0;
};

// Feasibility within `tol` for bounds, rows, and binary integrality.
// `objective` is always c^T a in the instance's own sense.
SolutionCheck check_solution(const Instance& inst, const Assignment& a,
                             double tol = kDefaultFeasibilityTol);

// Sorts each row's coefficients by index. Useful before comparisons.
void canonicalize_rows(Instance& inst);

}  // namespace sblab::model

#endif  // SBLAB_MODEL_INSTANCE_HPP_
