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

#ifndef SBLAB_SIMPLEX_SIMPLEX_HPP_
#define SBLAB_SIMPLEX_SIMPLEX_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "sblab/simplex/lp_model.hpp"

namespace sblab::lp {

enum class LpStatus { kOptimal, kInfeasible, kIterationLimit, kUnbounded };
std::string_view to_string(LpStatus status);

enum class VarStatus : std::uint8_t { kBasic, kAtLower, kAtUpper, kFree, kFixed };

// Factorization and primal values attached to a basis; opaque to callers.
struct WarmStart;

struct BasisSnapshot {
  std::vector<int> head;          // basic variable per row position
  std::vector<VarStatus> status;  // one per structural + logical variable
  std::shared_ptr<const WarmStart> warm;

  bool empty() const { return head.empty() && status.empty(); }
  bool has_factorization() const { return warm != nullptr; }
  // Keeps only the combinatorial basis; the next use refactorizes.
  void drop_factorization() { warm.reset(); }
};

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  // Valid for kOptimal; mirrors dual_bound for kIterationLimit.
  double objective = kInf;
  // Lower bound on the view's minimization optimum. Equals objective when
  // optimal, +inf when infeasible.
  double dual_bound = kInf;
  std::vector<double> primal;  // structural values, kOptimal only
  BasisSnapshot basis;
  std::int64_t iterations = 0;
};

struct SimplexOptions {
  double primal_tol = 1e-7;
  double dual_tol = 1e-7;
  double pivot_tol = 1e-9;
  int refactor_period = 100;
  // Hard safeguard against runaway solves; 0 picks a size-based default.
  std::int64_t max_iterations = 0;
};

// Bounded-variable simplex from the all-logical basis.
LpOutcome solve_root(const LpView& view, const SimplexOptions& options = {});

// Re-solves `parent_view` with the bounds of `var` replaced by `new_bounds`,
// warm-started from `parent`'s optimal basis with the dual simplex. With an
// iteration cap the result may be kIterationLimit, whose dual_bound is a
// Lagrangian bound from the current duals and therefore valid.
LpOutcome resolve_bound_change(const LpOutcome& parent, const LpView& parent_view,
                               int var, Bounds new_bounds,
                               std::optional<std::int64_t> iter_cap = std::nullopt,
                               const SimplexOptions& options = {});

// Re-solves `view` from an arbitrary basis snapshot (for instance one whose
// factorization was dropped).
LpOutcome resolve_from_basis(const BasisSnapshot& basis, const LpView& view,
                             std::optional<std::int64_t> iter_cap = std::nullopt,
                             const SimplexOptions& options = {});

// Rebuilds the factorization of an optimal outcome for `view` in place, so
// that subsequent resolve_bound_change calls can share it.
void attach_factorization(LpOutcome& outcome, const LpView& view,
                          const SimplexOptions& options = {});

}  // namespace sblab::lp

#endif  // SBLAB_SIMPLEX_SIMPLEX_HPP_
