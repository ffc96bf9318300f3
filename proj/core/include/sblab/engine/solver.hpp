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

#ifndef SBLAB_ENGINE_SOLVER_HPP_
#define SBLAB_ENGINE_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sblab/engine/leaf_log.hpp"
#include "sblab/engine/telemetry.hpp"
#include "sblab/model/instance.hpp"
#include "sblab/rules/rule_config.hpp"
#include "sblab/simplex/simplex.hpp"

namespace sblab::engine {

enum class SolveStatus { kOptimal, kNodeLimit, kInfeasible, kError };
std::string_view to_string(SolveStatus status);

enum class IncumbentSource { kNone, kInitial, kDiscovered };
std::string_view to_string(IncumbentSource source);

// Bounds below are in the minimization sense used internally; the user_*
// helpers on SolveReport convert back to the instance's objective sense.
struct Incumbent {
  double bound = model::kInf;
  std::optional<model::Assignment> solution;
  IncumbentSource source = IncumbentSource::kNone;
};

struct SolveOptions {
  // Initial primal bound in the instance's objective sense, installed without
  // a solution.
  std::optional<double> init_primal;
  std::int64_t node_limit = 20000;
  // Bookkeeping only; the search is deterministic.
  std::uint64_t seed = 0;
  bool record_telemetry = true;
  lp::SimplexOptions simplex;
};

struct SolveReport {
  std::string instance;
  std::string rule;
  model::Sense sense = model::Sense::kMinimize;
  SolveStatus status = SolveStatus::kError;
  std::int64_t tree_size = 0;
  std::int64_t branchings = 0;
  Incumbent incumbent;
  double dual_bound = -model::kInf;
  double root_bound = -model::kInf;
  // Remaining gap relative to the root gap, measured against the incumbent.
  // The harness recomputes it against a reference optimum.
  double gap_remaining = 1.0;
  LeafLog leaves;
  std::int64_t lp_iterations = 0;
  std::vector<TelemetryRow> telemetry;
  std::string diagnostic;

  double user_value(double minimization_value) const;
  double user_primal() const { return user_value(incumbent.bound); }
  double user_dual() const { return user_value(dual_bound); }
  double user_root() const { return user_value(root_bound); }
};

SolveReport solve(const model::Instance& inst, const rules::RuleConfig& rule,
                  const SolveOptions& options = {});
SolveReport solve(const model::Instance& inst, const rules::RuleConfig& rule,
                  std::optional<double> init_primal, std::int64_t node_limit,
                  std::uint64_t seed);

// z* degraded by a relative gap: z* + gap|z*| when minimizing, z* - gap|z*|
// when maximizing. A zero z* with positive gap returns z* and sets *warning.
double init_primal_bound(double z_star, double gap, model::Sense sense,
                         std::string* warning = nullptr);

// Absolute pruning tolerance at incumbent bound z.
double prune_tolerance(double z);

// Deterministic JSON rendering (telemetry optional).
std::string report_json(const SolveReport& report, bool with_telemetry = false);

}  // namespace sblab::engine

#endif  // SBLAB_ENGINE_SOLVER_HPP_
