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

#include "sblab/bench/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "sblab/errors.hpp"

namespace sblab::bench {

double shifted_geomean(std::span<const double> values, double shift) {
  if (values.empty()) throw ContractViolation("shifted_geomean: empty input");
  if (!(shift >= 0.0)) throw ContractViolation("shifted_geomean: negative shift");
  double log_sum = 0.0;
  for (double v : values) {
    if (!(v + shift > 0.0)) throw ContractViolation("shifted_geomean: value + shift must be positive");
    log_sum += std::log(v + shift);
  }
  const double result = std::exp(log_sum / static_cast<double>(values.size())) - shift;
  // Keep rounding from leaving the [min, max] hull.
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return std::clamp(result, *lo, *hi);
}

double gap_remaining(engine::SolveStatus status, double primal, double dual, double z_star,
                     double root_lp) {
  const bool solved = status == engine::SolveStatus::kOptimal;
  if (solved) return 0.0;
  const double denom = std::abs(z_star - root_lp);
  if (!(denom > 0.0) || !std::isfinite(denom)) return 1.0;
  if (!std::isfinite(primal) || !std::isfinite(dual)) return 1.0;
  return std::clamp((primal - dual) / denom, 0.0, 1.0);
}

double gap_remaining(const engine::SolveReport& report, double z_star) {
  const double canonical_z = report.sense == model::Sense::kMaximize ? -z_star : z_star;
  return gap_remaining(report.status, report.incumbent.bound, report.dual_bound, canonical_z,
                       report.root_bound);
}

double pct_reduction(double baseline, double value) {
  if (baseline == 0.0) throw ContractViolation("pct_reduction: zero baseline");
  return 100.0 * (baseline - value) / baseline;
}

}  // namespace sblab::bench
