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

#ifndef SBLAB_BENCH_METRICS_HPP_
#define SBLAB_BENCH_METRICS_HPP_

#include <span>

#include "sblab/engine/solver.hpp"

namespace sblab::bench {

inline constexpr double kTreeShift = 100.0;
inline constexpr double kGapShift = 0.01;

// exp(mean(ln(v + shift))) - shift.
double shifted_geomean(std::span<const double> values, double shift);

// Remaining gap relative to the root integrality gap, all values in the
// minimization sense: (primal - dual) / |z_star - root_lp| clamped to [0, 1].
// Solved runs give 0. A zero denominator gives 0 when solved and 1 otherwise.
double gap_remaining(engine::SolveStatus status, double primal, double dual, double z_star,
                     double root_lp);
// Same, reading primal/dual/root from the report; z_star in the instance's
// objective sense.
double gap_remaining(const engine::SolveReport& report, double z_star);

// Percentage reduction of `value` relative to `baseline`.
double pct_reduction(double baseline, double value);

}  // namespace sblab::bench

#endif  // SBLAB_BENCH_METRICS_HPP_
