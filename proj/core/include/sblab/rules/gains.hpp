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

#ifndef SBLAB_RULES_GAINS_HPP_
#define SBLAB_RULES_GAINS_HPP_

#include <limits>

namespace sblab::rules {

inline constexpr double kInfiniteGain = std::numeric_limits<double>::infinity();
inline constexpr double kDefaultEpsilon = 1e-6;

// LP gains of the 0-child and 1-child over the parent, in the minimization
// sense. +inf marks an infeasible child.
struct GainPair {
  double delta0 = 0.0;
  double delta1 = 0.0;

  double side(int s) const { return s == 0 ? delta0 : delta1; }
  bool operator==(const GainPair&) const = default;
};

// Builds a GainPair from child bounds (+inf for an infeasible child).
// Negative differences come from LP round-off and are clamped to zero.
GainPair make_gain_pair(double parent_bound, double child0_bound, double child1_bound);
double clamp_gain(double gain);

// Gains floored at epsilon and capped at the additive primal-dual gap.
struct EfficaciousPair {
  double q0 = 0.0;
  double q1 = 0.0;
};

EfficaciousPair efficacious_clip(const GainPair& g, double delta_pd,
                                 double epsilon = kDefaultEpsilon);

}  // namespace sblab::rules

#endif  // SBLAB_RULES_GAINS_HPP_
