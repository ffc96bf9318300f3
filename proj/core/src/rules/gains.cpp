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

#include "sblab/rules/gains.hpp"

#include <algorithm>
#include <cmath>

#include "sblab/errors.hpp"

namespace sblab::rules {

double clamp_gain(double gain) {
  if (std::isnan(gain)) throw ContractViolation("LP gain is NaN");
  return std::max(gain, 0.0);
}

GainPair make_gain_pair(double parent_bound, double child0_bound, double child1_bound) {
  auto gain = [&](double child) {
    if (child == kInfiniteGain) return kInfiniteGain;
    return clamp_gain(child - parent_bound);
  };
  return {gain(child0_bound), gain(child1_bound)};
}

EfficaciousPair efficacious_clip(const GainPair& g, double delta_pd, double epsilon) {
  if (!(epsilon > 0.0)) throw ContractViolation("efficacious_clip: epsilon must be positive");
  if (delta_pd < 0.0) throw ContractViolation("efficacious_clip: negative primal-dual gap");
  auto clip = [&](double delta) { return std::min(std::max(delta, epsilon), delta_pd); };
  return {clip(g.delta0), clip(g.delta1)};
}

}  // namespace sblab::rules
