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

#ifndef SBLAB_RULES_CARDINALITY_HPP_
#define SBLAB_RULES_CARDINALITY_HPP_

#include <optional>
#include <span>

#include "sblab/model/instance.hpp"
#include "sblab/rules/last_assignment.hpp"

namespace sblab::rules {

// A row sum_j x_j <= k over binaries, restricted to a node's free variables.
struct CardinalityState {
  int row = -1;
  int n = 0;  // free binaries in the row
  int k = 0;  // how many of them may still be 1, clamped to [0, n]
};

// First <= row with unit coefficients over binaries and an integral
// rhs >= min_rhs.
std::optional<int> detect_cardinality(const model::Instance& inst, double min_rhs = 2.0);

// Evaluates the row under node-local bounds.
CardinalityState cardinality_state(const model::Instance& inst, int row,
                                   std::span<const model::Bounds> bounds);

// ((n-k)/(4n), k/(4n)); both exponents may be positive.
Exponents cardinality_exponents(const CardinalityState& s);

}  // namespace sblab::rules

#endif  // SBLAB_RULES_CARDINALITY_HPP_
