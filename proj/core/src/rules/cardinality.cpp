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

#include "sblab/rules/cardinality.hpp"

#include <algorithm>
#include <cmath>

#include "sblab/errors.hpp"

namespace sblab::rules {

std::optional<int> detect_cardinality(const model::Instance& inst, double min_rhs) {
  for (int i = 0; i < inst.num_rows(); ++i) {
    const model::Row& row = inst.rows[i];
    if (row.relation != model::Relation::kLessEqual || row.indices.empty()) continue;
    if (row.rhs < min_rhs || row.rhs < 1.0 || row.rhs != std::floor(row.rhs)) continue;
    bool unit = true;
    for (std::size_t p = 0; p < row.indices.size() && unit; ++p) {
      unit = row.values[p] == 1.0 && inst.is_binary(row.indices[p]);
    }
    if (unit) return i;
  }
  return std::nullopt;
}

CardinalityState cardinality_state(const model::Instance& inst, int row,
                                   std::span<const model::Bounds> bounds) {
  if (row < 0 || row >= inst.num_rows()) throw ContractViolation("cardinality row out of range");
  const model::Row& r = inst.rows[row];
  CardinalityState s;
  s.row = row;
  double k = r.rhs;
  for (int j : r.indices) {
    const model::Bounds b = bounds[j];
    if (b.lower == b.upper) {
      k -= b.lower;
    } else {
      ++s.n;
    }
  }
  s.k = static_cast<int>(std::clamp(std::floor(k + 1e-9), 0.0, static_cast<double>(s.n)));
  return s;
}

Exponents cardinality_exponents(const CardinalityState& s) {
  if (s.n <= 0) return {};
  const double n = s.n;
  return {(n - s.k) / (4.0 * n), s.k / (4.0 * n)};
}

}  // namespace sblab::rules
