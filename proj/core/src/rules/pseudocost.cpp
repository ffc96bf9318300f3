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

#include "sblab/rules/pseudocost.hpp"

#include <cmath>

#include "sblab/errors.hpp"

namespace sblab::rules {

PseudocostStore::PseudocostStore(int num_vars) : entries_(num_vars) {}

const PseudocostStore::Entry& PseudocostStore::entry(int var, int side) const {
  if (var < 0 || var >= static_cast<int>(entries_.size()) || (side != 0 && side != 1)) {
    throw ContractViolation("pseudocost index out of range");
  }
  return entries_[var][side];
}

void PseudocostStore::record(int var, int side, double unit_gain) {
  entry(var, side);
  if (!std::isfinite(unit_gain)) return;
  Entry& e = entries_[var][side];
  e.sum += unit_gain;
  ++e.count;
  global_[side].sum += unit_gain;
  ++global_[side].count;
}

void PseudocostStore::record_gain(int var, int side, double fractional_value, double gain) {
  const double f = fractional_value - std::floor(fractional_value);
  const double distance = side == 0 ? f : 1.0 - f;
  if (distance <= 0.0) return;
  record(var, side, gain / distance);
}

bool PseudocostStore::reliable(int var, std::int64_t threshold) const {
  return count(var, 0) >= threshold && count(var, 1) >= threshold;
}

std::optional<double> PseudocostStore::average(int var, int side) const {
  const Entry& e = entry(var, side);
  if (e.count == 0) return std::nullopt;
  return e.sum / static_cast<double>(e.count);
}

std::optional<double> PseudocostStore::global_average(int side) const {
  if (side != 0 && side != 1) throw ContractViolation("pseudocost side must be 0 or 1");
  const Entry& e = global_[side];
  if (e.count == 0) return std::nullopt;
  return e.sum / static_cast<double>(e.count);
}

double PseudocostStore::estimate(int var, int side, double distance, double epsilon) const {
  std::optional<double> unit = average(var, side);
  if (!unit) unit = global_average(side);
  if (!unit) return epsilon;
  return *unit * distance;
}

}  // namespace sblab::rules
