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

#ifndef SBLAB_RULES_PSEUDOCOST_HPP_
#define SBLAB_RULES_PSEUDOCOST_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace sblab::rules {

// Per-variable, per-side averages of unit gains (gain divided by the distance
// the variable moved).
class PseudocostStore {
 public:
  explicit PseudocostStore(int num_vars);

  // Ignores non-finite samples.
  void record(int var, int side, double unit_gain);
  // Records gain / distance, where distance is f for side 0 and 1-f for side 1.
  void record_gain(int var, int side, double fractional_value, double gain);

  std::int64_t count(int var, int side) const { return entry(var, side).count; }
  bool reliable(int var, std::int64_t threshold) const;
  std::optional<double> average(int var, int side) const;
  std::optional<double> global_average(int side) const;

  // Estimated gain for moving `distance`: own average, else the global
  // average, else epsilon.
  double estimate(int var, int side, double distance, double epsilon) const;

 private:
  struct Entry {
    double sum = 0.0;
    std::int64_t count = 0;
  };
  const Entry& entry(int var, int side) const;

  std::vector<std::array<Entry, 2>> entries_;
  std::array<Entry, 2> global_;
};

}  // namespace sblab::rules

#endif  // SBLAB_RULES_PSEUDOCOST_HPP_
