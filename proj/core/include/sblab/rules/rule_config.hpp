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

#ifndef SBLAB_RULES_RULE_CONFIG_HPP_
#define SBLAB_RULES_RULE_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sblab/rules/gains.hpp"

namespace sblab::rules {

enum class GainSource { kRaw, kEfficacious };
enum class Asymmetry { kNone, kLastAssignment, kRebalanced, kPruningAware, kCardinality };
enum class GainMethod { kFullStrong, kReliability };

std::string_view to_string(GainSource source);
std::string_view to_string(Asymmetry asymmetry);
std::string_view to_string(GainMethod method);

struct ScoreParams {
  double epsilon = kDefaultEpsilon;
  double a_min = 0.5;
  double a_max = 0.5;
  // Static asymmetric exponents; the asymmetry modes replace them.
  double a0 = 0.0;
  double a1 = 0.0;
  double eta = 0.15;
  int k_i = 10;
  int update_period = 50;
  double pa_threshold = 0.05;
  // Smallest rhs accepted by cardinality-row detection.
  double cardinality_min_rhs = 2.0;
  GainSource gain_source = GainSource::kRaw;
  Asymmetry asymmetry = Asymmetry::kNone;
  bool pruning_focused = false;

  // Throws ValidationError on out-of-range values.
  void validate() const;
};

struct ReliabilityParams {
  // Observations needed on both sides before pseudocosts are trusted.
  std::int64_t reliability = 8;
  // Strong-branching evaluations (candidates) per node.
  std::int64_t budget = 100;
  // Dual simplex iteration cap per child LP; empty means solve to the end.
  std::optional<std::int64_t> iteration_cap = 500;
};

struct RuleConfig {
  std::string name;
  ScoreParams score;
  GainMethod method = GainMethod::kFullStrong;
  ReliabilityParams reliability;

  void validate() const;
};

// Canonical rule names in catalog order.
const std::vector<std::string>& rule_names();

// Throws ValidationError for unknown names.
RuleConfig make_rule(std::string_view name);

// Keys: a_min, a_max, a0, a1, eta, k_I, epsilon, update_period, pa_threshold,
// cardinality_min_rhs, reliability, sb_budget, sb_iteration_cap (negative
// removes the cap).
void apply_override(RuleConfig& rule, std::string_view key, double value);

// "name" or "name:key=value,key=value".
RuleConfig parse_rule(std::string_view text);

}  // namespace sblab::rules

#endif  // SBLAB_RULES_RULE_CONFIG_HPP_
