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

#include "sblab/rules/rule_config.hpp"

#include <charconv>
#include <cmath>

#include "sblab/errors.hpp"

namespace sblab::rules {

std::string_view to_string(GainSource source) {
  return source == GainSource::kRaw ? "raw" : "efficacious";
}

std::string_view to_string(Asymmetry asymmetry) {
  switch (asymmetry) {
    case Asymmetry::kNone:
      return "none";
    case Asymmetry::kLastAssignment:
      return "la";
    case Asymmetry::kRebalanced:
      return "rla";
    case Asymmetry::kPruningAware:
      return "pala";
    case Asymmetry::kCardinality:
      return "cardinality";
  }
  return "?";
}

std::string_view to_string(GainMethod method) {
  return method == GainMethod::kFullStrong ? "full_strong" : "reliability";
}

void ScoreParams::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ValidationError("epsilon must be positive");
  for (double e : {a_min, a_max, a0, a1, eta}) {
    if (!(e >= 0.0) || !std::isfinite(e)) {
      throw ValidationError("score exponents and eta must be finite and nonnegative");
    }
  }
  if (a0 > 0.0 && a1 > 0.0) throw ValidationError("at most one of a0 and a1 may be positive");
  if (k_i < 0) throw ValidationError("k_I must be nonnegative");
  if (update_period < 1) throw ValidationError("update_period must be at least 1");
  if (!(pa_threshold >= 0.0 && pa_threshold <= 1.0)) {
    throw ValidationError("pa_threshold must lie in [0, 1]");
  }
}

void RuleConfig::validate() const {
  score.validate();
  if (reliability.reliability < 0) throw ValidationError("reliability must be nonnegative");
  if (reliability.budget < 0) throw ValidationError("sb_budget must be nonnegative");
  if (reliability.iteration_cap && *reliability.iteration_cap < 0) {
    throw ValidationError("sb_iteration_cap must be nonnegative");
  }
}

const std::vector<std::string>& rule_names() {
  static const std::vector<std::string> names = {
      "def-sb", "def-sb-37", "eff-sb",         "eff-sb-37",      "la-sb",  "rla-sb",    "pala-sb",
      "eff-card", "prune-focus", "prune-focus-37", "def-rb", "eff-rb-37", "pala-rb"};
  return names;
}

RuleConfig make_rule(std::string_view name) {
  RuleConfig rule;
  rule.name = std::string(name);
  ScoreParams& s = rule.score;
  auto set37 = [&] {
    s.a_min = 0.3;
    s.a_max = 0.7;
  };
  if (name == "def-sb") {
  } else if (name == "def-sb-37") {
    set37();
  } else if (name == "eff-sb") {
    s.gain_source = GainSource::kEfficacious;
  } else if (name == "eff-sb-37") {
    s.gain_source = GainSource::kEfficacious;
    set37();
  } else if (name == "la-sb" || name == "rla-sb" || name == "pala-sb" || name == "eff-card") {
    s.gain_source = GainSource::kEfficacious;
    set37();
    s.asymmetry = name == "la-sb"    ? Asymmetry::kLastAssignment
                  : name == "rla-sb" ? Asymmetry::kRebalanced
                  : name == "pala-sb" ? Asymmetry::kPruningAware
                                      : Asymmetry::kCardinality;
  } else if (name == "prune-focus") {
    s.pruning_focused = true;
  } else if (name == "prune-focus-37") {
    s.pruning_focused = true;
    set37();
  } else if (name == "def-rb") {
    rule.method = GainMethod::kReliability;
  } else if (name == "eff-rb-37") {
    rule.method = GainMethod::kReliability;
    s.gain_source = GainSource::kEfficacious;
    set37();
  } else if (name == "pala-rb") {
    rule.method = GainMethod::kReliability;
    s.gain_source = GainSource::kEfficacious;
    s.asymmetry = Asymmetry::kPruningAware;
    set37();
  } else {
    throw ValidationError("unknown rule '" + std::string(name) + "'");
  }
  return rule;
}

void apply_override(RuleConfig& rule, std::string_view key, double value) {
  ScoreParams& s = rule.score;
  auto as_count = [&](std::string_view what) {
    if (!std::isfinite(value) || value != std::floor(value)) {
      throw ValidationError(std::string(what) + " must be an integer");
    }
    return static_cast<std::int64_t>(value);
  };
  if (key == "a_min") {
    s.a_min = value;
  } else if (key == "a_max") {
    s.a_max = value;
  } else if (key == "a0") {
    s.a0 = value;
  } else if (key == "a1") {
    s.a1 = value;
  } else if (key == "eta") {
    s.eta = value;
  } else if (key == "k_I") {
    s.k_i = static_cast<int>(as_count(key));
  } else if (key == "epsilon") {
    s.epsilon = value;
  } else if (key == "update_period") {
    s.update_period = static_cast<int>(as_count(key));
  } else if (key == "pa_threshold") {
    s.pa_threshold = value;
  } else if (key == "cardinality_min_rhs") {
    s.cardinality_min_rhs = value;
  } else if (key == "reliability") {
    rule.reliability.reliability = as_count(key);
  } else if (key == "sb_budget") {
    rule.reliability.budget = as_count(key);
  } else if (key == "sb_iteration_cap") {
    if (value < 0.0) {
      rule.reliability.iteration_cap.reset();
    } else {
      rule.reliability.iteration_cap = as_count(key);
    }
  } else {
    throw ValidationError("unknown rule override '" + std::string(key) + "'");
  }
  rule.validate();
}

RuleConfig parse_rule(std::string_view text) {
  const auto colon = text.find(':');
  RuleConfig rule = make_rule(text.substr(0, colon));
  if (colon == std::string_view::npos) return rule;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("rule override '" + std::string(item) + "' lacks '='");
    }
    const std::string_view value_text = item.substr(eq + 1);
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
    if (ec != std::errc() || ptr != value_text.data() + value_text.size()) {
      throw ValidationError("bad value in rule override '" + std::string(item) + "'");
    }
    apply_override(rule, item.substr(0, eq), value);
  }
  rule.name = std::string(text);
  return rule;
}

}  // namespace sblab::rules
