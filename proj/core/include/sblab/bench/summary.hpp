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

#ifndef SBLAB_BENCH_SUMMARY_HPP_
#define SBLAB_BENCH_SUMMARY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sblab/bench/campaign.hpp"

namespace sblab::bench {

struct CellStats {
  std::string family;  // "all" for the overall table
  std::string rule;
  double gap = 0.0;
  int runs = 0;
  int solved = 0;
  int unsolved = 0;
  int errors = 0;
  // Shifted geometric means: tree size over solved runs (shift 100) and gap
  // remaining over unsolved runs (shift 0.01).
  std::optional<double> tree_geomean;
  std::optional<double> gap_geomean;
};

// "set_packing-12" -> "set_packing"; names without a numeric suffix are kept.
std::string instance_family(const std::string& instance);

// Cells sorted by (family, rule, gap).
std::vector<CellStats> aggregate(const std::vector<ResultRow>& rows, bool by_family);

// Tree-size reduction of `rule` relative to `baseline` at the same gap (or
// the baseline's smallest gap when it was not run at that gap).
std::optional<double> tree_reduction(const std::vector<CellStats>& cells,
                                     const std::string& family, const std::string& rule,
                                     double gap, const std::string& baseline);

std::string summary_markdown(const std::vector<ResultRow>& rows, const std::string& baseline);

}  // namespace sblab::bench

#endif  // SBLAB_BENCH_SUMMARY_HPP_
