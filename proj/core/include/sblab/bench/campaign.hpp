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

#ifndef SBLAB_BENCH_CAMPAIGN_HPP_
#define SBLAB_BENCH_CAMPAIGN_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sblab/generators/generators.hpp"
#include "sblab/model/instance.hpp"

namespace sblab::bench {

// Either a file (MPS or JSON) or a generator spec.
struct InstanceSource {
  std::string path;
  std::optional<gen::GenSpec> spec;
};

struct Campaign {
  std::vector<InstanceSource> instances;
  std::vector<std::string> rules;  // rule names, optionally with overrides
  // Relative primal gaps; +inf means no initial primal bound.
  std::vector<double> primal_gaps = {0.0};
  std::vector<std::uint64_t> seeds = {0};
  std::int64_t node_limit = 20000;
  // Optimal values in each instance's objective sense, keyed by name.
  std::map<std::string, double> reference_optima;
  int parallelism = 1;
  std::string output_dir = ".";
  std::string baseline = "def-sb";
  // When false, wall_time is written as 0 so reruns are byte-identical.
  bool record_wall_time = true;
  // Node limit for the def-sb solves that fill in missing optima.
  std::int64_t bootstrap_node_limit = 1000000;

  // Throws ValidationError.
  void validate() const;
};

// Parses the JSON campaign format; relative instance paths resolve against
// base_dir.
Campaign parse_campaign(const std::string& json_text, const std::string& base_dir = ".");
Campaign load_campaign(const std::string& path);

struct ResultRow {
  std::string instance;
  std::string rule;
  double gap = 0.0;  // +inf when no initial bound was given
  std::uint64_t seed = 0;
  std::string status;
  std::int64_t tree_size = 0;
  double gap_remaining = 0.0;
  double wall_time = 0.0;

  bool operator==(const ResultRow&) const = default;
};

// Sort key (instance, rule, gap, seed).
bool row_less(const ResultRow& a, const ResultRow& b);

struct CampaignResult {
  std::vector<ResultRow> rows;  // sorted by row_less
  std::map<std::string, double> optima;
};

// Materializes instances (generating where needed) in campaign order.
std::vector<model::Instance> load_instances(const Campaign& c);

// Fills in missing reference optima by solving with def-sb. Instances whose
// bootstrap does not finish are left out.
std::map<std::string, double> bootstrap_optima(const std::vector<model::Instance>& instances,
                                               const Campaign& c);

// Runs every (instance, rule, gap, seed) on `parallelism` workers.
CampaignResult run_campaign(const Campaign& c, int parallelism);
CampaignResult run_campaign(const Campaign& c, const std::vector<model::Instance>& instances,
                            int parallelism);

std::string results_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_results_csv(const std::string& text);

std::string format_gap(double gap);

}  // namespace sblab::bench

#endif  // SBLAB_BENCH_CAMPAIGN_HPP_
