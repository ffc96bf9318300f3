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

// Command line front end: instance generation, single solves, campaigns and
// report regeneration.

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include "json.hpp"
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sblab/bench/campaign.hpp"
#include "sblab/bench/metrics.hpp"
#include "sblab/bench/summary.hpp"
#include "sblab/engine/solver.hpp"
#include "sblab/engine/telemetry.hpp"
#include "sblab/errors.hpp"
#include "sblab/generators/generators.hpp"
#include "sblab/model/json_codec.hpp"
#include "sblab/model/mps.hpp"
#include "sblab/rules/rule_config.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sblab::Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sblab::Error("cannot write " + path.string());
  out << text;
}

std::map<std::string, double> parse_overrides(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw sblab::ValidationError("override '" + item + "' lacks '='");
    try {
      out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw sblab::ValidationError("override '" + item + "' has a bad value");
    }
  }
  return out;
}

struct GenerateArgs {
  std::string kind;
  std::uint64_t seed = 0;
  int count = 1;
  std::vector<std::string> overrides;
  std::string out = ".";
  bool mps = false;
};

int run_generate(const GenerateArgs& a) {
  const auto overrides = parse_overrides(a.overrides);
  for (int i = 0; i < a.count; ++i) {
    const sblab::gen::GenSpec spec{a.kind, a.seed + static_cast<std::uint64_t>(i), overrides};
    const sblab::model::Instance inst = sblab::gen::generate(spec);
    const fs::path base = fs::path(a.out) / inst.name;
    write_file(base.string() + ".json", sblab::model::to_json(inst, 2) + "\n");
    if (a.mps) write_file(base.string() + ".mps", sblab::model::write_mps(inst));
    std::cout << base.string() << ".json: " << inst.num_vars() << " vars ("
              << inst.num_binaries() << " binary), " << inst.num_rows() << " rows\n";
  }
  return 0;
}

struct SolveArgs {
  std::string instance;
  std::string rule = "def-sb";
  std::optional<double> gap;
  std::optional<double> optimum;
  std::int64_t node_limit = 20000;
  std::uint64_t seed = 0;
  std::string telemetry;
  std::string report;
};

int run_solve(const SolveArgs& a) {
  const sblab::model::Instance inst = sblab::model::load_instance(a.instance);
  const sblab::rules::RuleConfig rule = sblab::rules::parse_rule(a.rule);
  sblab::engine::SolveOptions opt;
  opt.node_limit = a.node_limit;
  opt.seed = a.seed;
  std::optional<double> z_star = a.optimum;
  if (a.gap) {
    if (!z_star) {
      sblab::engine::SolveOptions boot;
      boot.node_limit = 1000000;
      boot.record_telemetry = false;
      const auto r = sblab::engine::solve(inst, sblab::rules::make_rule("def-sb"), boot);
      if (r.status != sblab::engine::SolveStatus::kOptimal) {
        throw sblab::Error("could not compute a reference optimum; pass --optimum");
      }
      z_star = r.user_primal();
    }
    std::string warning;
    opt.init_primal = sblab::engine::init_primal_bound(*z_star, *a.gap, inst.sense, &warning);
    if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
  }
  sblab::engine::SolveReport report = sblab::engine::solve(inst, rule, opt);
  if (z_star) report.gap_remaining = sblab::bench::gap_remaining(report, *z_star);
  const std::string json = sblab::engine::report_json(report) + "\n";
  if (a.report.empty()) {
    std::cout << json;
  } else {
    write_file(a.report, json);
  }
  if (!a.telemetry.empty()) write_file(a.telemetry, sblab::engine::telemetry_csv(report.telemetry));
  return report.status == sblab::engine::SolveStatus::kError ? 2 : 0;
}

struct BenchArgs {
  std::string config;
  std::optional<int> parallelism;
};

int run_bench(const BenchArgs& a) {
  sblab::bench::Campaign c = sblab::bench::load_campaign(a.config);
  const fs::path out_dir = c.output_dir;
  const fs::path cache = out_dir / "reference_optima.json";
  if (fs::exists(cache)) {
    const auto cached =
        nlohmann::json::parse(read_file(cache.string())).get<std::map<std::string, double>>();
    for (const auto& [name, value] : cached) c.reference_optima.emplace(name, value);
  }
  const int workers = a.parallelism.value_or(c.parallelism);
  const sblab::bench::CampaignResult result = sblab::bench::run_campaign(c, workers);
  nlohmann::ordered_json optima(result.optima);
  write_file(cache, optima.dump(2) + "\n");
  write_file(out_dir / "results.csv", sblab::bench::results_csv(result.rows));
  write_file(out_dir / "summary.md", sblab::bench::summary_markdown(result.rows, c.baseline));
  std::cout << "wrote " << result.rows.size() << " rows to " << (out_dir / "results.csv").string()
            << "\n";
  return 0;
}

struct ReportArgs {
  std::string csv;
  std::string baseline = "def-sb";
  std::string out;
};

int run_report(const ReportArgs& a) {
  const auto rows = sblab::bench::parse_results_csv(read_file(a.csv));
  const std::string md = sblab::bench::summary_markdown(rows, a.baseline);
  if (a.out.empty()) {
    std::cout << md;
  } else {
    write_file(a.out, md);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sblab: strong-branching score experiments on mixed-binary programs"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write random instances as JSON (and MPS)");
  g->add_option("--kind", gen.kind, "Problem class")
      ->required()
      ->check(CLI::IsMember(sblab::gen::generator_kinds()));
  g->add_option("--seed", gen.seed, "First seed");
  g->add_option("--count", gen.count, "Number of consecutive seeds")->check(CLI::PositiveNumber);
  g->add_option("--override", gen.overrides, "Dimension override key=value (repeatable)");
  g->add_option("--out", gen.out, "Output directory");
  g->add_flag("--mps", gen.mps, "Also write MPS files");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Branch-and-bound on one instance");
  s->add_option("--instance", solve.instance, "MPS or JSON instance")->required();
  s->add_option("--rule", solve.rule, "Rule name, optionally name:key=value,...");
  s->add_option("--gap", solve.gap, "Relative primal gap of the initial bound");
  s->add_option("--optimum", solve.optimum, "Known optimal value (instance sense)");
  s->add_option("--node-limit", solve.node_limit, "Maximum tree size")->check(CLI::PositiveNumber);
  s->add_option("--seed", solve.seed, "Seed recorded in the report");
  s->add_option("--telemetry", solve.telemetry, "Per-node CSV output");
  s->add_option("--report", solve.report, "JSON report output (default stdout)");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run a campaign");
  b->add_option("--config", bench.config, "Campaign JSON")->required();
  b->add_option("--parallelism", bench.parallelism, "Worker threads (overrides the config)");

  ReportArgs report;
  auto* r = app.add_subcommand("report", "Summarize a results CSV");
  r->add_option("--csv", report.csv, "results.csv")->required();
  r->add_option("--baseline", report.baseline, "Baseline rule for reductions");
  r->add_option("--out", report.out, "Markdown output (default stdout)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*g) return run_generate(gen);
    if (*s) return run_solve(solve);
    if (*b) return run_bench(bench);
    if (*r) return run_report(report);
  } catch (const std::exception& e) {
    std::cerr << "sblab: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
