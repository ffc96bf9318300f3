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

#include "sblab/bench/campaign.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include "json.hpp"
#include <sstream>
#include <thread>
#include <tuple>

#include "sblab/bench/metrics.hpp"
#include "sblab/engine/solver.hpp"
#include "sblab/errors.hpp"
#include "sblab/model/json_codec.hpp"
#include "sblab/rules/rule_config.hpp"

namespace sblab::bench {

namespace {

using nlohmann::json;

std::string number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_number(const std::string& text) {
  if (text == "inf") return model::kInf;
  if (text == "-inf") return -model::kInf;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad number '" + text + "'");
  }
  return v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  return fields;
}

gen::GenSpec parse_spec(const json& j, std::uint64_t seed) {
  gen::GenSpec spec;
  spec.kind = j.at("kind").get<std::string>();
  spec.seed = seed;
  if (j.contains("overrides")) {
    for (const auto& [key, value] : j.at("overrides").items()) spec.overrides[key] = value.get<double>();
  }
  return spec;
}

}  // namespace

std::string format_gap(double gap) { return number(gap); }

void Campaign::validate() const {
  if (instances.empty()) throw ValidationError("campaign has no instances");
  if (rules.empty()) throw ValidationError("campaign has no rules");
  if (primal_gaps.empty()) throw ValidationError("campaign has no primal gaps");
  if (seeds.empty()) throw ValidationError("campaign has no seeds");
  if (node_limit < 1) throw ValidationError("node_limit must be at least 1");
  if (parallelism < 1) throw ValidationError("parallelism must be at least 1");
  for (double g : primal_gaps) {
    if (!(g >= 0.0)) throw ValidationError("primal gaps must be nonnegative");
  }
  for (const std::string& r : rules) rules::parse_rule(r);
}

Campaign parse_campaign(const std::string& json_text, const std::string& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("campaign: ") + e.what(), 0);
  }
  Campaign c;
  try {
    for (const json& item : j.at("instances")) {
      if (item.is_string()) {
        std::filesystem::path p = item.get<std::string>();
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        c.instances.push_back({p.lexically_normal().string(), std::nullopt});
      } else if (item.contains("count")) {
        const int count = item.at("count").get<int>();
        const auto base = item.value("base_seed", std::uint64_t{0});
        for (int i = 0; i < count; ++i) {
          c.instances.push_back({"", parse_spec(item, base + static_cast<std::uint64_t>(i))});
        }
      } else {
        c.instances.push_back({"", parse_spec(item, item.value("seed", std::uint64_t{0}))});
      }
    }
    c.rules = j.at("rules").get<std::vector<std::string>>();
    if (j.contains("primal_gaps")) {
      c.primal_gaps.clear();
      for (const json& g : j.at("primal_gaps")) {
        c.primal_gaps.push_back(g.is_null() ? model::kInf : g.get<double>());
      }
    }
    if (j.contains("seeds")) c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    c.node_limit = j.value("node_limit", c.node_limit);
    if (j.contains("reference_optima")) {
      c.reference_optima = j.at("reference_optima").get<std::map<std::string, double>>();
    }
    c.parallelism = j.value("parallelism", c.parallelism);
    c.output_dir = j.value("output_dir", c.output_dir);
    if (std::filesystem::path(c.output_dir).is_relative()) {
      c.output_dir = (std::filesystem::path(base_dir) / c.output_dir).lexically_normal().string();
    }
    c.baseline = j.value("baseline", c.baseline);
    c.record_wall_time = j.value("record_wall_time", c.record_wall_time);
    c.bootstrap_node_limit = j.value("bootstrap_node_limit", c.bootstrap_node_limit);
  } catch (const json::exception& e) {
    throw ParseError(std::string("campaign: ") + e.what(), 0);
  }
  c.validate();
  return c;
}

Campaign load_campaign(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open campaign file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_campaign(ss.str(), dir.empty() ? "." : dir.string());
}

bool row_less(const ResultRow& a, const ResultRow& b) {
  return std::tie(a.instance, a.rule, a.gap, a.seed) < std::tie(b.instance, b.rule, b.gap, b.seed);
}

std::vector<model::Instance> load_instances(const Campaign& c) {
  std::vector<model::Instance> out;
  out.reserve(c.instances.size());
  for (const InstanceSource& src : c.instances) {
    out.push_back(src.spec ? gen::generate(*src.spec) : model::load_instance(src.path));
  }
  return out;
}

std::map<std::string, double> bootstrap_optima(const std::vector<model::Instance>& instances,
                                               const Campaign& c) {
  std::map<std::string, double> optima = c.reference_optima;
  const rules::RuleConfig rule = rules::make_rule("def-sb");
  for (const model::Instance& inst : instances) {
    if (optima.count(inst.name)) continue;
    engine::SolveOptions opt;
    opt.node_limit = c.bootstrap_node_limit;
    opt.record_telemetry = false;
    const engine::SolveReport r = engine::solve(inst, rule, opt);
    if (r.status == engine::SolveStatus::kOptimal) optima[inst.name] = r.user_primal();
  }
  return optima;
}

CampaignResult run_campaign(const Campaign& c, int parallelism) {
  c.validate();
  return run_campaign(c, load_instances(c), parallelism);
}

CampaignResult run_campaign(const Campaign& c, const std::vector<model::Instance>& instances,
                            int parallelism) {
  c.validate();
  if (parallelism < 1) throw ContractViolation("parallelism must be at least 1");
  CampaignResult result;
  bool needs_optima = false;
  for (double g : c.primal_gaps) needs_optima = needs_optima || std::isfinite(g);
  result.optima = needs_optima ? bootstrap_optima(instances, c) : c.reference_optima;

  struct Job {
    const model::Instance* inst;
    std::string rule;
    double gap;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (const model::Instance& inst : instances) {
    for (const std::string& rule : c.rules) {
      for (double gap : c.primal_gaps) {
        for (std::uint64_t seed : c.seeds) jobs.push_back({&inst, rule, gap, seed});
      }
    }
  }
  std::vector<ResultRow> rows(jobs.size());

  auto run_job = [&](const Job& job) {
    ResultRow row;
    row.instance = job.inst->name;
    row.rule = job.rule;
    row.gap = job.gap;
    row.seed = job.seed;
    const auto optimum = result.optima.find(job.inst->name);
    const bool have_optimum = optimum != result.optima.end();
    try {
      engine::SolveOptions opt;
      opt.node_limit = c.node_limit;
      opt.seed = job.seed;
      opt.record_telemetry = false;
      if (std::isfinite(job.gap)) {
        if (!have_optimum) throw Error("no reference optimum for " + job.inst->name);
        opt.init_primal = engine::init_primal_bound(optimum->second, job.gap, job.inst->sense);
      }
      const auto start = std::chrono::steady_clock::now();
      const engine::SolveReport report = engine::solve(*job.inst, rules::parse_rule(job.rule), opt);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      row.status = std::string(engine::to_string(report.status));
      row.tree_size = report.tree_size;
      row.gap_remaining =
          have_optimum ? gap_remaining(report, optimum->second) : report.gap_remaining;
      if (report.status == engine::SolveStatus::kError) row.gap_remaining = 1.0;
      row.wall_time = c.record_wall_time ? elapsed.count() : 0.0;
    } catch (const std::exception& e) {
      row.status = "error";
      row.tree_size = 0;
      row.gap_remaining = 1.0;
    }
    return row;
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) rows[i] = run_job(jobs[i]);
  };
  const int threads = std::min<int>(parallelism, static_cast<int>(std::max<std::size_t>(jobs.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  std::sort(rows.begin(), rows.end(), row_less);
  result.rows = std::move(rows);
  return result;
}

std::string results_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  out << "instance,rule,gap,seed,status,tree_size,gap_remaining,wall_time\n";
  for (const ResultRow& r : rows) {
    out << csv_field(r.instance) << ',' << csv_field(r.rule) << ',' << number(r.gap) << ',' << r.seed << ','
        << r.status << ',' << r.tree_size << ',' << number(r.gap_remaining) << ','
        << number(r.wall_time) << '\n';
  }
  return out.str();
}

std::vector<ResultRow> parse_results_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<ResultRow> rows;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 || line.empty()) continue;
    if (line.back() == '\r') line.pop_back();
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 8) throw ParseError("results CSV row needs 8 fields", line_no);
    try {
      ResultRow r;
      r.instance = f[0];
      r.rule = f[1];
      r.gap = parse_number(f[2]);
      r.seed = std::stoull(f[3]);
      r.status = f[4];
      r.tree_size = std::stoll(f[5]);
      r.gap_remaining = parse_number(f[6]);
      r.wall_time = parse_number(f[7]);
      rows.push_back(std::move(r));
    } catch (const std::logic_error& e) {
      throw ParseError(std::string("bad field in results CSV: ") + e.what(), line_no);
    }
  }
  return rows;
}

}  // namespace sblab::bench
