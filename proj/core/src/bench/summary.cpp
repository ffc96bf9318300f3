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

#include "sblab/bench/summary.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "sblab/bench/metrics.hpp"

namespace sblab::bench {

namespace {

// Shortest round-trip form, so the table can be checked against the CSV.
std::string number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string percent(double v) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(1);
  out << v << '%';
  return out.str();
}

std::string gap_label(double gap) {
  if (std::isinf(gap)) return "none";
  return percent(100.0 * gap);
}

bool is_solved(const std::string& status) { return status == "optimal" || status == "infeasible"; }

}  // namespace

std::string instance_family(const std::string& instance) {
  const auto dash = instance.rfind('-');
  if (dash == std::string::npos || dash + 1 == instance.size()) return instance;
  const bool numeric = std::all_of(instance.begin() + static_cast<std::ptrdiff_t>(dash) + 1,
                                   instance.end(), [](unsigned char ch) { return std::isdigit(ch); });
  return numeric ? instance.substr(0, dash) : instance;
}

std::vector<CellStats> aggregate(const std::vector<ResultRow>& rows, bool by_family) {
  struct Acc {
    CellStats stats;
    std::vector<double> trees;
    std::vector<double> gaps;
  };
  std::map<std::tuple<std::string, std::string, double>, Acc> cells;
  for (const ResultRow& r : rows) {
    const std::string family = by_family ? instance_family(r.instance) : "all";
    Acc& acc = cells[{family, r.rule, r.gap}];
    acc.stats.family = family;
    acc.stats.rule = r.rule;
    acc.stats.gap = r.gap;
    ++acc.stats.runs;
    if (r.status == "error") {
      ++acc.stats.errors;
    } else if (is_solved(r.status)) {
      ++acc.stats.solved;
      acc.trees.push_back(static_cast<double>(r.tree_size));
    } else {
      ++acc.stats.unsolved;
      acc.gaps.push_back(r.gap_remaining);
    }
  }
  std::vector<CellStats> out;
  for (auto& [key, acc] : cells) {
    if (!acc.trees.empty()) acc.stats.tree_geomean = shifted_geomean(acc.trees, kTreeShift);
    if (!acc.gaps.empty()) acc.stats.gap_geomean = shifted_geomean(acc.gaps, kGapShift);
    out.push_back(std::move(acc.stats));
  }
  return out;
}

std::optional<double> tree_reduction(const std::vector<CellStats>& cells,
                                     const std::string& family, const std::string& rule,
                                     double gap, const std::string& baseline) {
  const CellStats* mine = nullptr;
  const CellStats* same_gap = nullptr;
  const CellStats* lowest_gap = nullptr;
  for (const CellStats& c : cells) {
    if (c.family != family) continue;
    if (c.rule == rule && c.gap == gap) mine = &c;
    if (c.rule == baseline) {
      if (c.gap == gap) same_gap = &c;
      if (lowest_gap == nullptr || c.gap < lowest_gap->gap) lowest_gap = &c;
    }
  }
  const CellStats* base = same_gap != nullptr ? same_gap : lowest_gap;
  if (mine == nullptr || base == nullptr || !mine->tree_geomean || !base->tree_geomean ||
      *base->tree_geomean == 0.0) {
    return std::nullopt;
  }
  return pct_reduction(*base->tree_geomean, *mine->tree_geomean);
}

std::string summary_markdown(const std::vector<ResultRow>& rows, const std::string& baseline) {
  std::ostringstream out;
  auto table = [&](const std::vector<CellStats>& cells, bool with_family) {
    out << '|' << (with_family ? " Family |" : "")
        << " Rule | Primal gap | Runs | Solved | Tree size (sgm) | Unsolved | Gap remaining (sgm) "
           "| Tree reduction vs "
        << baseline << " |\n|" << (with_family ? "---|" : "")
        << "---|---|---:|---:|---:|---:|---:|---:|\n";
    for (const CellStats& c : cells) {
      const auto red = tree_reduction(cells, c.family, c.rule, c.gap, baseline);
      out << '|' << (with_family ? " " + c.family + " |" : "") << ' ' << c.rule << " | "
          << gap_label(c.gap) << " | " << c.runs << " | " << c.solved << " | "
          << (c.tree_geomean ? number(*c.tree_geomean) : "-") << " | " << c.unsolved << " | "
          << (c.gap_geomean ? percent(100.0 * *c.gap_geomean) + " (" + number(*c.gap_geomean) + ")"
                            : "-")
          << " | " << (red ? percent(*red) : "-") << " |\n";
    }
  };
  out << "# Campaign summary\n\n";
  out << "Tree sizes are shifted geometric means (shift 100) over solved runs. Gap remaining is "
         "the shifted geometric mean (shift 1%) over runs stopped by the node limit, relative to "
         "the root integrality gap.\n\n";
  out << "## Overall\n\n";
  table(aggregate(rows, false), false);
  out << "\n## By family\n\n";
  table(aggregate(rows, true), true);
  return out.str();
}

}  // namespace sblab::bench
