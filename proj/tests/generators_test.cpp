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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <memory>
#include <set>
#include <string>

#include "sblab/errors.hpp"
#include "sblab/generators/generators.hpp"
#include "sblab/generators/graphs.hpp"
#include "sblab/generators/rng.hpp"
#include "sblab/model/json_codec.hpp"
#include "sblab/rules/cardinality.hpp"
#include "sblab/simplex/lp_model.hpp"
#include "sblab/simplex/simplex.hpp"

namespace sblab::gen {
namespace {

using model::Instance;
using model::Relation;

int count_kind(const Instance& inst, model::VarKind kind) {
  int c = 0;
  for (model::VarKind k : inst.var_kind) c += k == kind;
  return c;
}

// Dimensions small enough for the per-kind loops below.
std::map<std::string, double> small_dims(const std::string& kind) {
  static const std::map<std::string, std::map<std::string, double>> dims = {
      {"mdk_small", {{"n", 30}, {"m", 8}}},
      {"mdk_medium", {{"n", 30}, {"m", 8}}},
      {"mdk_large", {{"n", 30}, {"m", 8}}},
      {"lotsizing", {{"n", 8}}},
      {"bigbucket", {{"T", 4}, {"P", 2}}},
      {"matching", {{"nodes", 30}, {"edges", 60}}},
      {"weighted_coverage", {{"universe", 60}, {"sets", 20}, {"k", 4}}},
      {"portfolio_ccp", {{"n", 6}, {"m", 20}, {"k", 3}}},
      {"fcnf", {{"nodes", 10}, {"edges", 20}, {"commodities", 2}}},
      {"set_packing", {{"n", 30}, {"m", 60}}},
      {"set_covering", {{"n", 30}, {"m", 60}}},
      {"independent_set", {{"nodes", 40}}},
      {"cflp", {{"customers", 10}, {"facilities", 6}}},
      {"comb_auction", {{"items", 20}, {"bids", 50}}},
  };
  return dims.at(kind);
}

TEST(Generate, MdkSmallDefaults) {
  const Instance inst = generate({"mdk_small", 1, {}});
  EXPECT_EQ(inst.name, "mdk_small-1");
  EXPECT_EQ(inst.sense, model::Sense::kMaximize);
  EXPECT_EQ(inst.num_vars(), 100);
  EXPECT_EQ(inst.num_binaries(), 100);
  ASSERT_EQ(inst.num_rows(), 50);
  for (const model::Row& r : inst.rows) {
    double sum = 0.0;
    for (double a : r.values) sum += a;
    EXPECT_EQ(r.relation, Relation::kLessEqual);
    EXPECT_DOUBLE_EQ(r.rhs, std::floor(0.25 * sum));
  }
}

TEST(Generate, CapacityFractionsByLabel) {
  const std::map<std::string, double> fraction = {
      {"mdk_small", 0.25}, {"mdk_medium", 0.5}, {"mdk_large", 0.75}};
  for (const auto& [kind, f] : fraction) {
    const Instance inst = generate({kind, 9, {}});
    for (const model::Row& r : inst.rows) {
      double sum = 0.0;
      for (double a : r.values) sum += a;
      EXPECT_DOUBLE_EQ(r.rhs, std::floor(f * sum)) << kind;
    }
  }
}

TEST(Generate, SetCoveringDefaults) {
  const Instance inst = generate({"set_covering", 1, {}});
  EXPECT_EQ(inst.num_binaries(), 300);
  EXPECT_EQ(inst.num_vars(), 300);
  ASSERT_EQ(inst.num_rows(), 3000);
  for (const model::Row& r : inst.rows) {
    EXPECT_EQ(r.relation, Relation::kGreaterEqual);
    EXPECT_DOUBLE_EQ(r.rhs, 1.0);
    EXPECT_FALSE(r.indices.empty());
    for (double a : r.values) EXPECT_DOUBLE_EQ(a, 1.0);
  }
}

TEST(Generate, SetPackingShape) {
  const Instance inst = generate({"set_packing", 4, {}});
  EXPECT_EQ(inst.num_binaries(), 200);
  ASSERT_EQ(inst.num_rows(), 1000);
  for (const model::Row& r : inst.rows) {
    EXPECT_EQ(r.relation, Relation::kLessEqual);
    EXPECT_DOUBLE_EQ(r.rhs, 1.0);
    for (double a : r.values) EXPECT_DOUBLE_EQ(a, 1.0);
  }
}

TEST(Generate, DefaultDimensions) {
  EXPECT_EQ(generate({"matching", 1, {}}).num_binaries(), 1000);
  EXPECT_EQ(generate({"weighted_coverage", 1, {}}).num_binaries(), 200);
  EXPECT_EQ(generate({"fcnf", 1, {}}).num_binaries(), 150);
  EXPECT_EQ(generate({"independent_set", 1, {}}).num_binaries(), 500);
  EXPECT_EQ(generate({"cflp", 1, {}}).num_binaries(), 100);
  EXPECT_EQ(generate({"comb_auction", 1, {}}).num_binaries(), 1000);
  const Instance big = generate({"bigbucket", 1, {}});
  EXPECT_EQ(big.num_binaries(), 30);
  EXPECT_EQ(count_kind(big, model::VarKind::kContinuous), 60);
  const Instance port = generate({"portfolio_ccp", 1, {}});
  EXPECT_EQ(port.num_binaries(), 100);
  EXPECT_EQ(count_kind(port, model::VarKind::kContinuous), 20);
}

TEST(Generate, PackingFamiliesUseUnitRows) {
  for (const std::string kind : {"matching", "independent_set", "comb_auction"}) {
    const Instance inst = generate({kind, 2, small_dims(kind)});
    EXPECT_EQ(inst.sense, model::Sense::kMaximize) << kind;
    EXPECT_EQ(inst.num_binaries(), inst.num_vars()) << kind;
    for (const model::Row& r : inst.rows) {
      EXPECT_EQ(r.relation, Relation::kLessEqual) << kind;
      EXPECT_DOUBLE_EQ(r.rhs, 1.0) << kind;
      for (double a : r.values) EXPECT_DOUBLE_EQ(a, 1.0) << kind;
    }
  }
}

TEST(Generate, IndependentSetCliquesCoverEveryEdge) {
  Rng rng(3);
  const auto edges = barabasi_albert(rng, 60, 4);
  const auto cliques = clique_cover(60, edges);
  std::set<Edge> covered;
  std::set<Edge> all(edges.begin(), edges.end());
  for (const auto& c : cliques) {
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        const Edge e{std::min(c[a], c[b]), std::max(c[a], c[b])};
        EXPECT_TRUE(all.count(e)) << "clique uses a non-edge";
        covered.insert(e);
      }
    }
  }
  EXPECT_EQ(covered, all);
}

TEST(Generate, Determinism) {
  for (const std::string& kind : generator_kinds()) {
    const GenSpec spec{kind, 17, small_dims(kind)};
    EXPECT_EQ(model::to_json(generate(spec)), model::to_json(generate(spec))) << kind;
  }
}

TEST(Generate, RejectsBadOverrides) {
  EXPECT_THROW(generate({"matching", 1, {{"nodes", 5}, {"edges", 11}}}), ValidationError);
  EXPECT_THROW(generate({"mdk_small", 1, {{"bogus", 3}}}), ValidationError);
  EXPECT_THROW(generate({"no_such_kind", 1, {}}), ValidationError);
  EXPECT_THROW(generate({"mdk_small", 1, {{"n", 2.5}}}), ValidationError);
}

TEST(SampleSuite, Examples) {
  const auto suite = sample_suite("mdk_large", 20, 7);
  ASSERT_EQ(suite.size(), 20u);
  std::set<std::string> distinct;
  for (const Instance& inst : suite) distinct.insert(model::to_json(inst));
  EXPECT_EQ(distinct.size(), 20u);
  EXPECT_EQ(suite.front().name, "mdk_large-7");
  EXPECT_EQ(suite.back().name, "mdk_large-26");

  const auto lot = sample_suite("lotsizing", 1, 0);
  ASSERT_EQ(lot.size(), 1u);
  EXPECT_EQ(lot[0].num_binaries(), 30);
  EXPECT_EQ(count_kind(lot[0], model::VarKind::kContinuous), 59);

  const auto a = sample_suite("portfolio_ccp", 2, 5);
  const auto b = sample_suite("portfolio_ccp", 2, 5);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a, b);
}

TEST(Generate, MdkDensityAndCoefficients) {
  double nonzeros = 0.0, entries = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = generate({"mdk_medium", seed, {}});
    for (const model::Row& r : inst.rows) {
      nonzeros += static_cast<double>(r.size());
      entries += inst.num_vars();
      for (double a : r.values) {
        EXPECT_GE(a, 1);
        EXPECT_LE(a, 200);
        EXPECT_EQ(a, std::floor(a));
      }
    }
    for (double c : inst.objective) {
      EXPECT_GE(c, 1);
      EXPECT_LE(c, 200);
    }
  }
  const double density = nonzeros / entries;
  EXPECT_GE(density, 0.03);
  EXPECT_LE(density, 0.07);
}

TEST(Generate, PortfolioHasCardinalityRow) {
  const Instance inst = generate({"portfolio_ccp", 3, small_dims("portfolio_ccp")});
  const auto row = rules::detect_cardinality(inst);
  ASSERT_TRUE(row.has_value());
  EXPECT_DOUBLE_EQ(inst.rows[*row].rhs, 3.0);
}

// Every kind's root LP is feasible and bounded.
TEST(Generate, RootLpSolvable) {
  for (const std::string& kind : generator_kinds()) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Instance inst = generate({kind, seed, small_dims(kind)});
      const lp::LpView view(std::make_shared<lp::LpModel>(inst));
      EXPECT_EQ(lp::solve_root(view).status, lp::LpStatus::kOptimal) << inst.name;
    }
  }
}

TEST(Rng, Ranges) {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto v = rng.uniform_int(-3, 4);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 4);
    const double u = rng.uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  const std::vector<double> w = {0.0, 1.0, 0.0};
  EXPECT_EQ(rng.weighted_index(w), 1u);
}

}  // namespace
}  // namespace sblab::gen
