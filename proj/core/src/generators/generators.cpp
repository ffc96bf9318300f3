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

#include "sblab/generators/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "sblab/errors.hpp"
#include "sblab/generators/graphs.hpp"
#include "sblab/generators/rng.hpp"
#include "sblab/simplex/simplex.hpp"

namespace sblab::gen {

namespace {

using model::Bounds;
using model::Instance;
using model::kInf;
using model::Relation;
using model::Sense;
using model::VarKind;

constexpr int kMaxResamples = 1000;

class Builder {
 public:
  Builder(std::string name, Sense sense) {
    inst_.name = std::move(name);
    inst_.sense = sense;
  }

  int binary(double cost) { return add(cost, {0.0, 1.0}, VarKind::kBinary); }
  int continuous(double cost, double lo = 0.0, double hi = kInf) {
    return add(cost, {lo, hi}, VarKind::kContinuous);
  }

  void row(std::vector<std::pair<int, double>> terms, Relation rel, double rhs) {
    model::Row r;
    r.relation = rel;
    r.rhs = rhs;
    for (const auto& [j, a] : terms) {
      if (a == 0.0) continue;
      r.indices.push_back(j);
      r.values.push_back(a);
    }
    inst_.rows.push_back(std::move(r));
  }

  void set_bounds(int j, Bounds b) { inst_.bounds[j] = b; }
  Instance take() { return std::move(inst_); }

 private:
  int add(double cost, Bounds b, VarKind kind) {
    inst_.objective.push_back(cost);
    inst_.bounds.push_back(b);
    inst_.var_kind.push_back(kind);
    return inst_.num_vars() - 1;
  }

  Instance inst_;
};

// Reads overrides against the kind's defaults.
class Dims {
 public:
  Dims(const GenSpec& spec, std::map<std::string, double> defaults) : values_(std::move(defaults)) {
    for (const auto& [key, value] : spec.overrides) {
      auto it = values_.find(key);
      if (it == values_.end()) {
        throw ValidationError("generator '" + spec.kind + "' has no override '" + key + "'");
      }
      if (!std::isfinite(value)) throw ValidationError("override '" + key + "' is not finite");
      it->second = value;
    }
  }

  int count(const std::string& key, int min) const {
    const double v = values_.at(key);
    if (v != std::floor(v) || v < min || v > 1e8) {
      throw ValidationError("override '" + key + "' must be an integer >= " + std::to_string(min));
    }
    return static_cast<int>(v);
  }
  double real(const std::string& key) const { return values_.at(key); }

 private:
  std::map<std::string, double> values_;
};

bool root_lp_feasible(const Instance& inst) {
  auto lp_model = std::make_shared<const lp::LpModel>(inst);
  const lp::LpOutcome out = lp::solve_root(lp::LpView(lp_model));
  return out.status == lp::LpStatus::kOptimal;
}

template <class Draw>
Instance resample_until_feasible(Rng& rng, Draw draw, const std::string& kind) {
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    Instance inst = draw(rng);
    if (root_lp_feasible(inst)) return inst;
  }
  throw ValidationError("generator '" + kind + "' found no LP-feasible instance");
}

Instance multi_knapsack(Rng& rng, const Dims& d, double fraction, const std::string& name) {
  const int n = d.count("n", 1);
  const int m = d.count("m", 1);
  Builder b(name, Sense::kMaximize);
  for (int j = 0; j < n; ++j) b.binary(static_cast<double>(rng.uniform_int(1, 200)));
  for (int i = 0; i < m; ++i) {
    std::vector<std::pair<int, double>> terms;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (rng.bernoulli(0.95)) continue;
      const double a = static_cast<double>(rng.uniform_int(1, 200));
      terms.emplace_back(j, a);
      sum += a;
    }
    b.row(std::move(terms), Relation::kLessEqual, std::floor(fraction * sum));
  }
  return b.take();
}

Instance lotsizing(Rng& rng, const Dims& d, const std::string& name) {
  const int n = d.count("n", 2);
  std::vector<double> c(n), f(n), h(n), dem(n), u(n);
  for (int i = 0; i < n; ++i) {
    c[i] = static_cast<double>(rng.uniform_int(1, 10));
    f[i] = static_cast<double>(rng.uniform_int(300, 600));
    h[i] = static_cast<double>(rng.uniform_int(1, 10));
    dem[i] = static_cast<double>(rng.uniform_int(50, 100));
    u[i] = static_cast<double>(rng.uniform_int(150, 250));
  }
  Builder b(name, Sense::kMinimize);
  std::vector<int> x(n), y(n), s(n - 1);
  for (int i = 0; i < n; ++i) x[i] = b.continuous(c[i]);
  for (int i = 0; i < n; ++i) y[i] = b.binary(f[i]);
  for (int i = 0; i + 1 < n; ++i) s[i] = b.continuous(h[i]);
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<int, double>> terms = {{x[i], 1.0}};
    if (i > 0) terms.emplace_back(s[i - 1], 1.0);
    if (i + 1 < n) terms.emplace_back(s[i], -1.0);
    b.row(std::move(terms), Relation::kEqual, dem[i]);
  }
  double remaining = std::accumulate(dem.begin(), dem.end(), 0.0);
  for (int i = 0; i < n; ++i) {
    b.row({{x[i], 1.0}, {y[i], -remaining}}, Relation::kLessEqual, 0.0);
    remaining -= dem[i];
  }
  for (int i = 0; i < n; ++i) b.row({{x[i], 1.0}, {y[i], -u[i]}}, Relation::kLessEqual, 0.0);
  return b.take();
}

Instance bigbucket(Rng& rng, const Dims& d, const std::string& name) {
  const int periods = d.count("T", 1);
  const int products = d.count("P", 1);
  return resample_until_feasible(rng, [&](Rng& r) {
    // Index [p][i] for product p, period i.
    auto table = [&](std::int64_t lo, std::int64_t hi) {
      std::vector<std::vector<double>> t(products, std::vector<double>(periods));
      for (auto& row : t) {
        for (double& v : row) v = static_cast<double>(r.uniform_int(lo, hi));
      }
      return t;
    };
    const auto setup = table(200, 500);
    const auto unit = table(1, 10);
    std::vector<double> cap(periods);
    for (double& v : cap) v = static_cast<double>(r.uniform_int(1500, 3000));
    const auto fixed = table(300, 600);
    const auto hold = table(1, 10);
    const auto demand = table(0, 100);
    std::vector<double> initial(products);
    for (double& v : initial) v = static_cast<double>(r.uniform_int(0, 200));

    Builder b(name, Sense::kMinimize);
    std::vector<std::vector<int>> x(products), y(products), s(products);
    for (int p = 0; p < products; ++p) {
      for (int i = 0; i < periods; ++i) x[p].push_back(b.continuous(0.0));
      for (int i = 0; i < periods; ++i) y[p].push_back(b.binary(fixed[p][i]));
      for (int i = 0; i < periods; ++i) s[p].push_back(b.continuous(hold[p][i]));
      b.set_bounds(s[p][periods - 1], {0.0, 0.0});
    }
    for (int p = 0; p < products; ++p) {
      double remaining = std::accumulate(demand[p].begin(), demand[p].end(), 0.0);
      for (int i = 0; i < periods; ++i) {
        // s_{i-1} + x_i - s_i = d_i, with s_0 the initial inventory.
        std::vector<std::pair<int, double>> terms = {{x[p][i], 1.0}, {s[p][i], -1.0}};
        double rhs = demand[p][i];
        if (i > 0) {
          terms.emplace_back(s[p][i - 1], 1.0);
        } else {
          rhs -= initial[p];
        }
        b.row(std::move(terms), Relation::kEqual, rhs);
      }
      for (int i = 0; i < periods; ++i) {
        b.row({{x[p][i], 1.0}, {y[p][i], -remaining}}, Relation::kLessEqual, 0.0);
        remaining -= demand[p][i];
      }
    }
    for (int i = 0; i < periods; ++i) {
      std::vector<std::pair<int, double>> terms;
      for (int p = 0; p < products; ++p) {
        terms.emplace_back(y[p][i], setup[p][i]);
        terms.emplace_back(x[p][i], unit[p][i]);
      }
      b.row(std::move(terms), Relation::kLessEqual, cap[i]);
    }
    return b.take();
  }, "bigbucket");
}

Instance matching(Rng& rng, const Dims& d, const std::string& name) {
  const int nodes = d.count("nodes", 2);
  const int edge_count = d.count("edges", 1);
  const std::vector<Edge> edges = geometric_graph(rng, nodes, edge_count);
  Builder b(name, Sense::kMaximize);
  std::vector<std::vector<std::pair<int, double>>> incident(nodes);
  for (const auto& [u, v] : edges) {
    const int x = b.binary(rng.uniform01());
    incident[u].emplace_back(x, 1.0);
    incident[v].emplace_back(x, 1.0);
  }
  for (auto& terms : incident) {
    if (!terms.empty()) b.row(std::move(terms), Relation::kLessEqual, 1.0);
  }
  return b.take();
}

Instance weighted_coverage(Rng& rng, const Dims& d, const std::string& name) {
  const int universe = d.count("universe", 1);
  const int sets = d.count("sets", 1);
  const int k = d.count("k", 1);
  constexpr double kMembership = 0.03;
  std::vector<std::vector<int>> containing(universe);
  for (int s = 0; s < sets; ++s) {
    for (int e = 0; e < universe; ++e) {
      if (rng.bernoulli(kMembership)) containing[e].push_back(s);
    }
  }
  Builder b(name, Sense::kMaximize);
  std::vector<int> x(sets);
  for (int s = 0; s < sets; ++s) x[s] = b.binary(0.0);
  std::vector<int> y(universe);
  for (int e = 0; e < universe; ++e) y[e] = b.continuous(rng.uniform01(), 0.0, 1.0);
  for (int e = 0; e < universe; ++e) {
    std::vector<std::pair<int, double>> terms = {{y[e], 1.0}};
    for (int s : containing[e]) terms.emplace_back(x[s], -1.0);
    b.row(std::move(terms), Relation::kLessEqual, 0.0);
  }
  std::vector<std::pair<int, double>> card;
  for (int s = 0; s < sets; ++s) card.emplace_back(x[s], 1.0);
  b.row(std::move(card), Relation::kLessEqual, k);
  return b.take();
}

Instance portfolio(Rng& rng, const Dims& d, const std::string& name) {
  const int n = d.count("n", 1);
  const int m = d.count("m", 1);
  const int k = d.count("k", 0);
  constexpr double kReturn = 1.1;
  Builder b(name, Sense::kMinimize);
  std::vector<int> x(n), z(m);
  for (int j = 0; j < n; ++j) x[j] = b.continuous(1.0);
  for (int i = 0; i < m; ++i) z[i] = b.binary(0.0);
  for (int i = 0; i < m; ++i) {
    std::vector<std::pair<int, double>> terms;
    for (int j = 0; j < n; ++j) terms.emplace_back(x[j], rng.uniform(0.8, 1.5));
    terms.emplace_back(z[i], kReturn);
    b.row(std::move(terms), Relation::kGreaterEqual, kReturn);
  }
  std::vector<std::pair<int, double>> card;
  for (int i = 0; i < m; ++i) card.emplace_back(z[i], 1.0);
  b.row(std::move(card), Relation::kLessEqual, k);
  return b.take();
}

Instance fcnf(Rng& rng, const Dims& d, const std::string& name) {
  const int nodes = d.count("nodes", 2);
  const int edge_count = d.count("edges", 1);
  const int commodities = d.count("commodities", 1);
  return resample_until_feasible(rng, [&](Rng& r) {
    const std::vector<Edge> edges = geometric_graph(r, nodes, edge_count);
    std::vector<int> source(commodities), sink(commodities);
    std::vector<double> demand(commodities);
    for (int p = 0; p < commodities; ++p) {
      source[p] = static_cast<int>(r.uniform_int(0, nodes - 1));
      sink[p] = static_cast<int>(r.uniform_int(0, nodes - 2));
      if (sink[p] >= source[p]) ++sink[p];
      demand[p] = static_cast<double>(r.uniform_int(100, 300));
    }
    const double total = std::accumulate(demand.begin(), demand.end(), 0.0);
    const int m = static_cast<int>(edges.size());
    std::vector<double> unit(m), fixed(m), cap(m);
    for (int e = 0; e < m; ++e) {
      unit[e] = static_cast<double>(r.uniform_int(3, 10));
      fixed[e] = static_cast<double>(r.uniform_int(static_cast<std::int64_t>(3 * total),
                                                   static_cast<std::int64_t>(8 * total)));
      cap[e] = static_cast<double>(r.uniform_int(90, 240));
    }

    Builder b(name, Sense::kMinimize);
    std::vector<int> y(m);
    for (int e = 0; e < m; ++e) y[e] = b.binary(fixed[e]);
    std::vector<std::vector<int>> x(commodities), z(commodities);
    for (int p = 0; p < commodities; ++p) {
      for (int e = 0; e < m; ++e) x[p].push_back(b.continuous(0.0, -1.0, 1.0));
      for (int e = 0; e < m; ++e) z[p].push_back(b.continuous(demand[p] * unit[e], 0.0, 1.0));
    }
    for (int p = 0; p < commodities; ++p) {
      std::vector<std::vector<std::pair<int, double>>> balance(nodes);
      for (int e = 0; e < m; ++e) {
        balance[edges[e].first].emplace_back(x[p][e], 1.0);
        balance[edges[e].second].emplace_back(x[p][e], -1.0);
      }
      for (int v = 0; v < nodes; ++v) {
        const double rhs = (v == source[p] ? 1.0 : 0.0) - (v == sink[p] ? 1.0 : 0.0);
        b.row(std::move(balance[v]), Relation::kEqual, rhs);
      }
    }
    for (int e = 0; e < m; ++e) {
      std::vector<std::pair<int, double>> terms;
      for (int p = 0; p < commodities; ++p) terms.emplace_back(z[p][e], demand[p]);
      terms.emplace_back(y[e], -cap[e]);
      b.row(std::move(terms), Relation::kLessEqual, 0.0);
    }
    for (int p = 0; p < commodities; ++p) {
      for (int e = 0; e < m; ++e) {
        b.row({{z[p][e], 1.0}, {x[p][e], -1.0}}, Relation::kGreaterEqual, 0.0);
        b.row({{z[p][e], 1.0}, {x[p][e], 1.0}}, Relation::kGreaterEqual, 0.0);
      }
    }
    return b.take();
  }, "fcnf");
}

Instance set_system(Rng& rng, const Dims& d, bool covering, const std::string& name) {
  const int n = d.count("n", 25);
  const int m = d.count("m", 1);
  const std::int64_t lo = 2 * n / 25 + 1;
  const std::int64_t hi = std::max<std::int64_t>(lo, 3 * n / 25 - 1);
  Builder b(name, covering ? Sense::kMinimize : Sense::kMaximize);
  for (int j = 0; j < n; ++j) b.binary(static_cast<double>(rng.uniform_int(1, 100)));
  for (int i = 0; i < m; ++i) {
    const double p = static_cast<double>(rng.uniform_int(lo, hi)) / n;
    std::vector<std::pair<int, double>> terms;
    // Empty rows are redrawn: an empty covering row would be infeasible.
    while (terms.empty()) {
      for (int j = 0; j < n; ++j) {
        if (rng.bernoulli(p)) terms.emplace_back(j, 1.0);
      }
    }
    b.row(std::move(terms), covering ? Relation::kGreaterEqual : Relation::kLessEqual, 1.0);
  }
  return b.take();
}

Instance independent_set(Rng& rng, const Dims& d, const std::string& name) {
  const int nodes = d.count("nodes", 2);
  const int affinity = d.count("affinity", 1);
  const std::vector<Edge> edges = barabasi_albert(rng, nodes, affinity);
  Builder b(name, Sense::kMaximize);
  for (int v = 0; v < nodes; ++v) b.binary(1.0);
  for (const std::vector<int>& clique : clique_cover(nodes, edges)) {
    std::vector<std::pair<int, double>> terms;
    for (int v : clique) terms.emplace_back(v, 1.0);
    b.row(std::move(terms), Relation::kLessEqual, 1.0);
  }
  return b.take();
}

Instance facility_location(Rng& rng, const Dims& d, const std::string& name) {
  const int customers = d.count("customers", 1);
  const int facilities = d.count("facilities", 1);
  const double ratio = d.real("ratio");
  if (!(ratio > 0.0)) throw ValidationError("override 'ratio' must be positive");
  auto uniform_vector = [&](int size) {
    std::vector<double> v(size);
    for (double& e : v) e = rng.uniform01();
    return v;
  };
  const auto cx = uniform_vector(customers);
  const auto cy = uniform_vector(customers);
  const auto fx = uniform_vector(facilities);
  const auto fy = uniform_vector(facilities);
  std::vector<double> demand(customers), capacity(facilities), fixed(facilities);
  for (double& v : demand) v = static_cast<double>(rng.uniform_int(5, 35));
  for (double& v : capacity) v = static_cast<double>(rng.uniform_int(10, 160));
  std::vector<double> scale(facilities), offset(facilities);
  for (double& v : scale) v = static_cast<double>(rng.uniform_int(100, 110));
  for (double& v : offset) v = static_cast<double>(rng.uniform_int(0, 90));
  for (int j = 0; j < facilities; ++j) {
    fixed[j] = std::trunc(scale[j] * std::sqrt(capacity[j]) + offset[j]);
  }
  const double total_demand = std::accumulate(demand.begin(), demand.end(), 0.0);
  const double total_capacity = std::accumulate(capacity.begin(), capacity.end(), 0.0);
  for (double& v : capacity) v = std::trunc(v * ratio * total_demand / total_capacity);

  Builder b(name, Sense::kMinimize);
  std::vector<std::vector<int>> x(customers, std::vector<int>(facilities));
  for (int i = 0; i < customers; ++i) {
    for (int j = 0; j < facilities; ++j) {
      const double dist = std::hypot(cx[i] - fx[j], cy[i] - fy[j]);
      x[i][j] = b.continuous(dist * 10.0 * demand[i], 0.0, 1.0);
    }
  }
  std::vector<int> y(facilities);
  for (int j = 0; j < facilities; ++j) y[j] = b.binary(fixed[j]);
  for (int i = 0; i < customers; ++i) {
    std::vector<std::pair<int, double>> terms;
    for (int j = 0; j < facilities; ++j) terms.emplace_back(x[i][j], 1.0);
    b.row(std::move(terms), Relation::kEqual, 1.0);
  }
  for (int j = 0; j < facilities; ++j) {
    std::vector<std::pair<int, double>> terms;
    for (int i = 0; i < customers; ++i) terms.emplace_back(x[i][j], demand[i]);
    terms.emplace_back(y[j], -capacity[j]);
    b.row(std::move(terms), Relation::kLessEqual, 0.0);
  }
  return b.take();
}

// Arbitrary-relationships combinatorial auction (Leyton-Brown et al.) with the
// Ecole default parameters.
Instance combinatorial_auction(Rng& rng, const Dims& d, const std::string& name) {
  const int items = d.count("items", 1);
  const int bid_target = d.count("bids", 1);
  constexpr double kMinValue = 1.0;
  constexpr double kMaxValue = 100.0;
  constexpr double kValueDeviation = 0.5;
  constexpr double kAddItemProb = 0.65;
  constexpr std::size_t kMaxSubBids = 5;
  constexpr double kAdditivity = 0.2;
  constexpr double kBudgetFactor = 1.5;
  constexpr double kResaleFactor = 0.5;

  std::vector<double> values(items);
  for (double& v : values) v = kMinValue + (kMaxValue - kMinValue) * rng.uniform01();

  std::vector<std::vector<double>> compat(items, std::vector<double>(items, 0.0));
  for (int i = 0; i < items; ++i) {
    for (int j = 0; j < items; ++j) {
      const double u = rng.uniform01();
      if (j > i) compat[i][j] = u;
    }
  }
  for (int i = 0; i < items; ++i) {
    for (int j = i + 1; j < items; ++j) compat[j][i] = compat[i][j];
  }
  std::vector<double> row_sum(items, 0.0);
  for (int i = 0; i < items; ++i) {
    row_sum[i] = std::accumulate(compat[i].begin(), compat[i].end(), 0.0);
  }
  for (int i = 0; i < items; ++i) {
    for (int j = 0; j < items; ++j) {
      if (row_sum[j] > 0.0) compat[i][j] /= row_sum[j];
    }
  }

  auto next_item = [&](const std::vector<char>& in_bundle, const std::vector<int>& bundle,
                       const std::vector<double>& interest) {
    std::vector<double> weight(items, 0.0);
    for (int j = 0; j < items; ++j) {
      if (in_bundle[j]) continue;
      double mean = 0.0;
      for (int i : bundle) mean += compat[i][j];
      weight[j] = interest[j] * mean / static_cast<double>(bundle.size());
    }
    if (std::accumulate(weight.begin(), weight.end(), 0.0) <= 0.0) {
      for (int j = 0; j < items; ++j) weight[j] = in_bundle[j] ? 0.0 : 1.0;
    }
    return static_cast<int>(rng.weighted_index(weight));
  };
  auto bundle_price = [&](const std::vector<int>& bundle, const std::vector<double>& pv) {
    double price = 0.0;
    for (int i : bundle) price += pv[i];
    return price + std::pow(static_cast<double>(bundle.size()), 1.0 + kAdditivity);
  };

  std::vector<std::pair<std::vector<int>, double>> bids;
  int dummy_items = 0;
  while (static_cast<int>(bids.size()) < bid_target) {
    std::vector<double> interest(items);
    for (double& v : interest) v = rng.uniform01();
    std::vector<double> private_values(items);
    for (int i = 0; i < items; ++i) {
      private_values[i] = values[i] + kMaxValue * kValueDeviation * (2.0 * interest[i] - 1.0);
    }

    std::vector<char> in_bundle(items, 0);
    std::vector<int> bundle = {static_cast<int>(rng.weighted_index(interest))};
    in_bundle[bundle[0]] = 1;
    while (rng.uniform01() < kAddItemProb) {
      if (static_cast<int>(bundle.size()) == items) break;
      const int item = next_item(in_bundle, bundle, interest);
      in_bundle[item] = 1;
      bundle.push_back(item);
    }
    std::sort(bundle.begin(), bundle.end());
    const double price = bundle_price(bundle, private_values);
    if (price < 0.0) continue;

    std::vector<std::pair<std::vector<int>, double>> bidder = {{bundle, price}};
    std::set<std::vector<int>> seen = {bundle};

    std::vector<std::pair<std::vector<int>, double>> candidates;
    for (int first : bundle) {
      std::vector<char> sub_in(items, 0);
      std::vector<int> sub = {first};
      sub_in[first] = 1;
      while (sub.size() < bundle.size()) {
        const int item = next_item(sub_in, sub, interest);
        sub_in[item] = 1;
        sub.push_back(item);
      }
      std::sort(sub.begin(), sub.end());
      const double sub_price = bundle_price(sub, private_values);
      candidates.emplace_back(std::move(sub), sub_price);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });

    const double budget = kBudgetFactor * price;
    double resale = 0.0;
    for (int i : bundle) resale += values[i];
    const double min_resale = kResaleFactor * resale;
    for (auto& [sub, sub_price] : candidates) {
      if (bidder.size() >= kMaxSubBids + 1 ||
          static_cast<int>(bids.size() + bidder.size()) >= bid_target) {
        break;
      }
      if (sub_price < 0.0 || sub_price > budget) continue;
      double sub_resale = 0.0;
      for (int i : sub) sub_resale += values[i];
      if (sub_resale < min_resale) continue;
      if (!seen.insert(sub).second) continue;
      bidder.emplace_back(sub, sub_price);
    }

    // XOR over the bidder's bids through a shared dummy item.
    const bool exclusive = bidder.size() > 2;
    const int dummy = items + dummy_items;
    if (exclusive) ++dummy_items;
    for (auto& [items_of_bid, bid_price] : bidder) {
      if (exclusive) items_of_bid.push_back(dummy);
      bids.emplace_back(std::move(items_of_bid), bid_price);
    }
  }

  Builder b(name, Sense::kMaximize);
  std::vector<std::vector<std::pair<int, double>>> rows(items + dummy_items);
  for (const auto& [bundle, price] : bids) {
    const int x = b.binary(price);
    for (int i : bundle) rows[i].emplace_back(x, 1.0);
  }
  for (auto& terms : rows) {
    if (!terms.empty()) b.row(std::move(terms), Relation::kLessEqual, 1.0);
  }
  return b.take();
}

struct KindInfo {
  std::map<std::string, double> defaults;
  std::vector<std::string> keys;
};

const std::map<std::string, KindInfo>& kind_table() {
  static const std::map<std::string, KindInfo> table = [] {
    std::map<std::string, std::map<std::string, double>> defaults = {
        {"mdk_small", {{"n", 100}, {"m", 50}}},
        {"mdk_medium", {{"n", 100}, {"m", 50}}},
        {"mdk_large", {{"n", 100}, {"m", 50}}},
        {"lotsizing", {{"n", 30}}},
        {"bigbucket", {{"T", 10}, {"P", 3}}},
        {"matching", {{"nodes", 300}, {"edges", 1000}}},
        {"weighted_coverage", {{"universe", 1000}, {"sets", 200}, {"k", 12}}},
        {"portfolio_ccp", {{"n", 20}, {"m", 100}, {"k", 10}}},
        {"fcnf", {{"nodes", 50}, {"edges", 150}, {"commodities", 3}}},
        {"set_packing", {{"n", 200}, {"m", 1000}}},
        {"set_covering", {{"n", 300}, {"m", 3000}}},
        {"independent_set", {{"nodes", 500}, {"affinity", 4}}},
        {"cflp", {{"customers", 100}, {"facilities", 100}, {"ratio", 5}}},
        {"comb_auction", {{"items", 200}, {"bids", 1000}}},
    };
    std::map<std::string, KindInfo> out;
    for (auto& [kind, d] : defaults) {
      KindInfo info;
      for (const auto& [key, value] : d) info.keys.push_back(key);
      info.defaults = std::move(d);
      out.emplace(kind, std::move(info));
    }
    return out;
  }();
  return table;
}

const KindInfo& kind_info(std::string_view kind) {
  const auto& table = kind_table();
  auto it = table.find(std::string(kind));
  if (it == table.end()) throw ValidationError("unknown generator kind '" + std::string(kind) + "'");
  return it->second;
}

}  // namespace

const std::vector<std::string>& generator_kinds() {
  static const std::vector<std::string> kinds = {
      "mdk_small", "mdk_medium",  "mdk_large",    "lotsizing",       "bigbucket",
      "matching",  "weighted_coverage", "portfolio_ccp", "fcnf",     "set_packing",
      "set_covering", "independent_set", "cflp",        "comb_auction"};
  return kinds;
}

const std::vector<std::string>& override_keys(std::string_view kind) { return kind_info(kind).keys; }

model::Instance generate(const GenSpec& spec) {
  const Dims dims(spec, kind_info(spec.kind).defaults);
  Rng rng(spec.seed);
  const std::string name = spec.kind + "-" + std::to_string(spec.seed);
  const std::string& k = spec.kind;
  Instance inst;
  if (k == "mdk_small") {
    inst = multi_knapsack(rng, dims, 0.25, name);
  } else if (k == "mdk_medium") {
    inst = multi_knapsack(rng, dims, 0.50, name);
  } else if (k == "mdk_large") {
    inst = multi_knapsack(rng, dims, 0.75, name);
  } else if (k == "lotsizing") {
    inst = lotsizing(rng, dims, name);
  } else if (k == "bigbucket") {
    inst = bigbucket(rng, dims, name);
  } else if (k == "matching") {
    inst = matching(rng, dims, name);
  } else if (k == "weighted_coverage") {
    inst = weighted_coverage(rng, dims, name);
  } else if (k == "portfolio_ccp") {
    inst = portfolio(rng, dims, name);
  } else if (k == "fcnf") {
    inst = fcnf(rng, dims, name);
  } else if (k == "set_packing") {
    inst = set_system(rng, dims, false, name);
  } else if (k == "set_covering") {
    inst = set_system(rng, dims, true, name);
  } else if (k == "independent_set") {
    inst = independent_set(rng, dims, name);
  } else if (k == "cflp") {
    inst = facility_location(rng, dims, name);
  } else {
    inst = combinatorial_auction(rng, dims, name);
  }
  model::validate(inst);
  return inst;
}

std::vector<model::Instance> sample_suite(std::string_view kind, int count,
                                          std::uint64_t base_seed,
                                          const std::map<std::string, double>& overrides) {
  if (count < 1) throw ContractViolation("sample_suite: count must be at least 1");
  std::vector<model::Instance> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    out.push_back(generate({std::string(kind), base_seed + static_cast<std::uint64_t>(i), overrides}));
  }
  return out;
}

}  // namespace sblab::gen
