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

#include "sblab/generators/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "sblab/errors.hpp"

namespace sblab::gen {

std::vector<Edge> geometric_graph(Rng& rng, int nodes, int edges) {
  const long long pairs = static_cast<long long>(nodes) * (nodes - 1) / 2;
  if (nodes < 2 || edges < 0 || edges > pairs) {
    throw ValidationError("geometric graph: edge count exceeds node pairs");
  }
  std::vector<double> x(nodes);
  std::vector<double> y(nodes);
  for (int v = 0; v < nodes; ++v) {
    x[v] = rng.uniform01();
    y[v] = rng.uniform01();
  }
  std::vector<std::tuple<double, int, int>> all;
  all.reserve(static_cast<std::size_t>(pairs));
  for (int u = 0; u < nodes; ++u) {
    for (int v = u + 1; v < nodes; ++v) {
      const double dx = x[u] - x[v];
      const double dy = y[u] - y[v];
      all.emplace_back(dx * dx + dy * dy, u, v);
    }
  }
  std::partial_sort(all.begin(), all.begin() + edges, all.end());
  std::vector<Edge> out;
  out.reserve(edges);
  for (int e = 0; e < edges; ++e) out.emplace_back(std::get<1>(all[e]), std::get<2>(all[e]));
  return out;
}

std::vector<Edge> barabasi_albert(Rng& rng, int nodes, int affinity) {
  if (affinity < 1 || affinity >= nodes) {
    throw ValidationError("Barabasi-Albert graph needs 1 <= affinity < nodes");
  }
  std::vector<Edge> out;
  std::vector<double> degree(nodes, 0.0);
  for (int v = 0; v < affinity; ++v) {
    out.emplace_back(v, affinity);
    degree[v] += 1.0;
  }
  degree[affinity] = affinity;
  for (int node = affinity + 1; node < nodes; ++node) {
    std::vector<double> weights(degree.begin(), degree.begin() + node);
    std::vector<int> chosen;
    for (int k = 0; k < affinity; ++k) {
      const int v = static_cast<int>(rng.weighted_index(weights));
      weights[v] = 0.0;
      chosen.push_back(v);
    }
    std::sort(chosen.begin(), chosen.end());
    for (int v : chosen) {
      out.emplace_back(v, node);
      degree[v] += 1.0;
    }
    degree[node] = affinity;
  }
  return out;
}

std::vector<std::vector<int>> clique_cover(int nodes, const std::vector<Edge>& edges) {
  std::vector<std::set<int>> adj(nodes);
  for (const auto& [u, v] : edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<Edge> order(edges);
  for (auto& e : order) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(order.begin(), order.end(), [&](const Edge& a, const Edge& b) {
    const auto da = adj[a.first].size() + adj[a.second].size();
    const auto db = adj[b.first].size() + adj[b.second].size();
    return std::tie(da, a) < std::tie(db, b);
  });
  std::set<Edge> covered;
  std::vector<std::vector<int>> cliques;
  for (const Edge& e : order) {
    if (covered.count(e)) continue;
    std::vector<int> clique = {e.first, e.second};
    for (int w : adj[e.first]) {
      if (w == e.second || !adj[e.second].count(w)) continue;
      const bool joins = std::all_of(clique.begin(), clique.end(),
                                     [&](int c) { return adj[c].count(w) > 0; });
      if (joins) clique.push_back(w);
    }
    std::sort(clique.begin(), clique.end());
    for (std::size_t a = 0; a < clique.size(); ++a) {
      for (std::size_t b = a + 1; b < clique.size(); ++b) covered.emplace(clique[a], clique[b]);
    }
    cliques.push_back(std::move(clique));
  }
  return cliques;
}

}  // namespace sblab::gen
