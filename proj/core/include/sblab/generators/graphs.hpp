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

#ifndef SBLAB_GENERATORS_GRAPHS_HPP_
#define SBLAB_GENERATORS_GRAPHS_HPP_

#include <utility>
#include <vector>

#include "sblab/generators/rng.hpp"

namespace sblab::gen {

using Edge = std::pair<int, int>;  // first < second

// Points uniform in the unit square; the `edges` closest pairs become edges,
// returned in increasing distance order.
std::vector<Edge> geometric_graph(Rng& rng, int nodes, int edges);

// Preferential attachment: node `affinity` joins all earlier nodes, every
// later node attaches to `affinity` distinct earlier nodes with probability
// proportional to degree.
std::vector<Edge> barabasi_albert(Rng& rng, int nodes, int affinity);

// Cliques covering every edge. Repeatedly takes the uncovered edge with the
// smallest endpoint degree sum and grows it greedily with common neighbours.
std::vector<std::vector<int>> clique_cover(int nodes, const std::vector<Edge>& edges);

}  // namespace sblab::gen

#endif  // SBLAB_GENERATORS_GRAPHS_HPP_
