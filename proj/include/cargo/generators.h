// Copyright 2026 The cargo-triangles Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Synthetic graphs for tests, benchmarks and offline runs.

#ifndef CARGO_GENERATORS_H_
#define CARGO_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cargo/graph.h"

namespace cargo {

Graph CompleteGraph(size_t n);

// Node 0 joined to `leaves` leaves.
Graph StarGraph(size_t leaves);

Graph ErdosRenyi(size_t n, double p, uint64_t seed);

// Disjoint union; b's nodes are shifted by a.num_nodes().
Graph DisjointUnion(const Graph& a, const Graph& b);

// `copies` disjoint gadgets. Each gadget is a hub plus `partners` nodes that
// together form a clique; every clique member also owns `leaves` pendant
// leaves, so all clique members share one degree (partners + leaves) while
// the leaves have degree 1. Triangles live only inside the cliques.
Graph PlantedHomogeneity(size_t copies = 1, size_t partners = 3,
                         size_t leaves = 17);

// Ego-network stand-in for a social graph: ego hubs whose circle sizes are
// given, each circle split into friend groups of min_group..max_group members
// with dense links inside a group (p_group) and sparse links across groups in
// the same circle (p_circle), plus `bridges` random edges between non-ego
// nodes. Nodes are numbered ego first, then its circle, so first-appearance
// order keeps ego circles together. Each ego's degree is its circle size.
// The defaults give 4179 nodes, about 93k edges and d_max = 1045.
struct SocialParams {
  std::vector<size_t> circle_sizes = {347, 1045, 229, 159, 170,
                                      66,  792,  755, 547, 59};
  size_t min_group = 10;
  size_t max_group = 120;
  double p_group = 0.5;
  double p_circle = 0.004;
  size_t bridges = 1500;
  uint64_t seed = 4039;
};

Graph SocialStandIn(const SocialParams& params = {});

}  // namespace cargo

#endif  // CARGO_GENERATORS_H_
