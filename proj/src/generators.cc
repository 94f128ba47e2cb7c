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

#include "cargo/generators.h"

#include <algorithm>
#include <numeric>

#include <boost/random/bernoulli_distribution.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "cargo/errors.h"
#include "cargo/random.h"

namespace cargo {

Graph CompleteGraph(size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::FromEdges(n, edges);
}

Graph StarGraph(size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId j = 1; j <= leaves; ++j) edges.emplace_back(0, j);
  return Graph::FromEdges(leaves + 1, edges);
}

Graph ErdosRenyi(size_t n, double p, uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("p must lie in [0, 1]");
  NoiseRng rng(seed);
  boost::random::bernoulli_distribution<double> coin(p);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph::FromEdges(n, edges);
}

Graph DisjointUnion(const Graph& a, const Graph& b) {
  const NodeId shift = static_cast<NodeId>(a.num_nodes());
  std::vector<Edge> edges = a.Edges();
  for (auto [u, v] : b.Edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::FromEdges(a.num_nodes() + b.num_nodes(), edges);
}

Graph PlantedHomogeneity(size_t copies, size_t partners, size_t leaves) {
  const size_t clique = partners + 1;
  const size_t gadget = clique * (1 + leaves);
  std::vector<Edge> edges;
  for (size_t c = 0; c < copies; ++c) {
    const NodeId base = static_cast<NodeId>(c * gadget);
    for (NodeId u = 0; u < clique; ++u) {
      for (NodeId v = u + 1; v < clique; ++v) {
        edges.emplace_back(base + u, base + v);
      }
    }
    NodeId next = base + static_cast<NodeId>(clique);
    for (NodeId u = 0; u < clique; ++u) {
      for (size_t l = 0; l < leaves; ++l) edges.emplace_back(base + u, next++);
    }
  }
  return Graph::FromEdges(copies * gadget, edges);
}

Graph SocialStandIn(const SocialParams& params) {
  NoiseRng rng(params.seed);
  boost::random::bernoulli_distribution<double> in_group(params.p_group);
  boost::random::bernoulli_distribution<double> in_circle(params.p_circle);
  boost::random::uniform_int_distribution<size_t> group_size(
      params.min_group, params.max_group);

  const size_t n = std::accumulate(params.circle_sizes.begin(),
                                   params.circle_sizes.end(), size_t{0}) +
                   params.circle_sizes.size();
  std::vector<Edge> edges;
  std::vector<bool> is_ego(n, false);
  NodeId next = 0;
  for (size_t size : params.circle_sizes) {
    const NodeId ego = next++;
    is_ego[ego] = true;
    const NodeId first = next;
    next += static_cast<NodeId>(size);
    for (NodeId m = first; m < next; ++m) edges.emplace_back(ego, m);

    // Friend groups tile the circle.
    std::vector<size_t> group_of(size);
    size_t pos = 0, group = 0;
    while (pos < size) {
      size_t len = std::min(group_size(rng), size - pos);
      std::fill(group_of.begin() + pos, group_of.begin() + pos + len, group);
      pos += len;
      ++group;
    }
    for (size_t a = 0; a < size; ++a) {
      for (size_t b = a + 1; b < size; ++b) {
        const bool link =
            group_of[a] == group_of[b] ? in_group(rng) : in_circle(rng);
        if (link) {
          edges.emplace_back(first + static_cast<NodeId>(a),
                             first + static_cast<NodeId>(b));
        }
      }
    }
  }
  boost::random::uniform_int_distribution<NodeId> any(0, static_cast<NodeId>(n - 1));
  // Bridges avoid egos so that each ego's degree stays its circle size.
  for (size_t b = 0; b < params.bridges; ++b) {
    NodeId u = any(rng), v = any(rng);
    while (is_ego[u]) u = any(rng);
    while (is_ego[v]) v = any(rng);
    edges.emplace_back(u, v);
  }
  return Graph::FromEdges(n, edges);
}

}  // namespace cargo
