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

#include "cargo/projection.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include <boost/random/uniform_int_distribution.hpp>

#include "cargo/errors.h"

namespace cargo {

NoisyDegrees MaxPrivate(std::span<const int64_t> degrees, double epsilon1,
                        NoiseRng& rng) {
  if (!(epsilon1 > 0.0) || !std::isfinite(epsilon1)) {
    throw ParameterError("epsilon1 must be a finite positive number, got " +
                         std::to_string(epsilon1));
  }
  if (degrees.empty()) throw ParameterError("degree vector is empty");
  NoisyDegrees out;
  out.epsilon1 = epsilon1;
  out.values.reserve(degrees.size());
  const double scale = 1.0 / epsilon1;
  for (int64_t d : degrees) {
    out.values.push_back(static_cast<double>(d) + SampleLaplace(scale, rng));
  }
  out.max = *std::max_element(out.values.begin(), out.values.end());
  return out;
}

int64_t ThetaFromNoisyMax(double noisy_max) {
  if (std::isnan(noisy_max)) throw ParameterError("noisy max degree is NaN");
  if (noisy_max >= static_cast<double>(std::numeric_limits<int32_t>::max())) {
    return std::numeric_limits<int32_t>::max();
  }
  return std::max<int64_t>(std::llround(noisy_max), 1);
}

double DegreeSimilarity(int64_t d_self, double d_other) {
  if (d_self <= 0) {
    throw DomainError("degree similarity needs a positive own degree, got " +
                      std::to_string(d_self));
  }
  const double self = static_cast<double>(d_self);
  return std::abs(self - d_other) / self;
}

ProjectedGraph Project(const Graph& g, std::span<const double> neighbor_degrees,
                       int64_t theta) {
  if (theta < 1) throw ParameterError("projection bound must be >= 1");
  if (neighbor_degrees.size() != g.num_nodes()) {
    throw ParameterError("neighbor degree vector has wrong length");
  }
  ProjectedGraph out{g.adjacency(), theta};
  std::vector<std::pair<double, NodeId>> ranked;
  for (size_t i = 0; i < g.num_nodes(); ++i) {
    const int64_t d_i = g.Degree(static_cast<NodeId>(i));
    if (d_i <= theta) continue;
    ranked.clear();
    for (NodeId j : g.adjacency().RowIndices(i)) {
      ranked.emplace_back(DegreeSimilarity(d_i, neighbor_degrees[j]), j);
    }
    // Lexicographic (ds, j) order makes the kept set unique.
    auto keep_end = ranked.begin() + theta;
    std::nth_element(ranked.begin(), keep_end - 1, ranked.end());
    for (auto it = keep_end; it != ranked.end(); ++it) {
      out.adjacency.Clear(i, it->second);
    }
  }
  return out;
}

ProjectedGraph Project(const Graph& g, const NoisyDegrees& noisy) {
  return Project(g, noisy.values, ThetaFromNoisyMax(noisy.max));
}

ProjectedGraph ProjectRandom(const Graph& g, int64_t theta, NoiseRng& rng) {
  if (theta < 1) throw ParameterError("projection bound must be >= 1");
  ProjectedGraph out{g.adjacency(), theta};
  for (size_t i = 0; i < g.num_nodes(); ++i) {
    if (g.Degree(static_cast<NodeId>(i)) <= theta) continue;
    std::vector<NodeId> nbrs = g.adjacency().RowIndices(i);
    // Partial Fisher-Yates: the first theta slots become a uniform subset.
    for (size_t k = 0; k < static_cast<size_t>(theta); ++k) {
      boost::random::uniform_int_distribution<size_t> pick(k, nbrs.size() - 1);
      std::swap(nbrs[k], nbrs[pick(rng)]);
    }
    for (size_t k = static_cast<size_t>(theta); k < nbrs.size(); ++k) {
      out.adjacency.Clear(i, nbrs[k]);
    }
  }
  return out;
}

}  // namespace cargo
