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

// Private maximum degree and local graph projection.

#ifndef CARGO_PROJECTION_H_
#define CARGO_PROJECTION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "cargo/graph.h"
#include "cargo/random.h"

namespace cargo {

struct NoisyDegrees {
  std::vector<double> values;  // d'_i = d_i + Lap(1/epsilon1)
  double max = 0.0;            // max_i d'_i
  double epsilon1 = 0.0;
};

// Each user perturbs its degree with Laplace(1/epsilon1); the server takes
// the maximum. Throws ParameterError unless epsilon1 > 0 and degrees is
// non-empty.
NoisyDegrees MaxPrivate(std::span<const int64_t> degrees, double epsilon1,
                        NoiseRng& rng);

// Integer projection bound derived from the noisy maximum:
// max(round(d'_max), 1).
int64_t ThetaFromNoisyMax(double noisy_max);

// |d_self - d_other| / d_self. Throws DomainError when d_self <= 0.
double DegreeSimilarity(int64_t d_self, double d_other);

// Row-wise projected adjacency; rows may disagree about a pair.
struct ProjectedGraph {
  BitMatrix adjacency;
  int64_t theta = 0;
};

// Similarity-based projection. Every user with d_i > theta keeps the theta
// neighbors j with the smallest DS(d_i, neighbor_degrees[j]), ties broken by
// ascending j; other users keep their row. Throws ParameterError if
// theta < 1 or neighbor_degrees has the wrong length.
ProjectedGraph Project(const Graph& g, std::span<const double> neighbor_degrees,
                       int64_t theta);

// Project with theta = ThetaFromNoisyMax(noisy.max) and the noisy degrees as
// neighbor degrees.
ProjectedGraph Project(const Graph& g, const NoisyDegrees& noisy);

// Baseline: every user with d_i > theta keeps a uniformly random theta-subset
// of its neighbors.
ProjectedGraph ProjectRandom(const Graph& g, int64_t theta, NoiseRng& rng);

}  // namespace cargo

#endif  // CARGO_PROJECTION_H_
