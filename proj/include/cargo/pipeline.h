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

// One end-to-end run: private max degree, similarity projection, secure
// count, distributed perturbation.

#ifndef CARGO_PIPELINE_H_
#define CARGO_PIPELINE_H_

#include <cstdint>

#include "cargo/graph.h"
#include "cargo/projection.h"
#include "cargo/secure_count.h"

namespace cargo {

struct Budget {
  double epsilon1 = 0.0;  // max degree
  double epsilon2 = 0.0;  // triangle perturbation
};

// epsilon1 = split * epsilon, epsilon2 = epsilon - epsilon1. Throws
// ParameterError unless epsilon > 0 and 0 < split < 1.
Budget SplitBudget(double epsilon, double split);

struct CargoParams {
  double epsilon = 2.0;
  double epsilon_split = 0.1;
  BitPolicy policy = BitPolicy::kAnd;
  unsigned count_workers = 1;
};

struct PhaseTimes {
  double project_s = 0.0;  // max degree + projection
  double count_s = 0.0;    // sharing + secure count
  double perturb_s = 0.0;
};

struct CargoOutcome {
  double noisy_count = 0.0;
  NoisyDegrees noisy_degrees;
  int64_t theta = 0;
  Budget budget;
  // Reconstructed pre-noise count. The protocol never opens it; it is
  // exposed for auditing the simulation.
  uint64_t projected_count = 0;
  uint64_t multiplications = 0;
  PhaseTimes times;
};

// noise_seed drives the Laplace and Gamma draws; dealer_seed drives the
// adjacency share masks and the multiplication groups.
CargoOutcome RunCargoPipeline(const Graph& g, const CargoParams& params,
                              uint64_t noise_seed, uint64_t dealer_seed);

}  // namespace cargo

#endif  // CARGO_PIPELINE_H_
