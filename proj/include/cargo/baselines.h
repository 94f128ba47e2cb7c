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

#ifndef CARGO_BASELINES_H_
#define CARGO_BASELINES_H_

#include "cargo/graph.h"
#include "cargo/random.h"

namespace cargo {

struct CentralResult {
  double t_noisy = 0.0;
  double epsilon = 0.0;
  double scale_used = 0.0;  // d_max / epsilon, true d_max
  uint64_t t_true = 0;
};

// Trusted-curator Laplace mechanism: T + Lap(d_max / epsilon). No projection,
// no sharing. Throws ParameterError unless epsilon > 0.
CentralResult CentralLap(const Graph& g, double epsilon, NoiseRng& rng);

// Same, with a precomputed exact count.
CentralResult CentralLap(uint64_t t_true, int64_t d_max, double epsilon,
                         NoiseRng& rng);

}  // namespace cargo

#endif  // CARGO_BASELINES_H_
