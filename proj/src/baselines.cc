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

#include "cargo/baselines.h"

#include <algorithm>
#include <cmath>

#include "cargo/errors.h"

namespace cargo {

CentralResult CentralLap(uint64_t t_true, int64_t d_max, double epsilon,
                         NoiseRng& rng) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ParameterError("epsilon must be a finite positive number");
  }
  CentralResult out;
  out.epsilon = epsilon;
  out.t_true = t_true;
  // An edgeless graph has sensitivity 0; keep the draw well defined.
  out.scale_used = static_cast<double>(std::max<int64_t>(d_max, 1)) / epsilon;
  out.t_noisy = static_cast<double>(t_true) + SampleLaplace(out.scale_used, rng);
  return out;
}

CentralResult CentralLap(const Graph& g, double epsilon, NoiseRng& rng) {
  return CentralLap(ExactTriangleCount(g), g.MaxDegree(), epsilon, rng);
}

}  // namespace cargo
