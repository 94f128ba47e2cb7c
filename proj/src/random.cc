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

#include "cargo/random.h"

#include <boost/random/laplace_distribution.hpp>

#include "cargo/errors.h"

namespace cargo {

double SampleLaplace(double scale, NoiseRng& rng) {
  if (!(scale > 0.0)) throw ParameterError("Laplace scale must be positive");
  return boost::random::laplace_distribution<double>(0.0, scale)(rng);
}

}  // namespace cargo
