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

#include "cargo/pipeline.h"

#include <chrono>
#include <cmath>

#include "cargo/errors.h"
#include "cargo/perturbation.h"
#include "cargo/random.h"

namespace cargo {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start, Clock::time_point end) {
  return std::chrono::duration<double>(end - start).count();
}

}  // namespace

Budget SplitBudget(double epsilon, double split) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ParameterError("epsilon must be a finite positive number");
  }
  if (!(split > 0.0 && split < 1.0)) {
    throw ParameterError("epsilon split must lie strictly between 0 and 1");
  }
  Budget b;
  b.epsilon1 = split * epsilon;
  b.epsilon2 = epsilon - b.epsilon1;
  return b;
}

CargoOutcome RunCargoPipeline(const Graph& g, const CargoParams& params,
                              uint64_t noise_seed, uint64_t dealer_seed) {
  CargoOutcome out;
  out.budget = SplitBudget(params.epsilon, params.epsilon_split);
  NoiseRng noise(noise_seed);
  DealerRng dealer(dealer_seed);

  auto t0 = Clock::now();
  out.noisy_degrees = MaxPrivate(g.degrees(), out.budget.epsilon1, noise);
  const ProjectedGraph projected = Project(g, out.noisy_degrees);
  out.theta = projected.theta;

  auto t1 = Clock::now();
  // Users' share masks and the dealer's groups come from separate substreams.
  DealerRng user_masks = dealer.Split(0);
  const SharedAdjacency shared =
      ShareAdjacency(projected, params.policy, user_masks);
  const CountResult counted = SecureTriangleCount(
      shared, dealer.Split(1), CountOptions{.workers = params.count_workers});
  out.multiplications = counted.multiplications;
  out.projected_count = Reconstruct(counted.t).value;

  auto t2 = Clock::now();
  NoiseParams noise_params;
  noise_params.epsilon2 = out.budget.epsilon2;
  noise_params.sensitivity = static_cast<double>(out.theta);
  noise_params.n_users = static_cast<int64_t>(g.num_nodes());
  out.noisy_count = Perturb(counted.t, noise_params, noise).noisy_count;
  auto t3 = Clock::now();

  out.times = {Seconds(t0, t1), Seconds(t1, t2), Seconds(t2, t3)};
  return out;
}

}  // namespace cargo
