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

// Distributed Laplace noise.
//
// Laplace(lambda) is the sum over n users of Gamma(1/n, lambda) -
// Gamma(1/n, lambda). Each user draws one such difference, encodes it in
// fixed point and secret-shares it; each server adds the sum of its noise
// shares to its (scaled) count share, and only the final sum is opened.

#ifndef CARGO_PERTURBATION_H_
#define CARGO_PERTURBATION_H_

#include <array>
#include <cstdint>

#include "cargo/random.h"
#include "cargo/ring.h"
#include "cargo/secure_count.h"

namespace cargo {

inline constexpr int kFixedPointBits = 20;
inline constexpr uint64_t kFixedPointScale = uint64_t{1} << kFixedPointBits;

struct NoiseParams {
  double epsilon2 = 1.0;
  double sensitivity = 1.0;  // theta, the rounded noisy max degree
  int64_t n_users = 1;
  uint64_t fixed_point_scale = kFixedPointScale;

  double lambda() const { return sensitivity / epsilon2; }

  // Throws ParameterError on a non-positive budget, sensitivity or user
  // count, a scale that is not a power of two, or a configuration whose
  // largest possible count C(n_users, 3) cannot be encoded without
  // wrapping past 2^62.
  void Validate() const;
};

// One draw from Gamma(shape = 1/n, scale). Throws ParameterError unless
// n >= 1 and scale > 0.
double SampleGamma(int64_t n, double scale, NoiseRng& rng);

// round(value * scale) in two's complement. Throws ParameterError if the
// result does not fit in 63 bits.
RingElement EncodeFixed(double value, uint64_t scale);
double DecodeFixed(RingElement encoded, uint64_t scale);

struct PartialNoise {
  double gamma = 0.0;  // Gam1 - Gam2
  SharePair shares;    // of EncodeFixed(gamma)
};

// One user's contribution. Gamma draws and the share mask all come from rng.
PartialNoise MakePartialNoise(const NoiseParams& params, NoiseRng& rng);

struct PerturbResult {
  double noisy_count = 0.0;  // T'
  // gamma_share is <gamma>_i; t_share is the noisy share <T'>_i.
  std::array<ServerState, 2> servers;
  double noise_sum = 0.0;  // sum of users' gamma, for auditing
};

// Runs the aggregation for params.n_users users and opens
// T' = decode(<T>_1 S + <gamma>_1 + <T>_2 S + <gamma>_2) / S.
// Throws ProtocolError if the aggregated noise would wrap the ring.
PerturbResult Perturb(const SharePair& t_shares, const NoiseParams& params,
                      NoiseRng& rng);

}  // namespace cargo

#endif  // CARGO_PERTURBATION_H_
