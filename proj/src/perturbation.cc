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

#include "cargo/perturbation.h"

#include <bit>
#include <cmath>
#include <string>

#include <boost/random/gamma_distribution.hpp>

#include "cargo/errors.h"

namespace cargo {
namespace {

constexpr double kTwo62 = 4611686018427387904.0;  // 2^62

}  // namespace

void NoiseParams::Validate() const {
  if (!(epsilon2 > 0.0) || !std::isfinite(epsilon2)) {
    throw ParameterError("epsilon2 must be a finite positive number");
  }
  if (!(sensitivity > 0.0) || !std::isfinite(sensitivity)) {
    throw ParameterError("sensitivity must be a finite positive number");
  }
  if (n_users < 1) throw ParameterError("need at least one noise contributor");
  if (!std::has_single_bit(fixed_point_scale)) {
    throw ParameterError("fixed-point scale must be a power of two");
  }
  const double n = static_cast<double>(n_users);
  const double max_count = n * (n - 1) * (n - 2) / 6.0;
  if (max_count * static_cast<double>(fixed_point_scale) >= kTwo62) {
    throw ParameterError("n_users=" + std::to_string(n_users) +
                         " is too large: C(n,3) * scale would wrap the ring");
  }
}

double SampleGamma(int64_t n, double scale, NoiseRng& rng) {
  if (n < 1) throw ParameterError("Gamma shape denominator must be >= 1");
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw ParameterError("Gamma scale must be a finite positive number");
  }
  // Boost switches to a small-shape rejection sampler below shape 1.
  boost::random::gamma_distribution<double> gamma(1.0 / static_cast<double>(n),
                                                  scale);
  return gamma(rng);
}

RingElement EncodeFixed(double value, uint64_t scale) {
  const double scaled = std::round(value * static_cast<double>(scale));
  if (!(std::abs(scaled) < 2.0 * kTwo62)) {
    throw ParameterError("value " + std::to_string(value) +
                         " does not fit the fixed-point ring encoding");
  }
  return RingElement::FromSigned(static_cast<int64_t>(scaled));
}

double DecodeFixed(RingElement encoded, uint64_t scale) {
  return static_cast<double>(encoded.AsSigned()) / static_cast<double>(scale);
}

PartialNoise MakePartialNoise(const NoiseParams& params, NoiseRng& rng) {
  const double lambda = params.lambda();
  PartialNoise out;
  const double gam1 = SampleGamma(params.n_users, lambda, rng);
  const double gam2 = SampleGamma(params.n_users, lambda, rng);
  out.gamma = gam1 - gam2;
  out.shares = ShareWithMask(EncodeFixed(out.gamma, params.fixed_point_scale),
                             RingElement(rng()));
  return out;
}

PerturbResult Perturb(const SharePair& t_shares, const NoiseParams& params,
                      NoiseRng& rng) {
  params.Validate();
  PerturbResult result;
  result.servers[0].id = 1;
  result.servers[1].id = 2;

  for (int64_t u = 0; u < params.n_users; ++u) {
    const PartialNoise pn = MakePartialNoise(params, rng);
    result.servers[0].gamma_share += pn.shares.s1;
    result.servers[1].gamma_share += pn.shares.s2;
    result.noise_sum += pn.gamma;
  }
  if (std::abs(result.noise_sum) * static_cast<double>(params.fixed_point_scale) >=
      kTwo62) {
    throw ProtocolError("aggregated noise would wrap the ring");
  }

  const RingElement scale(params.fixed_point_scale);
  result.servers[0].t_share = t_shares.s1 * scale + result.servers[0].gamma_share;
  result.servers[1].t_share = t_shares.s2 * scale + result.servers[1].gamma_share;
  const RingElement opened =
      result.servers[0].t_share + result.servers[1].t_share;
  result.noisy_count = DecodeFixed(opened, params.fixed_point_scale);
  return result;
}

}  // namespace cargo
