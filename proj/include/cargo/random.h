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

#ifndef CARGO_RANDOM_H_
#define CARGO_RANDOM_H_

#include <cstdint>

#include <boost/random/mersenne_twister.hpp>

namespace cargo {

// Engine used for every statistical draw (Laplace, Gamma, random deletion).
// Same sequence as std::mt19937_64. Distributions come from Boost.Random so
// that streams are identical across standard library implementations.
using NoiseRng = boost::random::mt19937_64;

// Stream tags mixed into per-trial seeds.
enum class SeedStream : uint64_t {
  kNoise = 1,
  kDealer = 2,
  kProjection = 3,
};

// SplitMix64 finalizer applied to (seed, index). Used to derive independent
// substreams for trials and workers.
constexpr uint64_t DeriveSeed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr uint64_t DeriveSeed(uint64_t seed, uint64_t index, SeedStream stream) {
  return DeriveSeed(DeriveSeed(seed, index), static_cast<uint64_t>(stream));
}

// One draw from Laplace(0, scale). scale must be positive.
double SampleLaplace(double scale, NoiseRng& rng);

}  // namespace cargo

#endif  // CARGO_RANDOM_H_
