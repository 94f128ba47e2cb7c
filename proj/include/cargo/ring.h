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

// Additive secret sharing over the ring Z_{2^64}.

#ifndef CARGO_RING_H_
#define CARGO_RING_H_

#include <cstdint>

#include <boost/random/mersenne_twister.hpp>

namespace cargo {

// Element of Z_{2^64}. All arithmetic wraps.
struct RingElement {
  uint64_t value = 0;

  constexpr RingElement() = default;
  constexpr explicit RingElement(uint64_t v) : value(v) {}

  // Two's-complement view, used when a ring value carries a signed quantity.
  constexpr int64_t AsSigned() const { return static_cast<int64_t>(value); }
  static constexpr RingElement FromSigned(int64_t v) {
    return RingElement(static_cast<uint64_t>(v));
  }

  friend constexpr RingElement operator+(RingElement a, RingElement b) {
    return RingElement(a.value + b.value);
  }
  friend constexpr RingElement operator-(RingElement a, RingElement b) {
    return RingElement(a.value - b.value);
  }
  friend constexpr RingElement operator*(RingElement a, RingElement b) {
    return RingElement(a.value * b.value);
  }
  constexpr RingElement& operator+=(RingElement b) {
    value += b.value;
    return *this;
  }
  friend constexpr bool operator==(RingElement, RingElement) = default;
};

// The two servers' shares of one secret: s1 is held by S_1, s2 by S_2.
struct SharePair {
  RingElement s1;
  RingElement s2;

  friend constexpr bool operator==(const SharePair&,
                                   const SharePair&) = default;
};

// Seeded source of uniform ring elements for the trusted dealer and for
// users' share masks. Split(k) yields an independent substream so that work
// can be partitioned across workers without changing the result.
class DealerRng {
 public:
  explicit DealerRng(uint64_t seed) : seed_(seed), engine_(seed) {}

  uint64_t seed() const { return seed_; }
  RingElement Next() { return RingElement(engine_()); }
  DealerRng Split(uint64_t index) const;

 private:
  uint64_t seed_;
  boost::random::mt19937_64 engine_;
};

// s1 = r, s2 = secret - r for a fresh uniform r.
inline SharePair Share(RingElement secret, DealerRng& rng) {
  RingElement r = rng.Next();
  return {r, secret - r};
}

// Share with a caller-chosen mask r.
constexpr SharePair ShareWithMask(RingElement secret, RingElement r) {
  return {r, secret - r};
}

constexpr RingElement Reconstruct(const SharePair& p) { return p.s1 + p.s2; }

constexpr SharePair AddLocal(const SharePair& a, const SharePair& b) {
  return {a.s1 + b.s1, a.s2 + b.s2};
}

constexpr SharePair SubLocal(const SharePair& a, const SharePair& b) {
  return {a.s1 - b.s1, a.s2 - b.s2};
}

// Multiplies both shares by a public constant.
constexpr SharePair ScaleLocal(const SharePair& a, RingElement c) {
  return {a.s1 * c, a.s2 * c};
}

}  // namespace cargo

#endif  // CARGO_RING_H_
