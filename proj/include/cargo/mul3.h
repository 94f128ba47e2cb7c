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

// Three-input secret multiplication with dealer-issued multiplication groups.
//
// A multiplication group (MG) is correlated randomness
//   x, y, z uniform;  o = xy,  p = xz,  q = yz,  w = xyz
// with every value additively shared between S_1 and S_2. To multiply shared
// a, b, c each server masks its shares, e = a - x, f = b - y, g = c - z, the
// masked values are opened, and server i outputs
//   <d>_i = <w>_i + <o>_i g + <p>_i f + <q>_i e
//         + <x>_i fg + <y>_i eg + <z>_i ef + [i == 2] efg.
// Expanding e, f, g gives d_1 + d_2 = abc.

#ifndef CARGO_MUL3_H_
#define CARGO_MUL3_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cargo/ring.h"

namespace cargo {

// One server's half of a multiplication group.
struct MgShare {
  RingElement x, y, z, w, o, p, q;
};

class MultiplicationGroup {
 public:
  MultiplicationGroup(const MgShare& server1, const MgShare& server2)
      : shares_{server1, server2} {}

  // server is 1 or 2.
  const MgShare& ServerShare(int server) const { return shares_[server - 1]; }

  SharePair x() const { return Pair(&MgShare::x); }
  SharePair y() const { return Pair(&MgShare::y); }
  SharePair z() const { return Pair(&MgShare::z); }
  SharePair w() const { return Pair(&MgShare::w); }
  SharePair o() const { return Pair(&MgShare::o); }
  SharePair p() const { return Pair(&MgShare::p); }
  SharePair q() const { return Pair(&MgShare::q); }

  bool consumed() const { return consumed_; }
  // Throws ProtocolError if the group was already used.
  void Consume() {
    if (consumed_) ThrowReused();
    consumed_ = true;
  }

 private:
  SharePair Pair(RingElement MgShare::*field) const {
    return {shares_[0].*field, shares_[1].*field};
  }

  [[noreturn]] static void ThrowReused();

  std::array<MgShare, 2> shares_;
  bool consumed_ = false;
};

// Group with forced x, y, z; shares are still random.
inline MultiplicationGroup DealMgWithValues(RingElement x, RingElement y,
                                            RingElement z, DealerRng& rng) {
  const RingElement o = x * y;
  const RingElement p = x * z;
  const RingElement q = y * z;
  const RingElement w = o * z;
  MgShare s1{rng.Next(), rng.Next(), rng.Next(), rng.Next(),
             rng.Next(), rng.Next(), rng.Next()};
  MgShare s2{x - s1.x, y - s1.y, z - s1.z, w - s1.w,
             o - s1.o, p - s1.p, q - s1.q};
  return MultiplicationGroup(s1, s2);
}

// Fresh group with uniform x, y, z.
inline MultiplicationGroup DealMg(DealerRng& rng) {
  const RingElement x = rng.Next();
  const RingElement y = rng.Next();
  const RingElement z = rng.Next();
  return DealMgWithValues(x, y, z, rng);
}

// Values opened during one multiplication.
struct Opening {
  RingElement e, f, g;
};

// Record of everything that crossed between the two servers. Always counts
// openings; keeps up to `capacity` of them for inspection.
class Transcript {
 public:
  explicit Transcript(size_t capacity = 0) : capacity_(capacity) {}

  void Record(const Opening& opening) {
    ++num_openings_;
    if (openings_.size() < capacity_) openings_.push_back(opening);
  }

  uint64_t num_openings() const { return num_openings_; }
  const std::vector<Opening>& openings() const { return openings_; }

 private:
  size_t capacity_;
  uint64_t num_openings_ = 0;
  std::vector<Opening> openings_;
};

// Step 1, run locally by each server on its own shares.
constexpr Opening MaskShares(RingElement a, RingElement b, RingElement c,
                             const MgShare& mg) {
  return {a - mg.x, b - mg.y, c - mg.z};
}

// Step 2: the servers exchange their masked shares.
constexpr Opening Open(const Opening& from_s1, const Opening& from_s2) {
  return {from_s1.e + from_s2.e, from_s1.f + from_s2.f,
          from_s1.g + from_s2.g};
}

// Step 3, run locally by server `server` (1 or 2) on public e, f, g.
constexpr RingElement ProductShare(int server, const MgShare& mg,
                                   const Opening& open) {
  const RingElement e = open.e, f = open.f, g = open.g;
  RingElement d = mg.w + mg.o * g + mg.p * f + mg.q * e + mg.x * f * g +
                  mg.y * e * g + mg.z * e * f;
  if (server == 2) d += e * f * g;
  return d;
}

// Shares of a*b*c. Consumes `mg`; throws ProtocolError if it was used before.
inline SharePair Mul3(const SharePair& a, const SharePair& b,
                      const SharePair& c, MultiplicationGroup& mg,
                      Transcript* transcript = nullptr) {
  mg.Consume();
  const MgShare& mg1 = mg.ServerShare(1);
  const MgShare& mg2 = mg.ServerShare(2);
  const Opening masked1 = MaskShares(a.s1, b.s1, c.s1, mg1);
  const Opening masked2 = MaskShares(a.s2, b.s2, c.s2, mg2);
  const Opening opened = Open(masked1, masked2);
  if (transcript != nullptr) transcript->Record(opened);
  return {ProductShare(1, mg1, opened), ProductShare(2, mg2, opened)};
}

}  // namespace cargo

#endif  // CARGO_MUL3_H_
