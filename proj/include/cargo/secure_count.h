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

// Two-server triangle counting on secret-shared adjacency bits.
//
// Both servers run in this process, but each only ever reads its own share
// vector; the only values that cross are the openings (e, f, g) of each
// three-way multiplication, and those are routed through a Transcript.

#ifndef CARGO_SECURE_COUNT_H_
#define CARGO_SECURE_COUNT_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cargo/graph.h"
#include "cargo/mul3.h"
#include "cargo/projection.h"
#include "cargo/ring.h"

namespace cargo {

// How the pair bit a_ij is formed from the two users' projected rows.
enum class BitPolicy {
  kAnd,       // A_i[j] && A_j[i]
  kOr,        // A_i[j] || A_j[i]
  kRowOwner,  // row of min(i, j)
};

BitPolicy ParseBitPolicy(const std::string& name);
std::string BitPolicyName(BitPolicy policy);

bool EffectiveBit(const BitMatrix& rows, size_t i, size_t j, BitPolicy policy);

// Symmetric matrix of effective bits.
BitMatrix EffectiveAdjacency(const BitMatrix& rows, BitPolicy policy);

// One semi-honest server's accumulators.
struct ServerState {
  int id = 1;
  RingElement t_share;      // <T>_i
  RingElement gamma_share;  // <gamma>_i
};

// Shares of every pair bit a_ij, i < j, stored per server in upper-triangular
// row-major order so that (i, k) and (j, k) are contiguous in k.
class SharedAdjacency {
 public:
  SharedAdjacency() = default;
  explicit SharedAdjacency(size_t n);

  size_t num_nodes() const { return n_; }
  size_t num_pairs() const { return shares_[0].size(); }

  size_t PairIndex(size_t i, size_t j) const {
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }

  // Everything server `server` (1 or 2) holds.
  std::span<const RingElement> ServerShares(int server) const {
    return shares_[server - 1];
  }

  // Requires i != j; order is irrelevant.
  SharePair Get(size_t i, size_t j) const;
  void Set(size_t i, size_t j, const SharePair& pair);

 private:
  size_t n_ = 0;
  std::array<std::vector<RingElement>, 2> shares_;
};

// Every unordered pair's effective bit, secret-shared with masks from rng.
SharedAdjacency ShareAdjacency(const BitMatrix& rows, BitPolicy policy,
                               DealerRng& rng);
SharedAdjacency ShareAdjacency(const ProjectedGraph& pg, BitPolicy policy,
                               DealerRng& rng);

struct CountOptions {
  // Worker threads; 0 means hardware concurrency. Results do not depend on it.
  unsigned workers = 1;
  // If set, every opening is recorded; forces a single worker.
  Transcript* transcript = nullptr;
};

struct CountResult {
  SharePair t;  // shares of the triangle count
  std::array<ServerState, 2> servers;
  uint64_t multiplications = 0;
};

// Runs one three-way multiplication per triple i < j < k, in lexicographic
// order, and accumulates the product shares. The triples with first index i
// draw their groups from dealer.Split(i), so the shares depend only on the
// dealer seed. n < 3 yields shares of zero.
CountResult SecureTriangleCount(const SharedAdjacency& sa,
                                const DealerRng& dealer,
                                const CountOptions& options = {});

}  // namespace cargo

#endif  // CARGO_SECURE_COUNT_H_
