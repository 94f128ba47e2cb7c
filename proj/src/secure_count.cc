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

#include "cargo/secure_count.h"

#include <algorithm>
#include <thread>
#include <utility>

#include "cargo/errors.h"

namespace cargo {

BitPolicy ParseBitPolicy(const std::string& name) {
  if (name == "and") return BitPolicy::kAnd;
  if (name == "or") return BitPolicy::kOr;
  if (name == "row-owner") return BitPolicy::kRowOwner;
  throw ParameterError("unknown bit policy '" + name +
                       "' (expected and, or, row-owner)");
}

std::string BitPolicyName(BitPolicy policy) {
  switch (policy) {
    case BitPolicy::kAnd:
      return "and";
    case BitPolicy::kOr:
      return "or";
    case BitPolicy::kRowOwner:
      return "row-owner";
  }
  return "and";
}

bool EffectiveBit(const BitMatrix& rows, size_t i, size_t j,
                  BitPolicy policy) {
  switch (policy) {
    case BitPolicy::kAnd:
      return rows.Get(i, j) && rows.Get(j, i);
    case BitPolicy::kOr:
      return rows.Get(i, j) || rows.Get(j, i);
    case BitPolicy::kRowOwner:
      return i < j ? rows.Get(i, j) : rows.Get(j, i);
  }
  return false;
}

BitMatrix EffectiveAdjacency(const BitMatrix& rows, BitPolicy policy) {
  const size_t n = rows.size();
  BitMatrix out(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (EffectiveBit(rows, i, j, policy)) {
        out.Set(i, j);
        out.Set(j, i);
      }
    }
  }
  return out;
}

SharedAdjacency::SharedAdjacency(size_t n) : n_(n) {
  const size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  shares_[0].assign(pairs, RingElement{});
  shares_[1].assign(pairs, RingElement{});
}

SharePair SharedAdjacency::Get(size_t i, size_t j) const {
  if (i > j) std::swap(i, j);
  const size_t idx = PairIndex(i, j);
  return {shares_[0][idx], shares_[1][idx]};
}

void SharedAdjacency::Set(size_t i, size_t j, const SharePair& pair) {
  if (i > j) std::swap(i, j);
  const size_t idx = PairIndex(i, j);
  shares_[0][idx] = pair.s1;
  shares_[1][idx] = pair.s2;
}

SharedAdjacency ShareAdjacency(const BitMatrix& rows, BitPolicy policy,
                               DealerRng& rng) {
  const size_t n = rows.size();
  SharedAdjacency sa(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const RingElement bit(EffectiveBit(rows, i, j, policy) ? 1 : 0);
      sa.Set(i, j, Share(bit, rng));
    }
  }
  return sa;
}

SharedAdjacency ShareAdjacency(const ProjectedGraph& pg, BitPolicy policy,
                               DealerRng& rng) {
  return ShareAdjacency(pg.adjacency, policy, rng);
}

namespace {

struct Partial {
  RingElement t1, t2;
  uint64_t multiplications = 0;
};

// All triples whose smallest index is i.
void CountFromFirstIndex(const SharedAdjacency& sa, size_t i,
                         const DealerRng& dealer, Transcript* transcript,
                         Partial& acc) {
  const size_t n = sa.num_nodes();
  auto s1 = sa.ServerShares(1);
  auto s2 = sa.ServerShares(2);
  DealerRng rng = dealer.Split(i);
  for (size_t j = i + 1; j < n; ++j) {
    const size_t ij = sa.PairIndex(i, j);
    const SharePair a{s1[ij], s2[ij]};
    for (size_t k = j + 1; k < n; ++k) {
      const size_t ik = sa.PairIndex(i, k);
      const size_t jk = sa.PairIndex(j, k);
      MultiplicationGroup mg = DealMg(rng);
      const SharePair u =
          Mul3(a, {s1[ik], s2[ik]}, {s1[jk], s2[jk]}, mg, transcript);
      acc.t1 += u.s1;
      acc.t2 += u.s2;
      ++acc.multiplications;
    }
  }
}

}  // namespace

CountResult SecureTriangleCount(const SharedAdjacency& sa,
                                const DealerRng& dealer,
                                const CountOptions& options) {
  const size_t n = sa.num_nodes();
  unsigned workers = options.workers == 0
                         ? std::max(1u, std::thread::hardware_concurrency())
                         : options.workers;
  if (options.transcript != nullptr || n < 3) workers = 1;

  std::vector<Partial> partials(workers);
  auto run = [&](unsigned w) {
    // Strided assignment balances the shrinking per-i workload.
    for (size_t i = w; i + 2 < n; i += workers) {
      CountFromFirstIndex(sa, i, dealer, options.transcript, partials[w]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  CountResult result;
  result.servers[0].id = 1;
  result.servers[1].id = 2;
  for (const Partial& p : partials) {
    result.servers[0].t_share += p.t1;
    result.servers[1].t_share += p.t2;
    result.multiplications += p.multiplications;
  }
  result.t = {result.servers[0].t_share, result.servers[1].t_share};
  return result;
}

}  // namespace cargo
