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

#ifndef CARGO_GRAPH_H_
#define CARGO_GRAPH_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cargo {

using NodeId = uint32_t;
using Edge = std::pair<NodeId, NodeId>;
using DegreeVector = std::vector<int64_t>;

// Square matrix of bits, one packed row per node. Row i is user i's adjacency
// bit vector. Rows are not required to be mutually symmetric; projected
// matrices are generally not.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  size_t size() const { return n_; }
  size_t words_per_row() const { return words_; }

  bool Get(size_t i, size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1ULL;
  }
  void Set(size_t i, size_t j) {
    bits_[i * words_ + j / 64] |= 1ULL << (j % 64);
  }
  void Clear(size_t i, size_t j) {
    bits_[i * words_ + j / 64] &= ~(1ULL << (j % 64));
  }

  std::span<const uint64_t> Row(size_t i) const {
    return {bits_.data() + i * words_, words_};
  }
  std::span<uint64_t> MutableRow(size_t i) {
    return {bits_.data() + i * words_, words_};
  }

  int64_t RowPopcount(size_t i) const;

  // Column indices of the set bits of row i, ascending.
  std::vector<NodeId> RowIndices(size_t i) const;

  bool IsSymmetric() const;

  bool operator==(const BitMatrix&) const = default;

 private:
  size_t n_ = 0;
  size_t words_ = 0;
  std::vector<uint64_t> bits_;
};

// Undirected, loop-free graph. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Builds the graph from an edge list over nodes 0..n-1. Self-loops are
  // dropped; duplicate and reversed edges collapse. Throws ParameterError if
  // an endpoint is out of range.
  static Graph FromEdges(size_t n, std::span<const Edge> edges);

  // Requires a symmetric matrix with a zero diagonal; throws ParameterError
  // otherwise.
  static Graph FromAdjacency(BitMatrix adjacency);

  size_t num_nodes() const { return adjacency_.size(); }
  int64_t num_edges() const { return num_edges_; }
  bool HasEdge(NodeId i, NodeId j) const { return adjacency_.Get(i, j); }
  int64_t Degree(NodeId i) const { return degrees_[i]; }
  const DegreeVector& degrees() const { return degrees_; }
  int64_t MaxDegree() const;
  const BitMatrix& adjacency() const { return adjacency_; }

  // Edges (i, j) with i < j in lexicographic order.
  std::vector<Edge> Edges() const;

  bool operator==(const Graph&) const = default;

 private:
  BitMatrix adjacency_;
  DegreeVector degrees_;
  int64_t num_edges_ = 0;
};

// Parses SNAP edge-list text: one whitespace-separated pair of non-negative
// decimal ids per line, '#' lines are comments, blank lines are skipped.
// Ids are remapped to 0..n-1 in first-appearance order. With limit_n, only
// edges whose endpoints are both among the first limit_n distinct ids are
// kept, and the graph has min(limit_n, distinct ids) nodes.
//
// Throws ParseError (naming the 1-based line number) on a malformed line and
// when no edge survives.
Graph ParseEdgeList(std::istream& in, std::optional<size_t> limit_n = {});
Graph LoadEdgeList(const std::string& path, std::optional<size_t> limit_n = {});

// Writes the graph's edges in SNAP format, one "i j" line per edge with i < j.
void WriteEdgeList(const Graph& g, const std::string& path);

// d_i = popcount(A_i).
DegreeVector Degrees(const Graph& g);

// Exact triangle count by bitset intersection over edges (i, j), i < j,
// counting common neighbors k > j. Plain-text ground truth; shares no code
// with the secret-shared path.
uint64_t ExactTriangleCount(const Graph& g);

// Same for a symmetric bit matrix. Throws ParameterError if asymmetric.
uint64_t ExactTriangleCount(const BitMatrix& adjacency);

}  // namespace cargo

#endif  // CARGO_GRAPH_H_
