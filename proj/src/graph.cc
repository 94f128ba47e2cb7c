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

#include "cargo/graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <string_view>
#include <unordered_map>

#include "cargo/errors.h"

namespace cargo {

int64_t BitMatrix::RowPopcount(size_t i) const {
  int64_t count = 0;
  for (uint64_t word : Row(i)) count += std::popcount(word);
  return count;
}

std::vector<NodeId> BitMatrix::RowIndices(size_t i) const {
  std::vector<NodeId> out;
  auto row = Row(i);
  for (size_t w = 0; w < row.size(); ++w) {
    uint64_t word = row[w];
    while (word != 0) {
      out.push_back(static_cast<NodeId>(w * 64 + std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

bool BitMatrix::IsSymmetric() const {
  for (size_t i = 0; i < n_; ++i) {
    for (NodeId j : RowIndices(i)) {
      if (!Get(j, i)) return false;
    }
  }
  return true;
}

Graph Graph::FromEdges(size_t n, std::span<const Edge> edges) {
  BitMatrix adjacency(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw ParameterError("edge (" + std::to_string(u) + ", " +
                           std::to_string(v) + ") out of range for n=" +
                           std::to_string(n));
    }
    if (u == v) continue;
    adjacency.Set(u, v);
    adjacency.Set(v, u);
  }
  return FromAdjacency(std::move(adjacency));
}

Graph Graph::FromAdjacency(BitMatrix adjacency) {
  const size_t n = adjacency.size();
  for (size_t i = 0; i < n; ++i) {
    if (adjacency.Get(i, i)) {
      throw ParameterError("self-loop at node " + std::to_string(i));
    }
  }
  if (!adjacency.IsSymmetric()) {
    throw ParameterError("adjacency matrix is not symmetric");
  }
  Graph g;
  g.degrees_.resize(n);
  int64_t twice_edges = 0;
  for (size_t i = 0; i < n; ++i) {
    g.degrees_[i] = adjacency.RowPopcount(i);
    twice_edges += g.degrees_[i];
  }
  g.num_edges_ = twice_edges / 2;
  g.adjacency_ = std::move(adjacency);
  return g;
}

int64_t Graph::MaxDegree() const {
  if (degrees_.empty()) return 0;
  return *std::max_element(degrees_.begin(), degrees_.end());
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(num_edges_));
  for (size_t i = 0; i < num_nodes(); ++i) {
    for (NodeId j : adjacency_.RowIndices(i)) {
      if (j > i) out.emplace_back(static_cast<NodeId>(i), j);
    }
  }
  return out;
}

namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Consumes one decimal token; returns false if none or malformed.
bool NextId(std::string_view& rest, uint64_t& out) {
  size_t pos = 0;
  while (pos < rest.size() && IsSpace(rest[pos])) ++pos;
  rest.remove_prefix(pos);
  if (rest.empty()) return false;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), out);
  if (ec != std::errc() || ptr == rest.data()) return false;
  size_t used = static_cast<size_t>(ptr - rest.data());
  if (used < rest.size() && !IsSpace(rest[used])) return false;
  rest.remove_prefix(used);
  return true;
}

bool OnlySpace(std::string_view s) {
  return std::all_of(s.begin(), s.end(), IsSpace);
}

}  // namespace

Graph ParseEdgeList(std::istream& in, std::optional<size_t> limit_n) {
  std::unordered_map<uint64_t, NodeId> remap;
  std::vector<uint64_t> raw_pairs;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest(line);
    if (OnlySpace(rest)) continue;
    size_t first = rest.find_first_not_of(" \t");
    if (rest[first] == '#') continue;
    uint64_t u = 0, v = 0;
    if (!NextId(rest, u) || !NextId(rest, v) || !OnlySpace(rest)) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected two non-negative integer node ids, got '" +
                       line + "'");
    }
    raw_pairs.push_back(u);
    raw_pairs.push_back(v);
    for (uint64_t id : {u, v}) {
      if (!remap.contains(id)) {
        remap.emplace(id, static_cast<NodeId>(remap.size()));
      }
    }
  }

  size_t n = remap.size();
  if (limit_n) n = std::min(n, *limit_n);
  std::vector<Edge> edges;
  edges.reserve(raw_pairs.size() / 2);
  for (size_t k = 0; k < raw_pairs.size(); k += 2) {
    NodeId u = remap.at(raw_pairs[k]);
    NodeId v = remap.at(raw_pairs[k + 1]);
    if (u >= n || v >= n || u == v) continue;
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw ParseError("edge list contains no edges");
  return Graph::FromEdges(n, edges);
}

Graph LoadEdgeList(const std::string& path, std::optional<size_t> limit_n) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list '" + path + "'");
  try {
    return ParseEdgeList(in, limit_n);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void WriteEdgeList(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write edge list '" + path + "'");
  out << "# nodes: " << g.num_nodes() << " edges: " << g.num_edges() << "\n";
  for (auto [u, v] : g.Edges()) out << u << ' ' << v << '\n';
  if (!out) throw IoError("failed writing '" + path + "'");
}

DegreeVector Degrees(const Graph& g) {
  const auto& a = g.adjacency();
  DegreeVector d(g.num_nodes());
  for (size_t i = 0; i < d.size(); ++i) d[i] = a.RowPopcount(i);
  return d;
}

uint64_t ExactTriangleCount(const Graph& g) {
  return ExactTriangleCount(g.adjacency());
}

uint64_t ExactTriangleCount(const BitMatrix& adjacency) {
  if (!adjacency.IsSymmetric()) {
    throw ParameterError("triangle count requires a symmetric matrix");
  }
  const size_t n = adjacency.size();
  const size_t words = adjacency.words_per_row();
  uint64_t total = 0;
  for (size_t i = 0; i < n; ++i) {
    auto row_i = adjacency.Row(i);
    for (NodeId j : adjacency.RowIndices(i)) {
      if (j <= i) continue;
      auto row_j = adjacency.Row(j);
      // Only k > j: mask off bits 0..j in the word holding j.
      size_t start = (j + 1) / 64;
      for (size_t w = start; w < words; ++w) {
        uint64_t common = row_i[w] & row_j[w];
        if (w == start) {
          unsigned shift = (j + 1) % 64;
          common &= shift == 0 ? ~0ULL : (~0ULL << shift);
        }
        total += static_cast<uint64_t>(std::popcount(common));
      }
    }
  }
  return total;
}

}  // namespace cargo
