// Copyright 2026 The kclique-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KCLIQUE_GRAPH_H_
#define KCLIQUE_GRAPH_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kclique {

// Undirected simple graph on vertices 1..n stored as adjacency bit-rows.
// Bit v of row u (bit 0 unused) is set iff {u, v} is an edge, so candidate
// filtering during search is a word-wise AND of rows.
class Graph {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  // Edgeless graph on n >= 1 vertices. Throws InputError for n < 1.
  explicit Graph(int n);

  int n() const { return n_; }
  int words_per_row() const { return words_; }

  bool HasEdge(int u, int v) const;
  // Adds {u, v}; u != v, both in 1..n. Adding an existing edge is a no-op.
  void AddEdge(int u, int v);

  std::span<const Word> Row(int u) const {
    return {rows_.data() + static_cast<std::size_t>(u) * words_,
            static_cast<std::size_t>(words_)};
  }

  int Degree(int u) const;
  std::int64_t NumEdges() const;
  // Edges as (i, j) with i < j in lexicographic order.
  std::vector<std::pair<int, int>> Edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

  static Graph Complete(int n);
  // Convenience for tests and fixtures.
  static Graph FromEdges(int n, std::initializer_list<std::pair<int, int>> edges);

 private:
  void CheckVertex(int v) const;

  int n_;
  int words_;
  std::vector<Word> rows_;  // (n + 1) rows; row 0 unused
};

// Strictly increasing list of vertex indices (1-based).
class VertexSet {
 public:
  VertexSet() = default;
  // Sorts and validates; throws InputError on duplicates or indices < 1.
  explicit VertexSet(std::vector<int> vertices);
  VertexSet(std::initializer_list<int> vertices)
      : VertexSet(std::vector<int>(vertices)) {}

  const std::vector<int>& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  bool empty() const { return vertices_.empty(); }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  std::string ToString() const;  // "{1,2,3}"

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> vertices_;
};

// A k-Clique decision question: does `graph` contain k pairwise-adjacent
// vertices?
struct CliqueInstance {
  Graph graph;
  int k;

  // Throws InputError unless 1 <= k <= graph.n().
  void Validate() const;
};

// True iff every unordered pair of `s` is an edge. Sets of size 0 or 1 are
// cliques. Throws InputError when a vertex exceeds g.n().
bool IsClique(const Graph& g, const VertexSet& s);

// Unordered non-adjacent pairs (i, j), i < j, in lexicographic order.
std::vector<std::pair<int, int>> NonEdgePairs(const Graph& g);

enum class GraphFormat { kDimacsEdge, kMatrix };

// Parses either a DIMACS edge file ("p edge n m" / "e i j") or a 0/1
// adjacency matrix (first line n, then n rows of n characters). The format
// is detected from the first non-comment line. Throws ParseError.
Graph ReadGraph(std::string_view text);
std::string WriteGraph(const Graph& g, GraphFormat format);

GraphFormat ParseGraphFormat(std::string_view name);  // "edge" | "matrix"

Graph ReadGraphFile(const std::string& path);
void WriteGraphFile(const Graph& g, GraphFormat format, const std::string& path);

}  // namespace kclique

#endif  // KCLIQUE_GRAPH_H_
