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

#include "kclique/graph.h"

#include <algorithm>
#include <bit>
#include <sstream>

#include "kclique/errors.h"
#include "kclique/file_util.h"

namespace kclique {

Graph::Graph(int n) : n_(n), words_(0) {
  if (n < 1) throw InputError("graph must have at least one vertex");
  words_ = (n + 1 + kWordBits - 1) / kWordBits;
  rows_.assign(static_cast<std::size_t>(n + 1) * words_, 0);
}

void Graph::CheckVertex(int v) const {
  if (v < 1 || v > n_) {
    throw InputError("vertex " + std::to_string(v) + " outside 1.." +
                     std::to_string(n_));
  }
}

bool Graph::HasEdge(int u, int v) const {
  CheckVertex(u);
  CheckVertex(v);
  return (Row(u)[v / kWordBits] >> (v % kWordBits)) & 1U;
}

void Graph::AddEdge(int u, int v) {
  CheckVertex(u);
  CheckVertex(v);
  if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
  rows_[static_cast<std::size_t>(u) * words_ + v / kWordBits] |=
      Word{1} << (v % kWordBits);
  rows_[static_cast<std::size_t>(v) * words_ + u / kWordBits] |=
      Word{1} << (u % kWordBits);
}

int Graph::Degree(int u) const {
  CheckVertex(u);
  int degree = 0;
  for (Word w : Row(u)) degree += std::popcount(w);
  return degree;
}

std::int64_t Graph::NumEdges() const {
  std::int64_t twice = 0;
  for (int u = 1; u <= n_; ++u) twice += Degree(u);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::Edges() const {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (HasEdge(i, j)) edges.emplace_back(i, j);
  return edges;
}

Graph Graph::Complete(int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.AddEdge(i, j);
  return g;
}

Graph Graph::FromEdges(int n,
                       std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.AddEdge(u, v);
  return g;
}

VertexSet::VertexSet(std::vector<int> vertices)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (!vertices_.empty() && vertices_.front() < 1)
    throw InputError("vertex indices are 1-based");
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw InputError("duplicate vertex in vertex set");
}

std::string VertexSet::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vertices_[i]);
  }
  return out + "}";
}

void CliqueInstance::Validate() const {
  if (k < 1 || k > graph.n()) {
    throw InputError("k = " + std::to_string(k) + " outside 1.." +
                     std::to_string(graph.n()));
  }
}

bool IsClique(const Graph& g, const VertexSet& s) {
  for (int v : s) {
    if (v > g.n()) {
      throw InputError("vertex " + std::to_string(v) + " outside 1.." +
                       std::to_string(g.n()));
    }
  }
  const auto& vs = s.vertices();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.HasEdge(vs[a], vs[b])) return false;
  return true;
}

std::vector<std::pair<int, int>> NonEdgePairs(const Graph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= g.n(); ++i)
    for (int j = i + 1; j <= g.n(); ++j)
      if (!g.HasEdge(i, j)) pairs.emplace_back(i, j);
  return pairs;
}

namespace {

bool IsCommentOrBlank(std::string_view line) {
  auto first = line.find_first_not_of(" \t");
  return first == std::string_view::npos || line[first] == 'c';
}

int ParseVertexCount(std::string_view token, int line_no) {
  auto n = ParseInteger<int>(token);
  if (!n || *n < 1) {
    throw ParseError(line_no, "invalid vertex count '" + std::string(token) + "'");
  }
  return *n;
}

Graph ReadDimacsEdge(const std::vector<std::string_view>& lines,
                     std::size_t header_index) {
  const int header_line = static_cast<int>(header_index) + 1;
  auto header = SplitWords(lines[header_index]);
  if (header.size() != 4 || header[0] != "p" || header[1] != "edge")
    throw ParseError(header_line, "expected 'p edge <n> <m>'");
  int n = ParseVertexCount(header[2], header_line);
  auto m = ParseInteger<long long>(header[3]);
  if (!m || *m < 0) throw ParseError(header_line, "invalid edge count");

  Graph g(n);
  for (std::size_t idx = header_index + 1; idx < lines.size(); ++idx) {
    const int line_no = static_cast<int>(idx) + 1;
    if (IsCommentOrBlank(lines[idx])) continue;
    auto words = SplitWords(lines[idx]);
    if (words[0] == "p") throw ParseError(line_no, "duplicate header");
    if (words.size() != 3 || words[0] != "e")
      throw ParseError(line_no, "expected 'e <i> <j>'");
    auto u = ParseInteger<int>(words[1]);
    auto v = ParseInteger<int>(words[2]);
    if (!u || !v) throw ParseError(line_no, "invalid vertex index");
    if (*u < 1 || *u > n || *v < 1 || *v > n)
      throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(n));
    if (*u == *v) throw ParseError(line_no, "self-loop");
    g.AddEdge(*u, *v);
  }
  return g;
}

Graph ReadMatrix(const std::vector<std::string_view>& lines,
                 std::size_t header_index) {
  const int header_line = static_cast<int>(header_index) + 1;
  auto header = SplitWords(lines[header_index]);
  if (header.size() != 1) throw ParseError(header_line, "expected vertex count");
  const int n = ParseVertexCount(header[0], header_line);

  std::vector<std::string_view> rows;
  std::vector<int> row_lines;
  for (std::size_t idx = header_index + 1; idx < lines.size(); ++idx) {
    auto words = SplitWords(lines[idx]);
    if (words.empty()) continue;
    const int line_no = static_cast<int>(idx) + 1;
    if (words.size() != 1) throw ParseError(line_no, "matrix row contains spaces");
    if (static_cast<int>(rows.size()) == n)
      throw ParseError(line_no, "more than " + std::to_string(n) + " matrix rows");
    if (static_cast<int>(words[0].size()) != n)
      throw ParseError(line_no, "matrix row must have " + std::to_string(n) + " entries");
    if (words[0].find_first_not_of("01") != std::string_view::npos)
      throw ParseError(line_no, "matrix entries must be 0 or 1");
    rows.push_back(words[0]);
    row_lines.push_back(line_no);
  }
  if (static_cast<int>(rows.size()) != n)
    throw ParseError(0, "expected " + std::to_string(n) + " matrix rows, got " +
                            std::to_string(rows.size()));

  Graph g(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i][i] != '0') throw ParseError(row_lines[i], "nonzero diagonal entry");
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw ParseError(row_lines[std::max(i, j)],
                         "asymmetric matrix at (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")");
      }
      if (j > i && rows[i][j] == '1') g.AddEdge(i + 1, j + 1);
    }
  }
  return g;
}

}  // namespace

Graph ReadGraph(std::string_view text) {
  auto lines = SplitLines(text);
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    if (IsCommentOrBlank(lines[idx])) continue;
    auto words = SplitWords(lines[idx]);
    if (words[0] == "p") return ReadDimacsEdge(lines, idx);
    return ReadMatrix(lines, idx);
  }
  throw ParseError(0, "empty graph file");
}

std::string WriteGraph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  if (format == GraphFormat::kDimacsEdge) {
    auto edges = g.Edges();
    out << "p edge " << g.n() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << "e " << u << ' ' << v << '\n';
  } else {
    out << g.n() << '\n';
    std::string row(static_cast<std::size_t>(g.n()), '0');
    for (int i = 1; i <= g.n(); ++i) {
      for (int j = 1; j <= g.n(); ++j) row[j - 1] = g.HasEdge(i, j) ? '1' : '0';
      out << row << '\n';
    }
  }
  return out.str();
}

GraphFormat ParseGraphFormat(std::string_view name) {
  if (name == "edge" || name == "dimacs") return GraphFormat::kDimacsEdge;
  if (name == "matrix") return GraphFormat::kMatrix;
  throw InputError("unknown graph format '" + std::string(name) +
                   "' (expected edge|matrix)");
}

Graph ReadGraphFile(const std::string& path) {
  return ReadGraph(ReadTextFile(path));
}

void WriteGraphFile(const Graph& g, GraphFormat format, const std::string& path) {
  WriteTextFile(path, WriteGraph(g, format));
}

}  // namespace kclique
