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

#ifndef KCLIQUE_TESTS_TESTING_ORACLES_H_
#define KCLIQUE_TESTS_TESTING_ORACLES_H_

// Test-only reference implementations. Nothing here calls into the solver
// code paths it is used to check: adjacency is read through Graph::HasEdge
// only, and formulas through CnfFormula::clauses().

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "kclique/cnf.h"
#include "kclique/generator.h"
#include "kclique/graph.h"

namespace kclique::testing {

// Clique number over all 2^n vertex subsets (n <= 20).
inline int SubsetMaxClique(const Graph& g) {
  const int n = g.n();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = i + 1; j < n && ok; ++j)
        if ((mask >> j & 1) && !g.HasEdge(i + 1, j + 1)) ok = false;
    }
    if (ok) best = size;
  }
  return best;
}

// All nonempty cliques of size <= max_size, as increasing vertex sequences,
// in lexicographic order (a prefix precedes its extensions). This is the
// preorder of a depth-first walk that extends by ascending higher vertices.
inline std::vector<std::vector<int>> CliquesInLexOrder(const Graph& g, int max_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  // Recursive generation over "next vertex" choices, checked pairwise.
  auto rec = [&](auto&& self, int from) -> void {
    for (int v = from; v <= g.n(); ++v) {
      bool ok = true;
      for (int u : current) ok = ok && g.HasEdge(u, v);
      if (!ok) continue;
      current.push_back(v);
      out.push_back(current);
      if (static_cast<int>(current.size()) < max_size) self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// Satisfiability by trying all 2^num_vars assignments (num_vars <= 20).
inline bool TruthTableSatisfiable(const CnfFormula& f) {
  const int n = f.num_vars();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool all = true;
    for (const Clause& c : f.clauses()) {
      bool sat = false;
      for (Literal l : c) {
        const bool value = mask >> (std::abs(l) - 1) & 1;
        if (l > 0 ? value : !value) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

// Every labeled simple graph on n vertices (n <= 6), edges indexed by the
// upper-triangle pair order.
inline std::vector<Graph> AllGraphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  std::vector<Graph> graphs;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (mask >> p & 1) g.AddEdge(pairs[p].first, pairs[p].second);
    graphs.push_back(std::move(g));
  }
  return graphs;
}

// The "50 random graphs at n = 10" corpus used across unit tests: seeds
// 0..49 cycling through densities 1/4, 1/2, 3/4.
inline std::vector<Graph> SmallRandomGraphs(int n = 10, int count = 50) {
  const Probability densities[] = {{1, 4}, {1, 2}, {3, 4}};
  std::vector<Graph> graphs;
  for (int s = 0; s < count; ++s) {
    GenSpec spec{n, densities[s % 3], static_cast<std::uint64_t>(s)};
    graphs.push_back(GenerateRandomGraph(spec));
  }
  return graphs;
}

}  // namespace kclique::testing

#endif  // KCLIQUE_TESTS_TESTING_ORACLES_H_
