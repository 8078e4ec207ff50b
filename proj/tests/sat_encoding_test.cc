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

#include "kclique/sat_encoding.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "kclique/errors.h"
#include "kclique/sat_engine.h"
#include "testing/oracles.h"

namespace kclique {
namespace {

TEST(VarLayoutTest, IsABijectionOntoTheVariableRange) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= n; ++k) {
      VarLayout L{n, k};
      std::set<int> used;
      for (int i = 1; i <= n; ++i) used.insert(L.X(i));
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= k; ++j) {
          EXPECT_FALSE(L.IsSelection(L.C(i, j)));
          used.insert(L.C(i, j));
        }
      EXPECT_EQ(static_cast<int>(used.size()), L.num_vars());
      EXPECT_EQ(*used.begin(), 1);
      EXPECT_EQ(*used.rbegin(), L.num_vars());
    }
  }
}

TEST(EncodeKCliqueTest, VariableCountsOfTheDemoGrids) {
  // (n, k) -> variables, as listed for the G(40, 2/3) and G(60, 2/3) runs.
  const std::tuple<int, int, int> rows[] = {
      {40, 8, 409}, {40, 10, 491}, {40, 12, 573}, {60, 11, 792},
      {60, 12, 853}, {60, 13, 914}, {60, 14, 975}, {60, 16, 1097}};
  for (auto [n, k, vars] : rows) {
    EXPECT_EQ(EncodeKClique({Graph(n), k}).formula.num_vars(), vars) << n << "," << k;
  }
  // n + (n+1)(k+1) at (40, 11).
  EXPECT_EQ(EncodeKClique({Graph(40), 11}).formula.num_vars(), 532);
}

TEST(EncodeKCliqueTest, TriangleClauseCount) {
  KCliqueEncoding enc = EncodeKClique({Graph::Complete(3), 3});
  EXPECT_EQ(enc.formula.num_vars(), 3 + 4 * 4);
  EXPECT_EQ(enc.formula.num_clauses(), 53u);
  EXPECT_TRUE(SolveSat(enc.formula).status == SatStatus::kSatisfiable);
  auto models = EnumerateModels(enc.formula, 64);
  ASSERT_EQ(models.size(), 1u);
  EXPECT_EQ(DecodeModel(models[0], enc.layout, Graph::Complete(3)), (VertexSet{1, 2, 3}));
}

TEST(EncodeKCliqueTest, EmptyGraphPairIsUnsatisfiable) {
  KCliqueEncoding enc = EncodeKClique({Graph(2), 2});
  EXPECT_TRUE(EnumerateModels(enc.formula, 64).empty());
}

TEST(EncodeKCliqueTest, RejectsKAboveN) {
  EXPECT_THROW(EncodeKClique({Graph(3), 4}), InputError);
  EXPECT_THROW(EncodeKClique({Graph(3), 0}), InputError);
}

// Sizes counted by a separate pass over the emitted clauses, grouped by
// shape, against the closed forms.
TEST(EncodeKCliqueTest, CountsMatchClosedForms) {
  for (int n = 1; n <= 12; ++n) {
    Graph g = GenerateRandomGraph({n, {1, 2}, static_cast<std::uint64_t>(n)});
    const auto non_edges = static_cast<std::int64_t>(NonEdgePairs(g).size());
    for (int k = 1; k <= n; ++k) {
      KCliqueEncoding enc = EncodeKClique({g, k});
      const VarLayout& L = enc.layout;
      std::int64_t binary_selection = 0, units = 0, ternary = 0, guards = 0;
      for (const Clause& c : enc.formula.clauses()) {
        int selections = 0;
        for (Literal l : c) selections += L.IsSelection(std::abs(l));
        if (c.size() == 1) ++units;
        else if (c.size() == 3) ++ternary;
        else if (selections == 2) ++binary_selection;
        else ++guards;
      }
      EXPECT_EQ(binary_selection, non_edges);
      EXPECT_EQ(units, k + 2);
      EXPECT_EQ(ternary, 2LL * n * (k + 1) + 2LL * n * k);
      EXPECT_EQ(guards, 2LL * n);
      EXPECT_EQ(enc.formula.num_vars(), n + (n + 1) * (k + 1));
      EXPECT_EQ(static_cast<std::int64_t>(enc.formula.num_clauses()),
                KCliqueClauseCount(n, k, non_edges));
    }
  }
}

TEST(EncodeKCliqueTest, EmissionOrderStartsWithNonEdgesEndsWithGoal) {
  Graph g = Graph::FromEdges(3, {{1, 2}, {2, 3}});
  KCliqueEncoding enc = EncodeKClique({g, 2});
  const auto& cl = enc.formula.clauses();
  EXPECT_EQ(cl.front(), (Clause{-1, -3}));
  EXPECT_EQ(cl[1], (Clause{enc.layout.C(0, 0)}));
  EXPECT_EQ(cl.back(), (Clause{enc.layout.C(3, 2)}));
}

TEST(DecodeModelTest, MissingEdgeForcesExclusion) {
  Graph g = Graph::Complete(5);
  Graph h(5);
  for (auto [i, j] : g.Edges())
    if (!(i == 4 && j == 5)) h.AddEdge(i, j);
  KCliqueEncoding enc = EncodeKClique({h, 4});
  auto models = EnumerateModels(enc.formula, 64);
  // {1,2,3,4} and {1,2,3,5}.
  ASSERT_EQ(models.size(), 2u);
  for (const Model& m : models) {
    VertexSet s = DecodeModel(m, enc.layout, h);
    EXPECT_EQ(s.size(), 4);
    EXPECT_FALSE(s.vertices().back() == 5 && s.vertices()[2] == 4);
  }
}

TEST(DecodeModelTest, RejectsInconsistentModels) {
  Graph path = Graph::FromEdges(3, {{1, 2}, {2, 3}});
  KCliqueEncoding enc = EncodeKClique({path, 2});
  Model m(enc.layout.num_vars());
  m.Set(1, true);
  m.Set(3, true);
  EXPECT_THROW(DecodeModel(m, enc.layout, path), InternalError);  // not a clique
  m.Set(3, false);
  EXPECT_THROW(DecodeModel(m, enc.layout, path), InternalError);  // wrong size
}

// Exhaustive over every labeled graph on up to 5 vertices: satisfiable iff a
// k-clique exists, and each model is a proper unary count of the selection.
TEST(EncodeKCliqueTest, ModelsAreExactUnaryCounters) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : testing::AllGraphs(n)) {
      const int omega = testing::SubsetMaxClique(g);
      for (int k = 1; k <= n; ++k) {
        KCliqueEncoding enc = EncodeKClique({g, k});
        const VarLayout& L = enc.layout;
        auto models = EnumerateModels(enc.formula, 64);
        ASSERT_EQ(!models.empty(), k <= omega);
        for (const Model& m : models) {
          int prefix = 0;
          for (int i = 0; i <= n; ++i) {
            if (i > 0) prefix += m.Value(L.X(i));
            int ones = 0;
            for (int j = 0; j <= k; ++j) ones += m.Value(L.C(i, j));
            ASSERT_EQ(ones, 1);
            ASSERT_LE(prefix, k);
            ASSERT_TRUE(m.Value(L.C(i, prefix)));
          }
          ASSERT_EQ(prefix, k);
          DecodeModel(m, L, g);
        }
      }
    }
  }
}

}  // namespace
}  // namespace kclique
