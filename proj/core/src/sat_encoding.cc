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

#include "kclique/errors.h"

namespace kclique {

std::int64_t KCliqueClauseCount(int n, int k, std::int64_t non_edges) {
  const std::int64_t nn = n, kk = k;
  return non_edges + (kk + 1) + 2 * nn * (kk + 1) + 2 * nn * kk + 2 * nn + 1;
}

KCliqueEncoding EncodeKClique(const CliqueInstance& instance) {
  instance.Validate();
  const Graph& g = instance.graph;
  const VarLayout L{g.n(), instance.k};
  const int n = L.n, k = L.k;
  CnfFormula f(L.num_vars());

  for (auto [i, j] : NonEdgePairs(g)) f.AddClause({-L.X(i), -L.X(j)});

  f.AddClause({L.C(0, 0)});
  for (int j = 1; j <= k; ++j) f.AddClause({-L.C(0, j)});

  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j <= k; ++j) {
      f.AddClause({L.X(i), -L.C(i, j), L.C(i - 1, j)});
      f.AddClause({L.X(i), L.C(i, j), -L.C(i - 1, j)});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= k; ++j) {
      f.AddClause({-L.X(i), -L.C(i, j), L.C(i - 1, j - 1)});
      f.AddClause({-L.X(i), L.C(i, j), -L.C(i - 1, j - 1)});
    }
  }
  for (int i = 1; i <= n; ++i) f.AddClause({-L.X(i), -L.C(i - 1, k)});
  for (int i = 1; i <= n; ++i) f.AddClause({-L.X(i), -L.C(i, 0)});
  f.AddClause({L.C(n, k)});

  return {std::move(f), L};
}

VertexSet DecodeModel(const Model& model, const VarLayout& layout,
                      const Graph& graph) {
  if (model.num_vars() < layout.num_vars())
    throw InternalError("model does not cover the encoding's variables");
  std::vector<int> chosen;
  for (int i = 1; i <= layout.n; ++i)
    if (model.Value(layout.X(i))) chosen.push_back(i);
  VertexSet set(std::move(chosen));
  if (set.size() != layout.k) {
    throw InternalError("decoded " + std::to_string(set.size()) +
                        " vertices, expected " + std::to_string(layout.k));
  }
  if (!IsClique(graph, set))
    throw InternalError("decoded vertex set " + set.ToString() + " is not a clique");
  return set;
}

}  // namespace kclique
