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

#ifndef KCLIQUE_SAT_ENCODING_H_
#define KCLIQUE_SAT_ENCODING_H_

#include <cstdint>

#include "kclique/cnf.h"
#include "kclique/graph.h"

namespace kclique {

// Variable numbering for the k-clique encoding:
//   x(i)    = i                       selection of vertex i, i in 1..n
//   c(i, j) = n + i*(k+1) + j + 1     "exactly j of x(1..i) are true",
//                                     i in 0..n, j in 0..k
struct VarLayout {
  int n = 0;
  int k = 0;

  int X(int i) const { return i; }
  int C(int i, int j) const { return n + i * (k + 1) + j + 1; }
  int num_vars() const { return n + (n + 1) * (k + 1); }
  bool IsSelection(int var) const { return var >= 1 && var <= n; }
};

// Closed-form sizes of the encoding for a graph with `non_edges` missing
// pairs.
std::int64_t KCliqueClauseCount(int n, int k, std::int64_t non_edges);

struct KCliqueEncoding {
  CnfFormula formula;
  VarLayout layout;
};

// CNF that is satisfiable iff the graph has a clique of size k. Clause
// groups, in emission order:
//   non-edges   (-x_i | -x_j) for every non-adjacent pair i < j
//   init        (c(0,0)), (-c(0,j)) for j = 1..k
//   skip        x_i false: c(i,j) <-> c(i-1,j), j = 0..k
//   take        x_i true:  c(i,j) <-> c(i-1,j-1), j = 1..k
//   overflow    (-x_i | -c(i-1,k))
//   zero        (-x_i | -c(i,0))
//   goal        (c(n,k))
// Each counter level i then holds exactly one true c(i,.), equal to the
// number of selected vertices among 1..i. Throws InputError unless
// 1 <= k <= n.
KCliqueEncoding EncodeKClique(const CliqueInstance& instance);

// Selected vertices of a model of EncodeKClique(instance). Throws
// InternalError if the set is not a k-clique of `graph`.
VertexSet DecodeModel(const Model& model, const VarLayout& layout,
                      const Graph& graph);

}  // namespace kclique

#endif  // KCLIQUE_SAT_ENCODING_H_
