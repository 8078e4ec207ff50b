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

#ifndef KCLIQUE_BACKTRACK_H_
#define KCLIQUE_BACKTRACK_H_

#include "kclique/deadline.h"
#include "kclique/graph.h"
#include "kclique/solve_outcome.h"

namespace kclique {

struct BacktrackOptions {
  // Skip subtrees that cannot reach the target size. Off by default: the
  // plain search counts every clique of size <= k it walks through.
  bool prune = false;
  Deadline deadline;
};

// Depth-first extension of a partial clique C = (c1 < c2 < ...) by each
// vertex v > max(C) adjacent to all of C, in ascending order, backtracking
// on exhaustion and stopping at the first clique of size k.
SolveOutcome BacktrackDecide(const CliqueInstance& instance,
                             const BacktrackOptions& options = {});

// Same traversal without the size-k stop; the witness is the first maximum
// clique met in depth-first order. With `prune`, subtrees whose size plus
// remaining candidates cannot beat the incumbent are skipped.
SolveOutcome BacktrackMax(const Graph& graph,
                          const BacktrackOptions& options = {});

}  // namespace kclique

#endif  // KCLIQUE_BACKTRACK_H_
