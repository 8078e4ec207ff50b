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

#ifndef KCLIQUE_SOLVE_OUTCOME_H_
#define KCLIQUE_SOLVE_OUTCOME_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "kclique/graph.h"

namespace kclique {

enum class Decision { kFound, kNotFound, kTimeout };

std::string_view DecisionName(Decision d);  // "found" | "not-found" | "timeout"

struct SearchStats {
  std::uint64_t nodes_visited = 0;  // partial cliques pushed onto the stack
  int max_depth_reached = 0;        // largest partial clique seen
};

// Result of one decision or maximization run. `witness` is present exactly
// when `decision == kFound`.
struct SolveOutcome {
  Decision decision = Decision::kNotFound;
  std::optional<VertexSet> witness;
  SearchStats stats;
  std::chrono::nanoseconds elapsed{0};
};

}  // namespace kclique

#endif  // KCLIQUE_SOLVE_OUTCOME_H_
