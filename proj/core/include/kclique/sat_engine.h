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

#ifndef KCLIQUE_SAT_ENGINE_H_
#define KCLIQUE_SAT_ENGINE_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "kclique/cnf.h"
#include "kclique/deadline.h"

namespace kclique {

enum class SatStatus { kSatisfiable, kUnsatisfiable, kUnknown };

std::string_view SatStatusName(SatStatus s);  // "SAT" | "UNSAT" | "UNKNOWN"

struct SatStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t restarts = 0;
};

// `model` is present iff status == kSatisfiable. kUnknown only arises from
// an expired deadline.
struct SatResult {
  SatStatus status = SatStatus::kUnknown;
  std::optional<Model> model;
  SatStats stats;
};

struct SatOptions {
  Deadline deadline;
  // Luby restart unit, in conflicts.
  int restart_base = 100;
};

// Conflict-driven clause learning: two-watched-literal propagation, first
// UIP learning with local minimization, VSIDS branching (ties to the lowest
// variable), phase saving, Luby restarts and activity-based learnt clause
// reduction. Deterministic for a given formula. Any returned model is
// re-checked against every input clause; a failure throws InternalError.
SatResult SolveSat(const CnfFormula& formula, const SatOptions& options = {});

// Every satisfying total assignment, by depth-first enumeration in variable
// order that abandons a branch once some clause is fully assigned and false.
// Throws RefusalError when formula.num_vars() > var_limit.
std::vector<Model> EnumerateModels(const CnfFormula& formula, int var_limit = 24);

}  // namespace kclique

#endif  // KCLIQUE_SAT_ENGINE_H_
