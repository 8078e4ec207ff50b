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

#ifndef KCLIQUE_ILP_H_
#define KCLIQUE_ILP_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kclique/deadline.h"
#include "kclique/graph.h"

namespace kclique {

struct Term {
  int var;  // 1-based
  std::int64_t coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// sum(terms) <= rhs
struct LinearConstraint {
  std::vector<Term> terms;
  std::int64_t rhs = 0;
  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

// Maximize objective . x over binary x subject to packing constraints
// (nonnegative coefficients).
struct IlpModel {
  int num_vars = 0;
  std::vector<std::int64_t> objective;  // indexed 0..num_vars-1 for x1..xn
  std::vector<LinearConstraint> constraints;

  // Throws InputError for out-of-range variables, empty constraints,
  // negative constraint coefficients, or a mis-sized objective.
  void Validate() const;
};

enum class IlpStatus { kOptimal, kInfeasible, kTimeout };

std::string_view IlpStatusName(IlpStatus s);

struct IlpStats {
  std::uint64_t branch_nodes = 0;
  std::int64_t greedy_value = 0;
};

// On kOptimal, `assignment` (x1..xn at indices 0..n-1) is feasible and
// attains `optimum`. On kTimeout it holds the incumbent, whose value is a
// lower bound only.
struct IlpResult {
  IlpStatus status = IlpStatus::kInfeasible;
  std::int64_t optimum = 0;
  std::vector<std::uint8_t> assignment;
  IlpStats stats;
};

// max sum x_i subject to x_i + x_j <= 1 for each non-adjacent pair i < j,
// in lexicographic pair order. Edge pairs would give x_i + x_j <= 2 and are
// omitted.
IlpModel EncodeMaxClique(const Graph& g);

struct IlpOptions {
  Deadline deadline;
};

// Exact depth-first 0-1 branch-and-bound.
//   - Branch on the free variable occurring in the most active constraints
//     (lowest index on ties), value 1 first.
//   - Fixing a variable to 1 forces to 0 every free variable whose
//     coefficient exceeds the remaining slack of a shared constraint.
//   - Bound: objective of the ones plus positive objective of the free
//     variables; prune when it does not beat the incumbent.
//   - Incumbent seeded greedily, variables in order of fewest constraints.
IlpResult SolveIlp(const IlpModel& model, const IlpOptions& options = {});

// lp_solve LP text:
//   max: x1 + x2 + x3;
//   c1: x1 + x3 <= 1;
//   bin x1,x2,x3;
std::string WriteLp(const IlpModel& model);

// Vertices with x_i = 1. Throws InternalError when the set is not a clique
// of `g` or its size differs from res.optimum.
VertexSet DecodeIlp(const IlpResult& res, const Graph& g);

}  // namespace kclique

#endif  // KCLIQUE_ILP_H_
