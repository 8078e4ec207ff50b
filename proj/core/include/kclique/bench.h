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

#ifndef KCLIQUE_BENCH_H_
#define KCLIQUE_BENCH_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kclique/generator.h"

namespace kclique {

enum class Backend { kBacktrack, kSat, kIlp };

std::string_view BackendName(Backend b);   // "backtrack" | "sat" | "ilp"
std::string_view BackendPrefix(Backend b);  // "back" | "sat" | "ilp"
Backend ParseBackend(std::string_view name);

// One row of a comparison table. Decision backends fill `decision`, the ILP
// backend fills `optimum`; neither is set for timed-out or failed runs.
struct BenchRecord {
  Backend backend = Backend::kSat;
  int n = 0;
  int k = 0;  // 0 for ILP rows
  Probability prob;
  std::uint64_t seed = 0;
  std::optional<bool> decision;
  std::optional<std::int64_t> optimum;
  std::optional<std::int64_t> num_vars;     // SAT rows only
  std::optional<std::int64_t> num_clauses;  // SAT rows only
  std::int64_t elapsed_us = 0;
  bool timeout = false;
  bool error = false;
  // Not part of the CSV report.
  std::uint64_t search_nodes = 0;  // nodes, conflicts or branch nodes
  std::string note;                // error text, if any

  // "sat(60,12,2/3)", "back(60,12,2/3)" or "ilp(60,2/3)".
  std::string Label() const;
  // "SAT" / "UNSAT", the optimum, "timeout" or "error".
  std::string ResultText() const;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct GraphSpecConfig {
  GenSpec gen;
  std::vector<int> ks;
};

struct SuiteConfig {
  std::vector<GraphSpecConfig> graphs;
  std::vector<Backend> backends = {Backend::kBacktrack, Backend::kSat, Backend::kIlp};
  double timeout_s = 60.0;
  int workers = 0;  // 0: one per hardware thread
  bool prune = false;
  std::string external_sat;  // empty: embedded engine
  std::string external_ilp;  // empty: embedded branch-and-bound
  std::string csv_path;
  std::string markdown_path;
  std::string diagnostics_dir = "kclique-diagnostics";

  // Throws InputError on k outside 1..n, non-positive timeout, or no graphs.
  void Validate() const;
};

// JSON document with keys mirroring SuiteConfig:
//   {"graphs": [{"n": 60, "prob": "2/3", "seed": 1, "k": [11, 12]}],
//    "backends": ["backtrack", "sat", "ilp"], "timeout_s": 60, "workers": 0,
//    "prune": false, "external_sat": "...", "external_ilp": "...",
//    "output": {"csv": "...", "markdown": "...", "diagnostics": "..."}}
SuiteConfig ParseSuiteConfig(std::string_view json_text);

// Backends disagreed on some (graph, k). The message names the cell and the
// directory holding the dumped graph and encodings.
class SuiteDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generates each graph once from its seed, runs every backend (and every k
// for the decision backends) under a per-run wall-clock timeout, validates
// witnesses, and cross-checks completed runs: backtrack and SAT decisions
// must match each other and `ILP optimum >= k`. Records come back ordered by
// (graph position in the config, backend, k) regardless of worker count.
std::vector<BenchRecord> RunSuite(const SuiteConfig& cfg);

// Comma-separated report; fields containing commas are double-quoted.
//   instance,backend,n,k,prob,seed,result,num_vars,num_clauses,time_ms,timeout
std::string ToCsv(const std::vector<BenchRecord>& records);
std::vector<BenchRecord> ParseCsv(std::string_view csv);

// One markdown table per generated graph, in the column layout
// instance | # variables | # clauses | time | result.
std::string ToMarkdown(const std::vector<BenchRecord>& records);

}  // namespace kclique

#endif  // KCLIQUE_BENCH_H_
