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

// Command-line front end: instance generation, encodings, solving, oracle
// estimates and the benchmark harness.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"
#include "kclique/backtrack.h"
#include "kclique/bench.h"
#include "kclique/cnf.h"
#include "kclique/errors.h"
#include "kclique/external.h"
#include "kclique/file_util.h"
#include "kclique/generator.h"
#include "kclique/graph.h"
#include "kclique/ilp.h"
#include "kclique/oracle.h"
#include "kclique/sat_encoding.h"
#include "kclique/sat_engine.h"

namespace kclique {
namespace {

constexpr int kExitFound = 10;
constexpr int kExitNotFound = 20;
constexpr int kExitTimeout = 30;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 3;

struct GlobalFlags {
  std::uint64_t seed = 0;
  double timeout_s = 0;  // 0: no limit
  std::string format = "edge";

  Deadline MakeDeadline() const {
    return timeout_s > 0 ? Deadline::After(std::chrono::duration<double>(timeout_s))
                         : Deadline::Never();
  }
};

// Writes to `path`, or to stdout when it is empty or "-".
void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    WriteTextFile(path, text);
  }
}

int ExitFor(Decision d) {
  switch (d) {
    case Decision::kFound:
      return kExitFound;
    case Decision::kNotFound:
      return kExitNotFound;
    case Decision::kTimeout:
      return kExitTimeout;
  }
  return kExitUsage;
}

void PrintLogNumber(const std::string& name, const LogNumber& x) {
  std::cout << name << ": " << x.ToScientific(4);
  if (!x.is_zero()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (log10 %.4f)", x.log10());
    std::cout << buf;
  }
  std::cout << '\n';
}

struct SolveFlags {
  std::string backend = "sat";
  int k = 0;
  bool prune = false;
  std::string external_sat;
  std::string external_ilp;
  std::string graph_path;
};

int RunSolve(const GlobalFlags& global, const SolveFlags& flags) {
  const Graph g = ReadGraphFile(flags.graph_path);
  const Deadline deadline = global.MakeDeadline();
  const Backend backend = ParseBackend(flags.backend);
  std::cout << "backend: " << BackendName(backend) << '\n';

  if (backend == Backend::kBacktrack) {
    BacktrackOptions opts;
    opts.prune = flags.prune;
    opts.deadline = deadline;
    SolveOutcome out;
    if (flags.k > 0) {
      out = BacktrackDecide({g, flags.k}, opts);
    } else {
      out = BacktrackMax(g, opts);
    }
    std::cout << "decision: " << DecisionName(out.decision) << '\n';
    if (out.witness) {
      if (flags.k == 0) std::cout << "clique_number: " << out.witness->size() << '\n';
      std::cout << "witness: " << out.witness->ToString() << '\n';
    }
    std::cout << "nodes_visited: " << out.stats.nodes_visited << '\n';
    return ExitFor(out.decision);
  }

  if (backend == Backend::kSat) {
    if (flags.k < 1) throw InputError("--k is required for the sat backend");
    KCliqueEncoding enc = EncodeKClique({g, flags.k});
    std::cout << "num_vars: " << enc.formula.num_vars() << '\n'
              << "num_clauses: " << enc.formula.num_clauses() << '\n';
    SatResult res;
    if (flags.external_sat.empty()) {
      SatOptions opts;
      opts.deadline = deadline;
      res = SolveSat(enc.formula, opts);
    } else {
      const std::string path = std::filesystem::temp_directory_path() /
                               ("kclique-solve-" + std::to_string(::getpid()) + ".cnf");
      WriteTextFile(path, WriteDimacs(enc.formula));
      try {
        res = RunExternalSat(path, flags.external_sat, deadline);
      } catch (...) {
        std::filesystem::remove(path);
        throw;
      }
      std::filesystem::remove(path);
    }
    Decision d = res.status == SatStatus::kSatisfiable     ? Decision::kFound
                 : res.status == SatStatus::kUnsatisfiable ? Decision::kNotFound
                                                           : Decision::kTimeout;
    std::cout << "decision: " << DecisionName(d) << '\n';
    if (res.model) std::cout << "witness: " << DecodeModel(*res.model, enc.layout, g).ToString() << '\n';
    std::cout << "conflicts: " << res.stats.conflicts << '\n';
    return ExitFor(d);
  }

  IlpModel model = EncodeMaxClique(g);
  IlpResult res;
  if (flags.external_ilp.empty()) {
    IlpOptions opts;
    opts.deadline = deadline;
    res = SolveIlp(model, opts);
  } else {
    const std::string path = std::filesystem::temp_directory_path() /
                             ("kclique-solve-" + std::to_string(::getpid()) + ".lp");
    WriteTextFile(path, WriteLp(model));
    try {
      res = RunExternalIlp(path, flags.external_ilp, model.num_vars, deadline);
    } catch (...) {
      std::filesystem::remove(path);
      throw;
    }
    std::filesystem::remove(path);
  }
  std::cout << "num_vars: " << model.num_vars << '\n'
            << "num_constraints: " << model.constraints.size() << '\n'
            << "status: " << IlpStatusName(res.status) << '\n';
  if (res.status == IlpStatus::kTimeout) {
    std::cout << "incumbent: " << res.optimum << '\n';
    return kExitTimeout;
  }
  if (res.status == IlpStatus::kInfeasible) throw InternalError("clique ILP reported infeasible");
  const VertexSet witness = DecodeIlp(res, g);
  std::cout << "optimum: " << res.optimum << '\n' << "witness: " << witness.ToString() << '\n';
  if (flags.k > 0) {
    const Decision d = res.optimum >= flags.k ? Decision::kFound : Decision::kNotFound;
    std::cout << "decision: " << DecisionName(d) << '\n';
    return ExitFor(d);
  }
  return 0;
}

int RunBench(const std::string& config_path, std::string csv_path, std::string markdown_path,
             std::optional<int> workers, const GlobalFlags& global, bool timeout_set) {
  SuiteConfig cfg = ParseSuiteConfig(ReadTextFile(config_path));
  if (!csv_path.empty()) cfg.csv_path = csv_path;
  if (!markdown_path.empty()) cfg.markdown_path = markdown_path;
  if (workers) cfg.workers = *workers;
  if (timeout_set) cfg.timeout_s = global.timeout_s;
  std::vector<BenchRecord> records;
  try {
    records = RunSuite(cfg);
  } catch (const SuiteDisagreement& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDisagreement;
  }
  const std::string md = ToMarkdown(records);
  if (!cfg.csv_path.empty()) WriteTextFile(cfg.csv_path, ToCsv(records));
  if (!cfg.markdown_path.empty()) WriteTextFile(cfg.markdown_path, md);
  std::cout << md;
  for (const auto& r : records)
    if (r.error) std::cerr << "warning: " << r.Label() << " failed: " << r.note << '\n';
  return 0;
}

// Competition-style standalone solver: prints "s ..." and "v ..." lines and
// exits 10 / 20, or 0 on timeout.
int RunSatSolve(const std::string& cnf_path, const GlobalFlags& global) {
  const CnfFormula f = ReadDimacs(ReadTextFile(cnf_path));
  SatOptions opts;
  opts.deadline = global.MakeDeadline();
  const SatResult res = SolveSat(f, opts);
  std::cout << "c conflicts " << res.stats.conflicts << " decisions " << res.stats.decisions
            << '\n'
            << FormatSatCompetitionOutput(res);
  switch (res.status) {
    case SatStatus::kSatisfiable:
      return kExitFound;
    case SatStatus::kUnsatisfiable:
      return kExitNotFound;
    case SatStatus::kUnknown:
      return 0;
  }
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"k-clique lab: backtracking, SAT and 0-1 ILP approaches to k-Clique"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags global;
  app.add_option("--seed", global.seed, "Generator seed");
  auto* timeout_opt =
      app.add_option("--timeout", global.timeout_s, "Wall-clock limit in seconds (0: none)")
          ->check(CLI::NonNegativeNumber);
  app.add_option("--format", global.format, "Graph output format")
      ->check(CLI::IsMember({"edge", "dimacs", "matrix"}));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a seeded random graph G(n, a/b)");
  int gen_n = 0;
  std::string gen_prob;
  std::string gen_out;
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_option("--prob", gen_prob, "Edge probability a/b")->required();
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  // encode-sat
  auto* enc_sat = app.add_subcommand("encode-sat", "Write the k-Clique CNF in DIMACS format");
  int enc_k = 0;
  std::string enc_graph, enc_out;
  enc_sat->add_option("--k", enc_k, "Clique size")->required();
  enc_sat->add_option("graph", enc_graph, "Graph file")->required();
  enc_sat->add_option("-o,--output", enc_out, "Output file (default stdout)");

  // encode-ilp
  auto* enc_ilp = app.add_subcommand("encode-ilp", "Write the maximum-clique ILP in LP format");
  std::string ilp_graph, ilp_out;
  enc_ilp->add_option("graph", ilp_graph, "Graph file")->required();
  enc_ilp->add_option("-o,--output", ilp_out, "Output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Decide k-Clique or compute the clique number");
  SolveFlags sf;
  solve->add_option("--backend", sf.backend, "backtrack | sat | ilp")
      ->check(CLI::IsMember({"backtrack", "sat", "ilp"}));
  solve->add_option("--k", sf.k, "Clique size (backtrack without --k: maximum clique)")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--prune", sf.prune, "Backtrack: cut branches that cannot reach size k");
  solve->add_option("--external-sat", sf.external_sat,
                    "External SAT solver command ({file}, {out} placeholders)");
  solve->add_option("--external-ilp", sf.external_ilp,
                    "External LP solver command ({file} placeholder)");
  solve->add_option("graph", sf.graph_path, "Graph file")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute force and combinatorial estimates");
  oracle->require_subcommand(1);
  auto* decide = oracle->add_subcommand("decide", "Brute-force k-subset check");
  int or_k = 0, or_n = 0;
  std::string or_graph, or_prob;
  double or_sps = 2.6e9;
  decide->add_option("--k", or_k, "Clique size")->required();
  decide->add_option("graph", or_graph, "Graph file")->required();
  auto* expected = oracle->add_subcommand("expected", "Expected number of k-cliques in G(n, a/b)");
  expected->add_option("--n", or_n, "Vertex count")->required();
  expected->add_option("--k", or_k, "Clique size")->required();
  expected->add_option("--prob", or_prob, "Edge probability a/b")->required();
  auto* naive = oracle->add_subcommand("naive", "Time to check all C(n, k) subsets");
  naive->add_option("--n", or_n, "Vertex count")->required();
  naive->add_option("--k", or_k, "Clique size")->required();
  naive->add_option("--steps-per-second", or_sps, "Subsets checked per second")
      ->check(CLI::PositiveNumber);

  // bench
  auto* bench = app.add_subcommand("bench", "Run a JSON benchmark suite");
  std::string bench_config, bench_csv, bench_md;
  std::optional<int> bench_workers;
  bench->add_option("config", bench_config, "Suite config (JSON)")->required();
  bench->add_option("-o,--csv", bench_csv, "CSV report path");
  bench->add_option("--markdown", bench_md, "Markdown report path");
  bench->add_option("--workers", bench_workers, "Parallel solver runs")->check(CLI::PositiveNumber);

  // sat-solve
  auto* sat_solve =
      app.add_subcommand("sat-solve", "Solve a DIMACS CNF with the embedded engine");
  std::string sat_cnf;
  sat_solve->add_option("cnf", sat_cnf, "DIMACS CNF file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      const Graph g = GenerateRandomGraph({gen_n, ParseProbability(gen_prob), global.seed});
      Emit(gen_out, WriteGraph(g, ParseGraphFormat(global.format)));
      return 0;
    }
    if (*enc_sat) {
      const Graph g = ReadGraphFile(enc_graph);
      KCliqueEncoding enc = EncodeKClique({g, enc_k});
      const std::string note[] = {"k-clique encoding: n=" + std::to_string(g.n()) +
                                  " k=" + std::to_string(enc_k)};
      Emit(enc_out, WriteDimacs(enc.formula, note));
      return 0;
    }
    if (*enc_ilp) {
      Emit(ilp_out, WriteLp(EncodeMaxClique(ReadGraphFile(ilp_graph))));
      return 0;
    }
    if (*solve) return RunSolve(global, sf);
    if (*decide) {
      const bool found = BruteForceDecide({ReadGraphFile(or_graph), or_k});
      std::cout << "decision: " << (found ? "found" : "not-found") << '\n';
      return found ? kExitFound : kExitNotFound;
    }
    if (*expected) {
      PrintLogNumber("binomial", Binomial(or_n, or_k));
      PrintLogNumber("expected", ExpectedCliqueCount(or_n, or_k, ParseProbability(or_prob)));
      return 0;
    }
    if (*naive) {
      PrintLogNumber("subsets", Binomial(or_n, or_k));
      const auto cost = NaiveCostEstimate(or_n, or_k, or_sps);
      PrintLogNumber("seconds", LogNumber::FromValue(cost.count()));
      PrintLogNumber("years", LogNumber::FromValue(ToYears(cost)));
      return 0;
    }
    if (*bench) {
      return RunBench(bench_config, bench_csv, bench_md, bench_workers, global,
                      timeout_opt->count() > 0);
    }
    if (*sat_solve) return RunSatSolve(sat_cnf, global);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RefusalError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AdapterError& e) {
    std::cerr << "error: external solver: " << e.what() << "\n--- raw output ---\n"
              << e.raw_output() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace kclique

int main(int argc, char** argv) { return kclique::Main(argc, argv); }
