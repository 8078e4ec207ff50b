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

#include "kclique/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <map>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "kclique/backtrack.h"
#include "kclique/deadline.h"
#include "kclique/errors.h"
#include "kclique/external.h"
#include "kclique/file_util.h"
#include "kclique/ilp.h"
#include "kclique/sat_encoding.h"
#include "kclique/sat_engine.h"

namespace kclique {

std::string_view BackendName(Backend b) {
  switch (b) {
    case Backend::kBacktrack:
      return "backtrack";
    case Backend::kSat:
      return "sat";
    case Backend::kIlp:
      return "ilp";
  }
  return "?";
}

std::string_view BackendPrefix(Backend b) {
  return b == Backend::kBacktrack ? "back" : BackendName(b);
}

Backend ParseBackend(std::string_view name) {
  if (name == "backtrack" || name == "back") return Backend::kBacktrack;
  if (name == "sat") return Backend::kSat;
  if (name == "ilp") return Backend::kIlp;
  throw InputError("unknown backend '" + std::string(name) +
                   "' (expected backtrack|sat|ilp)");
}

std::string BenchRecord::Label() const {
  std::string label = std::string(BackendPrefix(backend)) + "(" + std::to_string(n) + ",";
  if (backend != Backend::kIlp) label += std::to_string(k) + ",";
  return label + prob.ToString() + ")";
}

std::string BenchRecord::ResultText() const {
  if (timeout) return "timeout";
  if (error) return "error";
  if (optimum) return std::to_string(*optimum);
  if (decision) return *decision ? "SAT" : "UNSAT";
  return "";
}

void SuiteConfig::Validate() const {
  if (graphs.empty()) throw InputError("suite config lists no graphs");
  if (!(timeout_s > 0)) throw InputError("timeout must be positive");
  if (backends.empty()) throw InputError("suite config lists no backends");
  for (const auto& g : graphs) {
    g.gen.Validate();
    for (int k : g.ks) {
      if (k < 1 || k > g.gen.n) {
        throw InputError("k = " + std::to_string(k) + " outside 1.." +
                         std::to_string(g.gen.n));
      }
    }
  }
}

SuiteConfig ParseSuiteConfig(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("suite config is not valid JSON: ") + e.what());
  }
  SuiteConfig cfg;
  try {
    for (const auto& g : doc.at("graphs")) {
      GraphSpecConfig spec;
      spec.gen.n = g.at("n").get<int>();
      spec.gen.prob = ParseProbability(g.at("prob").get<std::string>());
      spec.gen.seed = g.value("seed", std::uint64_t{0});
      spec.ks = g.value("k", std::vector<int>{});
      cfg.graphs.push_back(std::move(spec));
    }
    if (doc.contains("backends")) {
      cfg.backends.clear();
      for (const auto& b : doc["backends"]) cfg.backends.push_back(ParseBackend(b.get<std::string>()));
    }
    cfg.timeout_s = doc.value("timeout_s", cfg.timeout_s);
    cfg.workers = doc.value("workers", cfg.workers);
    cfg.prune = doc.value("prune", cfg.prune);
    if (doc.contains("external_sat") && !doc["external_sat"].is_null())
      cfg.external_sat = doc["external_sat"].get<std::string>();
    if (doc.contains("external_ilp") && !doc["external_ilp"].is_null())
      cfg.external_ilp = doc["external_ilp"].get<std::string>();
    if (doc.contains("output")) {
      const auto& out = doc["output"];
      cfg.csv_path = out.value("csv", cfg.csv_path);
      cfg.markdown_path = out.value("markdown", cfg.markdown_path);
      cfg.diagnostics_dir = out.value("diagnostics", cfg.diagnostics_dir);
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("suite config: ") + e.what());
  }
  cfg.Validate();
  return cfg;
}

namespace {

struct Cell {
  std::size_t graph_index;
  Backend backend;
  int k;
};

std::int64_t Micros(std::chrono::steady_clock::duration d) {
  return std::chrono::duration_cast<std::chrono::microseconds>(d).count();
}

std::string ScratchPath(const SuiteConfig& cfg, const BenchRecord& r, std::string_view ext) {
  std::filesystem::create_directories(cfg.diagnostics_dir);
  std::string name = std::string(BackendPrefix(r.backend)) + "-n" + std::to_string(r.n) +
                     "-k" + std::to_string(r.k) + "-s" + std::to_string(r.seed) + "-" +
                     std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) +
                     std::string(ext);
  return (std::filesystem::path(cfg.diagnostics_dir) / "scratch" / name).string();
}

void RunCell(const SuiteConfig& cfg, const Graph& g, BenchRecord& rec) {
  const Deadline deadline = Deadline::After(std::chrono::duration<double>(cfg.timeout_s));
  const auto start = Deadline::Clock::now();
  switch (rec.backend) {
    case Backend::kBacktrack: {
      BacktrackOptions opts;
      opts.prune = cfg.prune;
      opts.deadline = deadline;
      SolveOutcome out = BacktrackDecide({g, rec.k}, opts);
      rec.search_nodes = out.stats.nodes_visited;
      if (out.decision == Decision::kTimeout) {
        rec.timeout = true;
      } else {
        if (out.witness && (out.witness->size() != rec.k || !IsClique(g, *out.witness)))
          throw InternalError("backtrack witness failed validation");
        rec.decision = out.decision == Decision::kFound;
      }
      break;
    }
    case Backend::kSat: {
      KCliqueEncoding enc = EncodeKClique({g, rec.k});
      rec.num_vars = enc.formula.num_vars();
      rec.num_clauses = static_cast<std::int64_t>(enc.formula.num_clauses());
      SatResult res;
      if (cfg.external_sat.empty()) {
        SatOptions opts;
        opts.deadline = deadline;
        res = SolveSat(enc.formula, opts);
      } else {
        const std::string path = ScratchPath(cfg, rec, ".cnf");
        std::filesystem::create_directories(std::filesystem::path(path).parent_path());
        WriteTextFile(path, WriteDimacs(enc.formula));
        res = RunExternalSat(path, cfg.external_sat, deadline);
        std::filesystem::remove(path);
      }
      rec.search_nodes = res.stats.conflicts;
      if (res.status == SatStatus::kUnknown) {
        rec.timeout = true;
      } else {
        if (res.model) DecodeModel(*res.model, enc.layout, g);
        rec.decision = res.status == SatStatus::kSatisfiable;
      }
      break;
    }
    case Backend::kIlp: {
      IlpModel model = EncodeMaxClique(g);
      IlpResult res;
      if (cfg.external_ilp.empty()) {
        IlpOptions opts;
        opts.deadline = deadline;
        res = SolveIlp(model, opts);
      } else {
        const std::string path = ScratchPath(cfg, rec, ".lp");
        std::filesystem::create_directories(std::filesystem::path(path).parent_path());
        WriteTextFile(path, WriteLp(model));
        res = RunExternalIlp(path, cfg.external_ilp, model.num_vars, deadline);
        std::filesystem::remove(path);
      }
      rec.search_nodes = res.stats.branch_nodes;
      if (res.status == IlpStatus::kTimeout) {
        rec.timeout = true;
      } else if (res.status == IlpStatus::kInfeasible) {
        throw InternalError("clique ILP reported infeasible");
      } else {
        DecodeIlp(res, g);
        rec.optimum = res.optimum;
      }
      break;
    }
  }
  rec.elapsed_us = Micros(Deadline::Clock::now() - start);
}

void DumpDiagnostics(const SuiteConfig& cfg, const Graph& g, const GenSpec& spec, int k) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::path(cfg.diagnostics_dir) /
                       ("n" + std::to_string(spec.n) + "-s" + std::to_string(spec.seed) +
                        "-k" + std::to_string(k));
  fs::create_directories(dir);
  WriteGraphFile(g, GraphFormat::kDimacsEdge, (dir / "graph.edge").string());
  WriteTextFile((dir / "kclique.cnf").string(), WriteDimacs(EncodeKClique({g, k}).formula));
  WriteTextFile((dir / "maxclique.lp").string(), WriteLp(EncodeMaxClique(g)));
}

}  // namespace

std::vector<BenchRecord> RunSuite(const SuiteConfig& cfg) {
  cfg.Validate();
  std::vector<Graph> graphs;
  graphs.reserve(cfg.graphs.size());
  for (const auto& spec : cfg.graphs) graphs.push_back(GenerateRandomGraph(spec.gen));

  std::vector<Backend> backends = cfg.backends;
  std::sort(backends.begin(), backends.end());
  backends.erase(std::unique(backends.begin(), backends.end()), backends.end());

  std::vector<Cell> cells;
  for (std::size_t gi = 0; gi < cfg.graphs.size(); ++gi) {
    for (Backend b : backends) {
      if (b == Backend::kIlp) {
        cells.push_back({gi, b, 0});
        continue;
      }
      std::vector<int> ks = cfg.graphs[gi].ks;
      std::sort(ks.begin(), ks.end());
      ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
      for (int k : ks) cells.push_back({gi, b, k});
    }
  }

  std::vector<BenchRecord> records(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const Cell& cell = cells[i];
      const GenSpec& spec = cfg.graphs[cell.graph_index].gen;
      BenchRecord& rec = records[i];
      rec.backend = cell.backend;
      rec.n = spec.n;
      rec.k = cell.k;
      rec.prob = spec.prob;
      rec.seed = spec.seed;
      const auto start = Deadline::Clock::now();
      try {
        RunCell(cfg, graphs[cell.graph_index], rec);
      } catch (const std::exception& e) {
        rec.decision.reset();
        rec.optimum.reset();
        rec.error = true;
        rec.note = e.what();
        rec.elapsed_us = Micros(Deadline::Clock::now() - start);
      }
    }
  };
  int workers = cfg.workers > 0 ? cfg.workers
                                : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  workers = std::min<int>(workers, static_cast<int>(std::max<std::size_t>(cells.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }

  // Cross-check every completed (graph, k).
  for (std::size_t gi = 0; gi < cfg.graphs.size(); ++gi) {
    std::optional<std::int64_t> optimum;
    std::map<int, std::vector<std::pair<Backend, bool>>> by_k;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].graph_index != gi) continue;
      const auto& r = records[i];
      if (r.optimum) optimum = r.optimum;
      if (r.decision) by_k[r.k].push_back({r.backend, *r.decision});
    }
    for (int k : cfg.graphs[gi].ks) {
      auto& votes = by_k[k];
      if (optimum) votes.push_back({Backend::kIlp, *optimum >= k});
      if (votes.empty()) continue;
      const bool first = votes.front().second;
      for (const auto& [backend, found] : votes) {
        if (found == first) continue;
        std::ostringstream msg;
        msg << "backends disagree on G(" << cfg.graphs[gi].gen.n << ", "
            << cfg.graphs[gi].gen.prob.ToString() << "), seed " << cfg.graphs[gi].gen.seed
            << ", k = " << k << ":";
        for (const auto& [b, f] : votes) msg << ' ' << BackendName(b) << '=' << (f ? "found" : "not-found");
        DumpDiagnostics(cfg, graphs[gi], cfg.graphs[gi].gen, k);
        msg << "; inputs dumped under " << cfg.diagnostics_dir;
        throw SuiteDisagreement(msg.str());
      }
    }
  }
  return records;
}

namespace {

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> SplitCsvLine(std::string_view line, int line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) throw ParseError(line_no, "unterminated quoted field");
  fields.push_back(std::move(field));
  return fields;
}

std::string FormatMillis(std::int64_t micros) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%03lld", static_cast<long long>(micros / 1000),
                static_cast<long long>(micros % 1000));
  return buf;
}

std::string FormatSeconds(std::int64_t micros) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", static_cast<double>(micros) / 1e6);
  return buf;
}

constexpr std::string_view kCsvHeader =
    "instance,backend,n,k,prob,seed,result,num_vars,num_clauses,time_ms,timeout";

}  // namespace

std::string ToCsv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  auto opt = [](const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const auto& r : records) {
    out << CsvField(r.Label()) << ',' << BackendName(r.backend) << ',' << r.n << ','
        << (r.backend == Backend::kIlp ? std::string() : std::to_string(r.k)) << ','
        << r.prob.ToString() << ',' << r.seed << ',' << CsvField(r.ResultText()) << ','
        << opt(r.num_vars) << ',' << opt(r.num_clauses) << ',' << FormatMillis(r.elapsed_us)
        << ',' << (r.timeout ? 1 : 0) << '\n';
  }
  return out.str();
}

std::vector<BenchRecord> ParseCsv(std::string_view csv) {
  auto lines = SplitLines(csv);
  std::vector<BenchRecord> records;
  if (lines.empty() || lines[0] != kCsvHeader) throw ParseError(1, "missing CSV header");
  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const int line_no = static_cast<int>(idx) + 1;
    if (lines[idx].empty()) continue;
    auto f = SplitCsvLine(lines[idx], line_no);
    if (f.size() != 11) throw ParseError(line_no, "expected 11 fields");
    BenchRecord r;
    try {
      r.backend = ParseBackend(f[1]);
      r.prob = ParseProbability(f[4]);
    } catch (const InputError& e) {
      throw ParseError(line_no, e.what());
    }
    auto num = [&](const std::string& s, const char* what) -> std::int64_t {
      auto v = ParseInteger<std::int64_t>(s);
      if (!v) throw ParseError(line_no, std::string("invalid ") + what + " '" + s + "'");
      return *v;
    };
    auto opt_num = [&](const std::string& s, const char* what) -> std::optional<std::int64_t> {
      if (s.empty()) return std::nullopt;
      return num(s, what);
    };
    r.n = static_cast<int>(num(f[2], "n"));
    r.k = f[3].empty() ? 0 : static_cast<int>(num(f[3], "k"));
    auto seed = ParseInteger<std::uint64_t>(f[5]);
    if (!seed) throw ParseError(line_no, "invalid seed");
    r.seed = *seed;
    const std::string& result = f[6];
    if (result == "timeout") {
      r.timeout = true;
    } else if (result == "error") {
      r.error = true;
    } else if (result == "SAT" || result == "UNSAT") {
      r.decision = result == "SAT";
    } else if (!result.empty()) {
      r.optimum = num(result, "result");
    }
    r.num_vars = opt_num(f[7], "num_vars");
    r.num_clauses = opt_num(f[8], "num_clauses");
    const auto dot = f[9].find('.');
    if (dot == std::string::npos || f[9].size() - dot != 4)
      throw ParseError(line_no, "time_ms must have three decimals");
    r.elapsed_us = num(f[9].substr(0, dot), "time_ms") * 1000 + num(f[9].substr(dot + 1), "time_ms");
    r.timeout = r.timeout || f[10] == "1";
    if (r.Label() != f[0]) throw ParseError(line_no, "instance label does not match fields");
    records.push_back(std::move(r));
  }
  return records;
}

std::string ToMarkdown(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < records.size()) {
    const auto& head = records[i];
    if (!first) out << '\n';
    first = false;
    out << "### G(" << head.n << ", " << head.prob.ToString() << "), seed " << head.seed << "\n\n";
    out << "| instance | # variables | # clauses | time | result |\n";
    out << "|---|---|---|---|---|\n";
    for (; i < records.size() && records[i].n == head.n && records[i].prob == head.prob &&
           records[i].seed == head.seed;
         ++i) {
      const auto& r = records[i];
      std::string result = r.ResultText();
      if (r.optimum) result = "result is " + result;
      out << "| " << r.Label() << " | " << (r.num_vars ? std::to_string(*r.num_vars) : "")
          << " | " << (r.num_clauses ? std::to_string(*r.num_clauses) : "") << " | "
          << FormatSeconds(r.elapsed_us) << " | " << result << " |\n";
    }
  }
  return out.str();
}

}  // namespace kclique
