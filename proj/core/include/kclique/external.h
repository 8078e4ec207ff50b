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

#ifndef KCLIQUE_EXTERNAL_H_
#define KCLIQUE_EXTERNAL_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "kclique/deadline.h"
#include "kclique/ilp.h"
#include "kclique/sat_engine.h"

namespace kclique {

// External solver misbehaved: unparseable output, unexpected exit status, or
// an answer that fails validation. Carries the raw output for debugging.
class AdapterError : public std::runtime_error {
 public:
  AdapterError(const std::string& what, std::string raw_output)
      : std::runtime_error(what), raw_output_(std::move(raw_output)) {}
  const std::string& raw_output() const { return raw_output_; }

 private:
  std::string raw_output_;
};

struct ProcessResult {
  int exit_code = -1;  // -1 when killed or terminated by a signal
  bool timed_out = false;
  std::string out;
  std::string err;
};

// Runs `command` through /bin/sh in its own process group; the whole group
// is killed once `deadline` expires.
ProcessResult RunCommand(const std::string& command, const Deadline& deadline);

// Expands a solver command template. "{file}" becomes the quoted input path
// and "{out}" the quoted result-file path; without "{file}" the input path
// is appended.
std::string ExpandCommand(std::string_view tmpl, const std::string& input_path,
                          const std::string& output_path);

// Parses SAT-solver output. Recognized, in priority order:
//   competition style  "s SATISFIABLE" / "s UNSATISFIABLE" + "v ... 0" lines
//   MiniSat result file "SAT" / "UNSAT" on the first line, literals after
//   exit status only   10 = SAT, 20 = UNSAT (a SAT answer still needs a model)
// Variables missing from the value lines default to false.
SatResult ParseSatSolverOutput(std::string_view output, int exit_code, int num_vars);

// Parses lp_solve's report ("Value of objective function:", then one
// "name value" line per variable under "Actual values of the variables:").
IlpResult ParseLpSolveOutput(std::string_view output, int num_vars);

// Inverse renderings of the two parsers, used by the CLI's standalone modes.
std::string FormatSatCompetitionOutput(const SatResult& result);
std::string FormatLpSolveOutput(const IlpResult& result);

// Runs an external SAT solver on a DIMACS file and checks any model against
// every clause of that file. On timeout the status is kUnknown.
SatResult RunExternalSat(const std::string& cnf_path, const std::string& command,
                         const Deadline& deadline);

// Runs an external LP solver on an LP file for a model with `num_vars`
// binaries. On timeout the status is kTimeout.
IlpResult RunExternalIlp(const std::string& lp_path, const std::string& command,
                         int num_vars, const Deadline& deadline);

}  // namespace kclique

#endif  // KCLIQUE_EXTERNAL_H_
