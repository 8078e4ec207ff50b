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

#include "kclique/external.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "kclique/cnf.h"
#include "kclique/file_util.h"

namespace kclique {

namespace {

std::string ShellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

std::string TempPath(std::string_view suffix) {
  static std::atomic<unsigned> counter{0};
  auto dir = std::filesystem::temp_directory_path();
  return (dir / ("kclique-" + std::to_string(::getpid()) + "-" +
                 std::to_string(counter++) + std::string(suffix)))
      .string();
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::string Trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

ProcessResult RunCommand(const std::string& command, const Deadline& deadline) {
  int out_pipe[2], err_pipe[2];
  if (::pipe(out_pipe) != 0 || ::pipe(err_pipe) != 0)
    throw std::runtime_error("pipe() failed");
  const pid_t pid = ::fork();
  if (pid < 0) throw std::runtime_error("fork() failed");
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::dup2(err_pipe[1], STDERR_FILENO);
    ::close(out_pipe[0]);
    ::close(out_pipe[1]);
    ::close(err_pipe[0]);
    ::close(err_pipe[1]);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  ::close(out_pipe[1]);
  ::close(err_pipe[1]);

  ProcessResult result;
  pollfd fds[2] = {{out_pipe[0], POLLIN, 0}, {err_pipe[0], POLLIN, 0}};
  std::string* sinks[2] = {&result.out, &result.err};
  int open_fds = 2;
  char buf[4096];
  while (open_fds > 0) {
    int wait_ms = -1;
    if (auto left = deadline.Remaining()) {
      wait_ms = static_cast<int>(
          std::chrono::duration_cast<std::chrono::milliseconds>(*left).count()) + 1;
      if (left->count() == 0) {
        result.timed_out = true;
        break;
      }
    }
    const int ready = ::poll(fds, 2, wait_ms);
    if (ready < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (ready == 0) continue;  // re-check the deadline
    for (int i = 0; i < 2; ++i) {
      if (fds[i].fd < 0 || !(fds[i].revents & (POLLIN | POLLHUP | POLLERR))) continue;
      const ssize_t got = ::read(fds[i].fd, buf, sizeof buf);
      if (got > 0) {
        sinks[i]->append(buf, static_cast<std::size_t>(got));
      } else {
        ::close(fds[i].fd);
        fds[i].fd = -1;
        --open_fds;
      }
    }
  }
  if (result.timed_out) ::kill(-pid, SIGKILL);
  for (auto& fd : fds)
    if (fd.fd >= 0) ::close(fd.fd);

  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (!result.timed_out && WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string ExpandCommand(std::string_view tmpl, const std::string& input_path,
                          const std::string& output_path) {
  std::string cmd(tmpl);
  bool has_file = false;
  auto replace_all = [&cmd](std::string_view key, const std::string& value) {
    bool found = false;
    for (auto pos = cmd.find(key); pos != std::string::npos;
         pos = cmd.find(key, pos + value.size())) {
      cmd.replace(pos, key.size(), value);
      found = true;
    }
    return found;
  };
  has_file = replace_all("{file}", ShellQuote(input_path));
  replace_all("{out}", ShellQuote(output_path));
  if (!has_file) cmd += " " + ShellQuote(input_path);
  return cmd;
}

SatResult ParseSatSolverOutput(std::string_view output, int exit_code, int num_vars) {
  const std::string raw(output);
  SatResult result;
  enum class Seen { kNone, kSat, kUnsat, kUnknown } seen = Seen::kNone;
  bool minisat_file = false;
  std::vector<Literal> values;
  bool terminated = false;

  auto take_values = [&](const std::vector<std::string_view>& words, std::size_t from) {
    for (std::size_t i = from; i < words.size(); ++i) {
      auto lit = ParseInteger<int>(words[i]);
      if (!lit) throw AdapterError("bad value literal '" + std::string(words[i]) + "'", raw);
      if (*lit == 0) {
        terminated = true;
        continue;
      }
      if (std::abs(*lit) > num_vars)
        throw AdapterError("value literal " + std::to_string(*lit) + " out of range", raw);
      values.push_back(*lit);
    }
  };

  auto lines = SplitLines(output);
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    auto words = SplitWords(lines[idx]);
    if (words.empty()) continue;
    if (words[0] == "s" && words.size() >= 2) {
      if (words[1] == "SATISFIABLE") seen = Seen::kSat;
      else if (words[1] == "UNSATISFIABLE") seen = Seen::kUnsat;
      else seen = Seen::kUnknown;
    } else if (words[0] == "v") {
      take_values(words, 1);
    } else if (seen == Seen::kNone && (words[0] == "SAT" || words[0] == "UNSAT" ||
                                       words[0] == "INDET")) {
      minisat_file = true;
      seen = words[0] == "SAT" ? Seen::kSat : words[0] == "UNSAT" ? Seen::kUnsat : Seen::kUnknown;
    } else if (minisat_file && ParseInteger<int>(words[0])) {
      take_values(words, 0);
    }
  }

  if (seen == Seen::kNone) {
    if (exit_code == 10) seen = Seen::kSat;
    else if (exit_code == 20) seen = Seen::kUnsat;
    else throw AdapterError("no status line and exit code " + std::to_string(exit_code), raw);
  }
  if (seen == Seen::kUnknown) throw AdapterError("solver reported an unknown result", raw);
  if (exit_code != 0 && exit_code != 10 && exit_code != 20)
    throw AdapterError("unexpected exit code " + std::to_string(exit_code), raw);
  if ((seen == Seen::kSat && exit_code == 20) || (seen == Seen::kUnsat && exit_code == 10))
    throw AdapterError("status line contradicts exit code", raw);

  if (seen == Seen::kUnsat) {
    result.status = SatStatus::kUnsatisfiable;
    return result;
  }
  if (values.empty() && num_vars > 0) throw AdapterError("satisfiable answer without a model", raw);
  if (!values.empty() && !terminated) throw AdapterError("value lines not terminated by 0", raw);
  Model model(num_vars);
  for (Literal lit : values) model.Set(std::abs(lit), lit > 0);
  result.status = SatStatus::kSatisfiable;
  result.model = std::move(model);
  return result;
}

IlpResult ParseLpSolveOutput(std::string_view output, int num_vars) {
  const std::string raw(output);
  IlpResult result;
  if (output.find("infeasible") != std::string_view::npos) {
    result.status = IlpStatus::kInfeasible;
    return result;
  }
  bool have_objective = false;
  bool in_variables = false;
  std::vector<int> seen(static_cast<std::size_t>(num_vars), 0);
  result.assignment.assign(static_cast<std::size_t>(num_vars), 0);
  for (auto line : SplitLines(output)) {
    const std::string text = Trim(line);
    if (text.empty()) continue;
    if (StartsWith(text, "Value of objective function:")) {
      const std::string num = Trim(text.substr(std::string_view("Value of objective function:").size()));
      char* end = nullptr;
      const double v = std::strtod(num.c_str(), &end);
      if (end == num.c_str()) throw AdapterError("unparseable objective value", raw);
      result.optimum = std::llround(v);
      have_objective = true;
      continue;
    }
    if (StartsWith(text, "Actual values of the variables")) {
      in_variables = true;
      continue;
    }
    if (StartsWith(text, "Actual values of the constraints") || StartsWith(text, "Dual value")) {
      in_variables = false;
      continue;
    }
    if (!in_variables) continue;
    auto words = SplitWords(text);
    if (words.size() != 2 || words[0].size() < 2 || words[0][0] != 'x')
      throw AdapterError("unexpected variable line '" + text + "'", raw);
    auto var = ParseInteger<int>(words[0].substr(1));
    if (!var || *var < 1 || *var > num_vars)
      throw AdapterError("unknown variable '" + std::string(words[0]) + "'", raw);
    const std::string value_text(words[1]);
    char* end = nullptr;
    const double value = std::strtod(value_text.c_str(), &end);
    if (end == value_text.c_str() ||
        (std::fabs(value) > 1e-6 && std::fabs(value - 1) > 1e-6))
      throw AdapterError("non-binary value for " + std::string(words[0]), raw);
    result.assignment[*var - 1] = std::fabs(value - 1) <= 1e-6;
    seen[*var - 1] = 1;
  }
  if (!have_objective) throw AdapterError("no objective value in solver output", raw);
  for (int v = 0; v < num_vars; ++v)
    if (!seen[v]) throw AdapterError("no value for x" + std::to_string(v + 1), raw);
  std::int64_t total = 0;
  for (auto a : result.assignment) total += a;
  if (total != result.optimum)
    throw AdapterError("objective value disagrees with the variable values", raw);
  result.status = IlpStatus::kOptimal;
  return result;
}

std::string FormatSatCompetitionOutput(const SatResult& result) {
  std::ostringstream out;
  switch (result.status) {
    case SatStatus::kSatisfiable: {
      out << "s SATISFIABLE\n";
      const Model& m = *result.model;
      std::string line = "v";
      for (int v = 1; v <= m.num_vars(); ++v) {
        std::string lit = " " + std::string(m.Value(v) ? "" : "-") + std::to_string(v);
        if (line.size() + lit.size() > 78) {
          out << line << '\n';
          line = "v";
        }
        line += lit;
      }
      out << line << " 0\n";
      break;
    }
    case SatStatus::kUnsatisfiable:
      out << "s UNSATISFIABLE\n";
      break;
    case SatStatus::kUnknown:
      out << "s UNKNOWN\n";
      break;
  }
  return out.str();
}

std::string FormatLpSolveOutput(const IlpResult& result) {
  std::ostringstream out;
  if (result.status == IlpStatus::kInfeasible) {
    out << "\nThis problem is infeasible\n";
    return out.str();
  }
  out << "\nValue of objective function: " << result.optimum << "\n\n";
  out << "Actual values of the variables:\n";
  for (std::size_t v = 0; v < result.assignment.size(); ++v) {
    std::string name = "x" + std::to_string(v + 1);
    name.resize(std::max<std::size_t>(name.size(), 32), ' ');
    out << name << static_cast<int>(result.assignment[v]) << '\n';
  }
  return out.str();
}

SatResult RunExternalSat(const std::string& cnf_path, const std::string& command,
                         const Deadline& deadline) {
  const CnfFormula formula = ReadDimacs(ReadTextFile(cnf_path));
  const std::string result_path = TempPath(".out");
  ProcessResult proc = RunCommand(ExpandCommand(command, cnf_path, result_path), deadline);
  std::string output = proc.out;
  std::error_code ec;
  if (std::filesystem::exists(result_path, ec)) {
    output += "\n" + ReadTextFile(result_path);
    std::filesystem::remove(result_path, ec);
  }
  if (proc.timed_out) return SatResult{SatStatus::kUnknown, std::nullopt, {}};
  SatResult result = ParseSatSolverOutput(output, proc.exit_code, formula.num_vars());
  if (result.model && !SatisfiesAll(formula, *result.model))
    throw AdapterError("external model violates the formula", output + proc.err);
  return result;
}

IlpResult RunExternalIlp(const std::string& lp_path, const std::string& command,
                         int num_vars, const Deadline& deadline) {
  ProcessResult proc = RunCommand(ExpandCommand(command, lp_path, TempPath(".out")), deadline);
  if (proc.timed_out) {
    IlpResult r;
    r.status = IlpStatus::kTimeout;
    return r;
  }
  if (proc.exit_code != 0 && proc.exit_code != 2)  // lp_solve: 2 = infeasible
    throw AdapterError("unexpected exit code " + std::to_string(proc.exit_code),
                       proc.out + proc.err);
  return ParseLpSolveOutput(proc.out, num_vars);
}

}  // namespace kclique
