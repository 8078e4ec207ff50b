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

#include "kclique/cnf.h"

#include <cstdlib>
#include <sstream>

#include "kclique/errors.h"
#include "kclique/file_util.h"

namespace kclique {

CnfFormula::CnfFormula(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw InputError("negative variable count");
}

void CnfFormula::EnsureVars(int num_vars) {
  if (num_vars > num_vars_) num_vars_ = num_vars;
}

void CnfFormula::AddClause(std::span<const Literal> clause) {
  if (clause.empty()) throw InputError("empty clause");
  for (Literal lit : clause) {
    if (lit == 0) throw InputError("literal 0 inside a clause");
    if (std::abs(lit) > num_vars_) {
      throw InputError("literal " + std::to_string(lit) + " exceeds " +
                       std::to_string(num_vars_) + " variables");
    }
  }
  clauses_.emplace_back(clause.begin(), clause.end());
}

bool SatisfiesAll(const CnfFormula& formula, const Model& model) {
  if (model.num_vars() < formula.num_vars()) return false;
  for (const Clause& clause : formula.clauses()) {
    bool sat = false;
    for (Literal lit : clause) {
      if (model.Satisfies(lit)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

std::string WriteDimacs(const CnfFormula& formula,
                        std::span<const std::string> comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p cnf " << formula.num_vars() << ' ' << formula.num_clauses() << '\n';
  for (const Clause& clause : formula.clauses()) {
    for (Literal lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

CnfFormula ReadDimacs(std::string_view text) {
  auto lines = SplitLines(text);
  CnfFormula formula;
  bool have_header = false;
  long long declared_clauses = 0;
  Clause pending;
  int pending_line = 0;
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const int line_no = static_cast<int>(idx) + 1;
    auto words = SplitWords(lines[idx]);
    if (words.empty() || words[0].front() == 'c') continue;
    if (words[0] == "%") break;  // SATLIB end marker
    if (words[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (words.size() != 4 || words[1] != "cnf")
        throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
      auto vars = ParseInteger<int>(words[2]);
      auto clauses = ParseInteger<long long>(words[3]);
      if (!vars || *vars < 0 || !clauses || *clauses < 0)
        throw ParseError(line_no, "invalid header counts");
      formula.num_vars_ = *vars;
      declared_clauses = *clauses;
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause before 'p cnf' header");
    for (auto word : words) {
      auto lit = ParseInteger<int>(word);
      if (!lit) throw ParseError(line_no, "invalid literal '" + std::string(word) + "'");
      if (*lit == 0) {
        formula.clauses_.push_back(std::move(pending));
        pending.clear();
        continue;
      }
      if (std::abs(*lit) > formula.num_vars_) {
        throw ParseError(line_no, "literal " + std::to_string(*lit) +
                                      " outside declared range 1.." +
                                      std::to_string(formula.num_vars_));
      }
      if (pending.empty()) pending_line = line_no;
      pending.push_back(*lit);
    }
  }
  if (!have_header) throw ParseError(0, "missing 'p cnf' header");
  if (!pending.empty()) throw ParseError(pending_line, "clause not terminated by 0");
  if (static_cast<long long>(formula.clauses_.size()) != declared_clauses) {
    throw ParseError(0, "header declares " + std::to_string(declared_clauses) +
                            " clauses, found " +
                            std::to_string(formula.clauses_.size()));
  }
  return formula;
}

}  // namespace kclique
