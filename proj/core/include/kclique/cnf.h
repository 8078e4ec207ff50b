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

#ifndef KCLIQUE_CNF_H_
#define KCLIQUE_CNF_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kclique {

// DIMACS-style literal: +v is variable v true, -v is v false, never 0.
using Literal = int;
using Clause = std::vector<Literal>;

class CnfFormula {
 public:
  CnfFormula() = default;
  explicit CnfFormula(int num_vars);

  int num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  const std::vector<Clause>& clauses() const { return clauses_; }

  // Grows the variable range; never shrinks it.
  void EnsureVars(int num_vars);

  // Appends a clause verbatim (no sorting or dedup). Throws InputError for
  // literal 0 or |literal| > num_vars(). An empty clause is accepted only
  // through ReadDimacs; it makes the formula trivially unsatisfiable.
  void AddClause(std::span<const Literal> clause);
  void AddClause(std::initializer_list<Literal> clause) {
    AddClause(std::span<const Literal>(clause.begin(), clause.size()));
  }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  friend CnfFormula ReadDimacs(std::string_view text);

  int num_vars_ = 0;
  std::vector<Clause> clauses_;
};

// Total assignment over variables 1..num_vars (index 0 unused).
class Model {
 public:
  Model() = default;
  explicit Model(int num_vars) : values_(static_cast<std::size_t>(num_vars) + 1, 0) {}

  int num_vars() const { return static_cast<int>(values_.size()) - 1; }
  bool Value(int var) const { return values_.at(static_cast<std::size_t>(var)) != 0; }
  void Set(int var, bool value) { values_.at(static_cast<std::size_t>(var)) = value; }
  bool Satisfies(Literal lit) const { return lit > 0 ? Value(lit) : !Value(-lit); }

  friend bool operator==(const Model&, const Model&) = default;

 private:
  std::vector<std::uint8_t> values_;
};

// True iff every clause has a literal made true by `model`.
bool SatisfiesAll(const CnfFormula& formula, const Model& model);

// "p cnf <vars> <clauses>" then one 0-terminated clause per line. Optional
// leading comment lines are written from `comments`, each prefixed "c ".
std::string WriteDimacs(const CnfFormula& formula,
                        std::span<const std::string> comments = {});

// Accepts comment lines anywhere, clauses spanning lines, and several
// clauses per line. Throws ParseError for a missing or malformed header, a
// literal outside the declared range, an unterminated final clause, or a
// clause count that disagrees with the header.
CnfFormula ReadDimacs(std::string_view text);

}  // namespace kclique

#endif  // KCLIQUE_CNF_H_
