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

#include "kclique/ilp.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kclique/errors.h"

namespace kclique {

std::string_view IlpStatusName(IlpStatus s) {
  switch (s) {
    case IlpStatus::kOptimal:
      return "optimal";
    case IlpStatus::kInfeasible:
      return "infeasible";
    case IlpStatus::kTimeout:
      return "timeout";
  }
  return "?";
}

void IlpModel::Validate() const {
  if (num_vars < 0) throw InputError("negative variable count");
  if (static_cast<int>(objective.size()) != num_vars)
    throw InputError("objective must have one coefficient per variable");
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    const auto& con = constraints[c];
    if (con.terms.empty())
      throw InputError("constraint c" + std::to_string(c + 1) + " is empty");
    for (const Term& t : con.terms) {
      if (t.var < 1 || t.var > num_vars)
        throw InputError("constraint c" + std::to_string(c + 1) +
                         " references x" + std::to_string(t.var));
      if (t.coeff < 0)
        throw InputError("constraint c" + std::to_string(c + 1) +
                         " has a negative coefficient");
    }
  }
}

IlpModel EncodeMaxClique(const Graph& g) {
  IlpModel m;
  m.num_vars = g.n();
  m.objective.assign(static_cast<std::size_t>(g.n()), 1);
  for (auto [i, j] : NonEdgePairs(g))
    m.constraints.push_back({{{i, 1}, {j, 1}}, 1});
  return m;
}

namespace {

constexpr std::int8_t kFree = -1;

class BranchAndBound {
 public:
  BranchAndBound(const IlpModel& m, const IlpOptions& opts) : m_(m), opts_(opts) {
    const auto n = static_cast<std::size_t>(m.num_vars);
    value_.assign(n, kFree);
    occurs_.resize(n);
    for (std::size_t c = 0; c < m.constraints.size(); ++c) {
      for (const Term& t : m.constraints[c].terms) {
        occurs_[t.var - 1].push_back({static_cast<int>(c), t.coeff});
      }
    }
    activity_.assign(m.constraints.size(), 0);
    free_count_.assign(m.constraints.size(), 0);
    free_sum_.assign(m.constraints.size(), 0);
    for (std::size_t c = 0; c < m.constraints.size(); ++c) {
      for (const Term& t : m.constraints[c].terms) {
        ++free_count_[c];
        free_sum_[c] += t.coeff;
      }
    }
    for (std::size_t v = 0; v < n; ++v) free_positive_ += std::max<std::int64_t>(m.objective[v], 0);
  }

  IlpResult Run() {
    IlpResult res;
    for (const auto& con : m_.constraints) {
      if (con.rhs < 0) {
        res.status = IlpStatus::kInfeasible;
        return res;
      }
    }
    for (const auto& con : m_.constraints)
      for (const Term& t : con.terms)
        if (t.coeff > con.rhs && value_[t.var - 1] == kFree) Assign(t.var - 1, 0);
    Greedy();
    res.stats.greedy_value = incumbent_value_;
    Branch();
    res.status = timed_out_ ? IlpStatus::kTimeout : IlpStatus::kOptimal;
    res.optimum = incumbent_value_;
    res.assignment = incumbent_;
    res.stats.branch_nodes = nodes_;
    return res;
  }

 private:
  struct Occurrence {
    int constraint;
    std::int64_t coeff;
  };

  std::int64_t Bound() const { return ones_value_ + free_positive_; }

  void Assign(int v, std::int8_t val) {
    value_[v] = val;
    trail_.push_back(v);
    free_positive_ -= std::max<std::int64_t>(m_.objective[v], 0);
    if (val == 1) ones_value_ += m_.objective[v];
    for (const Occurrence& o : occurs_[v]) {
      --free_count_[o.constraint];
      free_sum_[o.constraint] -= o.coeff;
      if (val == 1) activity_[o.constraint] += o.coeff;
    }
  }

  void UndoTo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int v = trail_.back();
      trail_.pop_back();
      const std::int8_t val = value_[v];
      value_[v] = kFree;
      free_positive_ += std::max<std::int64_t>(m_.objective[v], 0);
      if (val == 1) ones_value_ -= m_.objective[v];
      for (const Occurrence& o : occurs_[v]) {
        ++free_count_[o.constraint];
        free_sum_[o.constraint] += o.coeff;
        if (val == 1) activity_[o.constraint] -= o.coeff;
      }
    }
  }

  // Sets v = 1 and excludes every free variable that no longer fits in a
  // shared constraint. Returns false if a constraint is violated.
  bool FixOne(int v) {
    Assign(v, 1);
    for (const Occurrence& o : occurs_[v]) {
      const auto& con = m_.constraints[o.constraint];
      const std::int64_t slack = con.rhs - activity_[o.constraint];
      if (slack < 0) return false;
      if (free_sum_[o.constraint] <= slack) continue;
      for (const Term& t : con.terms) {
        if (value_[t.var - 1] == kFree && t.coeff > slack) Assign(t.var - 1, 0);
      }
    }
    return true;
  }

  bool Active(int c) const {
    return free_count_[c] >= 2 &&
           free_sum_[c] > m_.constraints[c].rhs - activity_[c];
  }

  // Free variable with the most active constraints, lowest index on ties;
  // -1 if no variable is free.
  int ChooseBranchVar(int* active_out) const {
    int best = -1, best_active = -1;
    for (int v = 0; v < m_.num_vars; ++v) {
      if (value_[v] != kFree) continue;
      int active = 0;
      for (const Occurrence& o : occurs_[v]) active += Active(o.constraint);
      if (active > best_active) {
        best = v;
        best_active = active;
      }
    }
    *active_out = best_active;
    return best;
  }

  void RecordCompletion() {
    // All remaining free variables are unconstrained: take the profitable
    // ones.
    const std::int64_t value = Bound();
    if (has_incumbent_ && value <= incumbent_value_) return;
    incumbent_.assign(static_cast<std::size_t>(m_.num_vars), 0);
    for (int v = 0; v < m_.num_vars; ++v) {
      if (value_[v] == 1 || (value_[v] == kFree && m_.objective[v] > 0))
        incumbent_[v] = 1;
    }
    incumbent_value_ = value;
    has_incumbent_ = true;
  }

  void Greedy() {
    std::vector<int> order(static_cast<std::size_t>(m_.num_vars));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [this](int a, int b) {
      return occurs_[a].size() < occurs_[b].size();
    });
    const std::size_t mark = trail_.size();
    for (int v : order) {
      if (value_[v] != kFree || m_.objective[v] <= 0) continue;
      const std::size_t before = trail_.size();
      if (!FixOne(v)) UndoTo(before);
    }
    for (int v = 0; v < m_.num_vars; ++v)
      if (value_[v] == kFree) Assign(v, 0);
    RecordCompletion();
    UndoTo(mark);
  }

  void Branch() {
    if (timed_out_) return;
    ++nodes_;
    if ((nodes_ & 1023) == 0 && opts_.deadline.Expired()) {
      timed_out_ = true;
      return;
    }
    if (has_incumbent_ && Bound() <= incumbent_value_) return;
    int active = 0;
    const int v = ChooseBranchVar(&active);
    if (v < 0 || active == 0) {
      RecordCompletion();
      return;
    }
    const std::size_t mark = trail_.size();
    if (FixOne(v)) Branch();
    UndoTo(mark);
    if (timed_out_) return;
    Assign(v, 0);
    Branch();
    UndoTo(mark);
  }

  const IlpModel& m_;
  const IlpOptions& opts_;
  std::vector<std::int8_t> value_;
  std::vector<std::vector<Occurrence>> occurs_;
  std::vector<std::int64_t> activity_;
  std::vector<int> free_count_;
  std::vector<std::int64_t> free_sum_;
  std::vector<int> trail_;
  std::int64_t ones_value_ = 0;
  std::int64_t free_positive_ = 0;
  std::vector<std::uint8_t> incumbent_;
  std::int64_t incumbent_value_ = 0;
  bool has_incumbent_ = false;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

IlpResult SolveIlp(const IlpModel& model, const IlpOptions& options) {
  model.Validate();
  return BranchAndBound(model, options).Run();
}

std::string WriteLp(const IlpModel& model) {
  model.Validate();
  std::ostringstream out;
  auto term = [&](std::int64_t coeff, int var, bool first) {
    if (!first) out << (coeff < 0 ? " - " : " + ");
    else if (coeff < 0) out << "-";
    const std::int64_t mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) out << mag << ' ';
    out << 'x' << var;
  };
  out << "max:";
  bool first = true;
  for (int v = 1; v <= model.num_vars; ++v) {
    const std::int64_t coeff = model.objective[v - 1];
    if (coeff == 0) continue;
    out << (first ? " " : "");
    term(coeff, v, first);
    first = false;
  }
  if (first) out << " 0";
  out << ";\n";
  for (std::size_t c = 0; c < model.constraints.size(); ++c) {
    const auto& con = model.constraints[c];
    out << 'c' << c + 1 << ": ";
    for (std::size_t t = 0; t < con.terms.size(); ++t)
      term(con.terms[t].coeff, con.terms[t].var, t == 0);
    out << " <= " << con.rhs << ";\n";
  }
  if (model.num_vars > 0) {
    out << "bin ";
    for (int v = 1; v <= model.num_vars; ++v) out << (v > 1 ? "," : "") << 'x' << v;
    out << ";\n";
  }
  return out.str();
}

VertexSet DecodeIlp(const IlpResult& res, const Graph& g) {
  if (static_cast<int>(res.assignment.size()) != g.n())
    throw InternalError("ILP assignment does not match the graph size");
  std::vector<int> chosen;
  for (int v = 1; v <= g.n(); ++v)
    if (res.assignment[v - 1]) chosen.push_back(v);
  VertexSet set(std::move(chosen));
  if (set.size() != res.optimum) {
    throw InternalError("ILP assignment selects " + std::to_string(set.size()) +
                        " vertices but reports optimum " + std::to_string(res.optimum));
  }
  if (!IsClique(g, set))
    throw InternalError("ILP assignment " + set.ToString() + " is not a clique");
  return set;
}

}  // namespace kclique
