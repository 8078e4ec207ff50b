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

#include "kclique/sat_engine.h"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "kclique/errors.h"

namespace kclique {

std::string_view SatStatusName(SatStatus s) {
  switch (s) {
    case SatStatus::kSatisfiable:
      return "SAT";
    case SatStatus::kUnsatisfiable:
      return "UNSAT";
    case SatStatus::kUnknown:
      return "UNKNOWN";
  }
  return "?";
}

namespace {

// Internal literal: 2 * var + (negated ? 1 : 0), var 0-based.
using Lit = std::uint32_t;
using Var = std::uint32_t;
using CRef = std::uint32_t;

constexpr CRef kNoReason = ~CRef{0};
constexpr std::int8_t kUndef = -1;

inline Lit MakeLit(Var v, bool negated) { return 2 * v + (negated ? 1 : 0); }
inline Var VarOf(Lit l) { return l >> 1; }
inline bool IsNegated(Lit l) { return l & 1; }
inline Lit Negate(Lit l) { return l ^ 1; }

Lit FromDimacs(Literal lit) {
  return MakeLit(static_cast<Var>(std::abs(lit) - 1), lit < 0);
}

std::uint64_t Luby(std::uint64_t i) {
  // Value at position i (0-based) of 1,1,2,1,1,2,4,1,1,2,1,1,2,4,8,...
  std::uint64_t size = 1;
  int seq = 0;
  while (size < i + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != i) {
    size = (size - 1) >> 1;
    --seq;
    i = i % size;
  }
  return std::uint64_t{1} << seq;
}

// Max-heap over variables ordered by activity, lower index first on ties.
class VarHeap {
 public:
  explicit VarHeap(const std::vector<double>& activity) : act_(activity) {}

  void Reserve(std::size_t n) { pos_.assign(n, -1); }
  bool Contains(Var v) const { return pos_[v] >= 0; }
  bool Empty() const { return heap_.empty(); }

  void Insert(Var v) {
    if (Contains(v)) return;
    pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    Up(pos_[v]);
  }
  void Increased(Var v) {
    if (Contains(v)) Up(pos_[v]);
  }
  Var PopMax() {
    Var top = heap_.front();
    heap_.front() = heap_.back();
    pos_[heap_.front()] = 0;
    heap_.pop_back();
    pos_[top] = -1;
    if (!heap_.empty()) Down(0);
    return top;
  }

 private:
  bool Before(Var a, Var b) const {
    return act_[a] > act_[b] || (act_[a] == act_[b] && a < b);
  }
  void Up(int i) {
    Var v = heap_[i];
    while (i > 0) {
      int parent = (i - 1) / 2;
      if (!Before(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      pos_[heap_[i]] = i;
      i = parent;
    }
    heap_[i] = v;
    pos_[v] = i;
  }
  void Down(int i) {
    Var v = heap_[i];
    const int size = static_cast<int>(heap_.size());
    while (true) {
      int child = 2 * i + 1;
      if (child >= size) break;
      if (child + 1 < size && Before(heap_[child + 1], heap_[child])) ++child;
      if (!Before(heap_[child], v)) break;
      heap_[i] = heap_[child];
      pos_[heap_[i]] = i;
      i = child;
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  const std::vector<double>& act_;
  std::vector<Var> heap_;
  std::vector<int> pos_;
};

class CdclEngine {
 public:
  explicit CdclEngine(const SatOptions& options)
      : options_(options), heap_(activity_) {}

  SatResult Solve(const CnfFormula& formula) {
    Init(formula.num_vars());
    SatResult result;
    for (const Clause& clause : formula.clauses()) {
      if (!AddInputClause(clause)) {
        result.status = SatStatus::kUnsatisfiable;
        result.stats = stats_;
        return result;
      }
    }
    if (Propagate() != kNoReason) {
      result.status = SatStatus::kUnsatisfiable;
      result.stats = stats_;
      return result;
    }

    max_learnts_ = std::max<double>(static_cast<double>(formula.num_clauses()) / 3.0, 2000.0);
    SatStatus status = SatStatus::kUnknown;
    for (std::uint64_t restart = 0;; ++restart) {
      const std::uint64_t budget =
          Luby(restart) * static_cast<std::uint64_t>(options_.restart_base);
      status = Search(budget);
      if (status != SatStatus::kUnknown || timed_out_) break;
      ++stats_.restarts;
    }

    result.status = status;
    result.stats = stats_;
    if (status == SatStatus::kSatisfiable) {
      Model model(num_vars_);
      for (Var v = 0; v < static_cast<Var>(num_vars_); ++v)
        model.Set(static_cast<int>(v) + 1, assigns_[v] == 1);
      if (!SatisfiesAll(formula, model))
        throw InternalError("SAT engine produced a model violating the input");
      result.model = std::move(model);
    }
    return result;
  }

 private:
  struct Watcher {
    CRef cref;
    Lit blocker;
  };

  // Arena layout per clause: [size, flags, activity bits, lits...].
  static constexpr std::uint32_t kLearnt = 1;
  static constexpr std::uint32_t kDeleted = 2;
  static constexpr int kHeader = 3;

  std::uint32_t Size(CRef c) const { return arena_[c]; }
  Lit* Lits(CRef c) { return arena_.data() + c + kHeader; }
  bool IsLearnt(CRef c) const { return arena_[c + 1] & kLearnt; }
  bool IsDeleted(CRef c) const { return arena_[c + 1] & kDeleted; }
  float Activity(CRef c) const { return std::bit_cast<float>(arena_[c + 2]); }
  void SetActivity(CRef c, float a) { arena_[c + 2] = std::bit_cast<std::uint32_t>(a); }

  void Init(int num_vars) {
    num_vars_ = num_vars;
    const auto n = static_cast<std::size_t>(num_vars);
    assigns_.assign(n, kUndef);
    level_.assign(n, 0);
    reason_.assign(n, kNoReason);
    phase_.assign(n, 0);
    seen_.assign(n, 0);
    activity_.assign(n, 0.0);
    watches_.assign(2 * n, {});
    heap_.Reserve(n);
    for (Var v = 0; v < n; ++v) heap_.Insert(v);
  }

  std::int8_t Value(Lit l) const {
    std::int8_t a = assigns_[VarOf(l)];
    return a == kUndef ? kUndef : static_cast<std::int8_t>(a ^ (IsNegated(l) ? 1 : 0));
  }
  int DecisionLevel() const { return static_cast<int>(trail_lim_.size()); }

  void Enqueue(Lit l, CRef from) {
    Var v = VarOf(l);
    assigns_[v] = IsNegated(l) ? 0 : 1;
    level_[v] = DecisionLevel();
    reason_[v] = from;
    trail_.push_back(l);
  }

  CRef Allocate(const std::vector<Lit>& lits, bool learnt) {
    const auto c = static_cast<CRef>(arena_.size());
    arena_.push_back(static_cast<std::uint32_t>(lits.size()));
    arena_.push_back(learnt ? kLearnt : 0);
    arena_.push_back(std::bit_cast<std::uint32_t>(0.0f));
    arena_.insert(arena_.end(), lits.begin(), lits.end());
    return c;
  }

  void Attach(CRef c) {
    Lit* lits = Lits(c);
    watches_[Negate(lits[0])].push_back({c, lits[1]});
    watches_[Negate(lits[1])].push_back({c, lits[0]});
  }

  // Level-0 insertion with normalization. Returns false on a conflict.
  bool AddInputClause(const Clause& clause) {
    std::vector<Lit> lits;
    lits.reserve(clause.size());
    for (Literal l : clause) lits.push_back(FromDimacs(l));
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<Lit> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i + 1 < lits.size() && lits[i + 1] == Negate(lits[i])) return true;
      std::int8_t val = Value(lits[i]);
      if (val == 1) return true;
      if (val == 0) continue;
      kept.push_back(lits[i]);
    }
    if (kept.empty()) return false;
    if (kept.size() == 1) {
      Enqueue(kept[0], kNoReason);
      return Propagate() == kNoReason;
    }
    Attach(Allocate(kept, false));
    return true;
  }

  CRef Propagate() {
    CRef conflict = kNoReason;
    while (qhead_ < trail_.size()) {
      const Lit p = trail_[qhead_++];
      const Lit false_lit = Negate(p);
      std::vector<Watcher>& ws = watches_[p];
      std::size_t i = 0, j = 0;
      const std::size_t end = ws.size();
      ++stats_.propagations;
      while (i < end) {
        const Lit blocker = ws[i].blocker;
        if (Value(blocker) == 1) {
          ws[j++] = ws[i++];
          continue;
        }
        const CRef c = ws[i].cref;
        Lit* lits = Lits(c);
        if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
        ++i;
        const Lit first = lits[0];
        const Watcher w{c, first};
        if (first != blocker && Value(first) == 1) {
          ws[j++] = w;
          continue;
        }
        bool moved = false;
        const std::uint32_t size = Size(c);
        for (std::uint32_t k = 2; k < size; ++k) {
          if (Value(lits[k]) != 0) {
            lits[1] = lits[k];
            lits[k] = false_lit;
            watches_[Negate(lits[1])].push_back(w);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = w;
        if (Value(first) == 0) {
          conflict = c;
          qhead_ = trail_.size();
          while (i < end) ws[j++] = ws[i++];
        } else {
          Enqueue(first, c);
        }
      }
      ws.resize(j);
      if (conflict != kNoReason) break;
    }
    return conflict;
  }

  void BumpVar(Var v) {
    if ((activity_[v] += var_inc_) > 1e100) {
      for (double& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    heap_.Increased(v);
  }

  void BumpClause(CRef c) {
    float a = Activity(c) + static_cast<float>(clause_inc_);
    SetActivity(c, a);
    if (a > 1e20f) {
      for (CRef l : learnts_) SetActivity(l, Activity(l) * 1e-20f);
      clause_inc_ *= 1e-20;
    }
  }

  // First-UIP learning. Fills `learnt` (asserting literal first) and returns
  // the backjump level.
  int Analyze(CRef conflict, std::vector<Lit>& learnt) {
    learnt.clear();
    learnt.push_back(0);
    int path_count = 0;
    Lit p = 0;
    bool have_p = false;
    std::size_t index = trail_.size();
    CRef c = conflict;
    do {
      if (IsLearnt(c)) BumpClause(c);
      Lit* lits = Lits(c);
      for (std::uint32_t k = have_p ? 1 : 0; k < Size(c); ++k) {
        const Lit q = lits[k];
        const Var v = VarOf(q);
        if (!seen_[v] && level_[v] > 0) {
          BumpVar(v);
          seen_[v] = 1;
          if (level_[v] >= DecisionLevel()) {
            ++path_count;
          } else {
            learnt.push_back(q);
          }
        }
      }
      while (!seen_[VarOf(trail_[--index])]) {
      }
      p = trail_[index];
      have_p = true;
      c = reason_[VarOf(p)];
      seen_[VarOf(p)] = 0;
      --path_count;
    } while (path_count > 0);
    learnt[0] = Negate(p);

    // Drop literals implied by the rest of the clause through their reason.
    analyze_toclear_.assign(learnt.begin(), learnt.end());
    std::size_t keep = 1;
    for (std::size_t k = 1; k < learnt.size(); ++k) {
      const Var v = VarOf(learnt[k]);
      const CRef r = reason_[v];
      bool redundant = r != kNoReason;
      if (redundant) {
        Lit* rl = Lits(r);
        for (std::uint32_t m = 1; m < Size(r); ++m) {
          const Var u = VarOf(rl[m]);
          if (!seen_[u] && level_[u] > 0) {
            redundant = false;
            break;
          }
        }
      }
      if (!redundant) learnt[keep++] = learnt[k];
    }
    learnt.resize(keep);
    for (Lit l : analyze_toclear_) seen_[VarOf(l)] = 0;

    int backjump = 0;
    if (learnt.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t k = 2; k < learnt.size(); ++k)
        if (level_[VarOf(learnt[k])] > level_[VarOf(learnt[max_i])]) max_i = k;
      std::swap(learnt[1], learnt[max_i]);
      backjump = level_[VarOf(learnt[1])];
    }
    return backjump;
  }

  void CancelUntil(int level) {
    if (DecisionLevel() <= level) return;
    for (std::size_t c = trail_.size(); c-- > trail_lim_[level];) {
      const Var v = VarOf(trail_[c]);
      assigns_[v] = kUndef;
      reason_[v] = kNoReason;
      phase_[v] = IsNegated(trail_[c]) ? 0 : 1;
      heap_.Insert(v);
    }
    trail_.resize(trail_lim_[level]);
    qhead_ = trail_.size();
    trail_lim_.resize(level);
  }

  bool Locked(CRef c) {
    const Lit first = Lits(c)[0];
    return Value(first) == 1 && reason_[VarOf(first)] == c;
  }

  void ReduceLearnts() {
    std::sort(learnts_.begin(), learnts_.end(), [this](CRef a, CRef b) {
      const bool a_bin = Size(a) == 2, b_bin = Size(b) == 2;
      if (a_bin != b_bin) return b_bin;
      if (Activity(a) != Activity(b)) return Activity(a) < Activity(b);
      return a < b;
    });
    const std::size_t half = learnts_.size() / 2;
    std::vector<CRef> kept;
    kept.reserve(learnts_.size());
    for (std::size_t i = 0; i < learnts_.size(); ++i) {
      const CRef c = learnts_[i];
      if (i < half && Size(c) > 2 && !Locked(c)) {
        arena_[c + 1] |= kDeleted;
        wasted_ += Size(c) + kHeader;
      } else {
        kept.push_back(c);
      }
    }
    learnts_ = std::move(kept);
    for (auto& ws : watches_) {
      std::erase_if(ws, [this](const Watcher& w) { return IsDeleted(w.cref); });
    }
    if (wasted_ * 2 > arena_.size()) CompactArena();
  }

  void CompactArena() {
    std::vector<std::uint32_t> fresh;
    fresh.reserve(arena_.size() - wasted_);
    std::vector<CRef> remap_from, remap_to;
    for (CRef c = 0; c < arena_.size(); c += kHeader + Size(c)) {
      if (IsDeleted(c)) continue;
      remap_from.push_back(c);
      remap_to.push_back(static_cast<CRef>(fresh.size()));
      fresh.insert(fresh.end(), arena_.begin() + c, arena_.begin() + c + kHeader + Size(c));
    }
    auto translate = [&](CRef c) {
      auto it = std::lower_bound(remap_from.begin(), remap_from.end(), c);
      return remap_to[it - remap_from.begin()];
    };
    for (auto& ws : watches_)
      for (Watcher& w : ws) w.cref = translate(w.cref);
    for (CRef& r : reason_)
      if (r != kNoReason) r = translate(r);
    for (CRef& l : learnts_) l = translate(l);
    arena_ = std::move(fresh);
    wasted_ = 0;
  }

  SatStatus Search(std::uint64_t conflict_budget) {
    std::uint64_t conflicts_here = 0;
    std::vector<Lit> learnt;
    while (true) {
      const CRef conflict = Propagate();
      if (conflict != kNoReason) {
        ++stats_.conflicts;
        ++conflicts_here;
        if (DecisionLevel() == 0) return SatStatus::kUnsatisfiable;
        const int backjump = Analyze(conflict, learnt);
        CancelUntil(backjump);
        if (learnt.size() == 1) {
          Enqueue(learnt[0], kNoReason);
        } else {
          const CRef c = Allocate(learnt, true);
          learnts_.push_back(c);
          Attach(c);
          BumpClause(c);
          Enqueue(learnt[0], c);
        }
        var_inc_ /= 0.95;
        clause_inc_ /= 0.999;
        if ((stats_.conflicts & 255) == 0 && options_.deadline.Expired()) {
          timed_out_ = true;
          return SatStatus::kUnknown;
        }
        continue;
      }

      if (conflicts_here >= conflict_budget) {
        CancelUntil(0);
        return SatStatus::kUnknown;
      }
      if (static_cast<double>(learnts_.size()) - static_cast<double>(trail_.size()) >=
          max_learnts_) {
        ReduceLearnts();
        max_learnts_ *= 1.1;
      }

      Var next = 0;
      bool have_next = false;
      while (!heap_.Empty()) {
        next = heap_.PopMax();
        if (assigns_[next] == kUndef) {
          have_next = true;
          break;
        }
      }
      if (!have_next) return SatStatus::kSatisfiable;
      ++stats_.decisions;
      if ((stats_.decisions & 4095) == 0 && options_.deadline.Expired()) {
        timed_out_ = true;
        return SatStatus::kUnknown;
      }
      trail_lim_.push_back(trail_.size());
      Enqueue(MakeLit(next, phase_[next] == 0), kNoReason);
    }
  }

  const SatOptions& options_;
  int num_vars_ = 0;
  std::vector<std::uint32_t> arena_;
  std::size_t wasted_ = 0;
  std::vector<CRef> learnts_;
  std::vector<std::vector<Watcher>> watches_;
  std::vector<std::int8_t> assigns_;
  std::vector<int> level_;
  std::vector<CRef> reason_;
  std::vector<std::uint8_t> phase_;
  std::vector<std::uint8_t> seen_;
  std::vector<Lit> analyze_toclear_;
  std::vector<double> activity_;
  VarHeap heap_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
  double var_inc_ = 1.0;
  double clause_inc_ = 1.0;
  double max_learnts_ = 0;
  bool timed_out_ = false;
  SatStats stats_;
};

}  // namespace

SatResult SolveSat(const CnfFormula& formula, const SatOptions& options) {
  return CdclEngine(options).Solve(formula);
}

std::vector<Model> EnumerateModels(const CnfFormula& formula, int var_limit) {
  const int n = formula.num_vars();
  if (n > var_limit) {
    throw RefusalError("model enumeration over " + std::to_string(n) +
                       " variables exceeds the limit of " + std::to_string(var_limit));
  }
  std::vector<Model> models;
  for (const Clause& clause : formula.clauses())
    if (clause.empty()) return models;

  // Each clause is checked once its highest-numbered variable is assigned.
  std::vector<std::vector<const Clause*>> closing(static_cast<std::size_t>(n) + 1);
  for (const Clause& clause : formula.clauses()) {
    int top = 0;
    for (Literal l : clause) top = std::max(top, std::abs(l));
    closing[top].push_back(&clause);
  }

  Model current(n);
  auto consistent = [&](int var) {
    for (const Clause* clause : closing[var]) {
      bool sat = false;
      for (Literal l : *clause) {
        if (current.Satisfies(l)) {
          sat = true;
          break;
        }
      }
      if (!sat) return false;
    }
    return true;
  };

  // Iterative DFS: value_tried[v] counts how many of {false, true} were
  // attempted at variable v.
  std::vector<int> tried(static_cast<std::size_t>(n) + 2, 0);
  if (n == 0) {
    models.push_back(current);
    return models;
  }
  int var = 1;
  while (var >= 1) {
    if (tried[var] == 2) {
      tried[var] = 0;
      --var;
      continue;
    }
    current.Set(var, tried[var] == 1);
    ++tried[var];
    if (!consistent(var)) continue;
    if (var == n) {
      models.push_back(current);
    } else {
      ++var;
    }
  }
  return models;
}

}  // namespace kclique
