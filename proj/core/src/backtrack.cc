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

#include "kclique/backtrack.h"

#include <bit>
#include <vector>

#include "kclique/errors.h"

namespace kclique {

std::string_view DecisionName(Decision d) {
  switch (d) {
    case Decision::kFound:
      return "found";
    case Decision::kNotFound:
      return "not-found";
    case Decision::kTimeout:
      return "timeout";
  }
  return "?";
}

namespace {

constexpr std::uint64_t kDeadlinePollMask = (1U << 12) - 1;

enum class Mode { kDecide, kMaximize };

// Candidate sets are kept as one bit-row per depth; depth d holds the
// vertices that may still extend the clique C[0..d).
class CliqueWalker {
 public:
  CliqueWalker(const Graph& g, Mode mode, int target, const BacktrackOptions& opts)
      : g_(g), mode_(mode), target_(target), opts_(opts), words_(g.words_per_row()) {}

  SolveOutcome Run() {
    const auto start = Deadline::Clock::now();
    SolveOutcome out;
    const int n = g_.n();
    const int max_depth = mode_ == Mode::kDecide ? target_ : n;
    cand_.assign(static_cast<std::size_t>(max_depth + 1) * words_, 0);
    for (int v = 1; v <= n; ++v) Set(0, v);

    std::vector<int> clique;
    std::vector<int> best;
    bool timed_out = false;
    bool found = false;
    int depth = 0;
    while (true) {
      const int v = PopLowest(depth);
      if (v == 0) {
        if (depth == 0) break;
        --depth;
        clique.pop_back();
        continue;
      }
      clique.push_back(v);
      const int size = depth + 1;
      ++out.stats.nodes_visited;
      if (size > out.stats.max_depth_reached) out.stats.max_depth_reached = size;
      if ((out.stats.nodes_visited & kDeadlinePollMask) == 0 &&
          opts_.deadline.Expired()) {
        timed_out = true;
        break;
      }

      if (mode_ == Mode::kDecide) {
        if (size == target_) {
          best = clique;
          found = true;
          break;
        }
        if (opts_.prune && size + (n - v) < target_) {
          clique.pop_back();
          continue;
        }
      } else if (size > static_cast<int>(best.size())) {
        best = clique;
      }

      const bool has_children = Extend(depth, v);
      if (mode_ == Mode::kMaximize && opts_.prune &&
          size + CountCandidates(depth + 1) <= static_cast<int>(best.size())) {
        clique.pop_back();
        continue;
      }
      if (!has_children) {
        clique.pop_back();
        continue;
      }
      ++depth;
    }

    if (timed_out) {
      out.decision = Decision::kTimeout;
    } else if (mode_ == Mode::kMaximize || found) {
      out.decision = Decision::kFound;
      out.witness = VertexSet(best);
    } else {
      out.decision = Decision::kNotFound;
    }
    out.elapsed = Deadline::Clock::now() - start;
    return out;
  }

 private:
  Graph::Word* Row(int depth) {
    return cand_.data() + static_cast<std::size_t>(depth) * words_;
  }
  void Set(int depth, int v) {
    Row(depth)[v / Graph::kWordBits] |= Graph::Word{1} << (v % Graph::kWordBits);
  }

  // Removes and returns the lowest candidate at `depth`, or 0 if none.
  int PopLowest(int depth) {
    Graph::Word* row = Row(depth);
    for (int w = 0; w < words_; ++w) {
      if (row[w] != 0) {
        const int bit = std::countr_zero(row[w]);
        row[w] &= row[w] - 1;
        return w * Graph::kWordBits + bit;
      }
    }
    return 0;
  }

  // Candidates at depth+1 are the remaining (higher) candidates at depth
  // that are adjacent to v.
  bool Extend(int depth, int v) {
    if (depth + 1 >= static_cast<int>(cand_.size() / words_)) return false;
    const Graph::Word* from = Row(depth);
    Graph::Word* to = Row(depth + 1);
    auto adj = g_.Row(v);
    Graph::Word any = 0;
    for (int w = 0; w < words_; ++w) {
      to[w] = from[w] & adj[w];
      any |= to[w];
    }
    return any != 0;
  }

  int CountCandidates(int depth) {
    if (depth >= static_cast<int>(cand_.size() / words_)) return 0;
    int count = 0;
    const Graph::Word* row = Row(depth);
    for (int w = 0; w < words_; ++w) count += std::popcount(row[w]);
    return count;
  }

  const Graph& g_;
  Mode mode_;
  int target_;
  const BacktrackOptions& opts_;
  int words_;
  std::vector<Graph::Word> cand_;
};

}  // namespace

SolveOutcome BacktrackDecide(const CliqueInstance& instance,
                             const BacktrackOptions& options) {
  instance.Validate();
  return CliqueWalker(instance.graph, Mode::kDecide, instance.k, options).Run();
}

SolveOutcome BacktrackMax(const Graph& graph, const BacktrackOptions& options) {
  return CliqueWalker(graph, Mode::kMaximize, graph.n(), options).Run();
}

}  // namespace kclique
