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

#ifndef KCLIQUE_GENERATOR_H_
#define KCLIQUE_GENERATOR_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "kclique/graph.h"

namespace kclique {

// SplitMix64: state advances by the golden-ratio gamma, output is the
// state passed through a two-round xor-shift-multiply finalizer.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4B7C15ULL;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t Next() {
    state_ += kGamma;
    return Mix(state_);
  }
  std::uint64_t state() const { return state_; }

  static constexpr std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Edge probability as an exact fraction a/b with 0 <= a <= b, b >= 1.
struct Probability {
  std::int64_t a = 1;
  std::int64_t b = 2;

  void Validate() const;
  std::string ToString() const { return std::to_string(a) + "/" + std::to_string(b); }
  double value() const { return static_cast<double>(a) / static_cast<double>(b); }
  friend bool operator==(const Probability&, const Probability&) = default;
};

// Parses "a/b" (or a bare "0"/"1"). Throws InputError.
Probability ParseProbability(std::string_view text);

struct GenSpec {
  int n = 1;
  Probability prob;
  std::uint64_t seed = 0;

  void Validate() const;
};

// G(n, a/b): pairs (i, j) are visited row-major over the upper triangle
// (i = 1..n-1, j = i+1..n); each draws one SplitMix64 output r and becomes an
// edge iff r mod b < a. Fully determined by (n, prob, seed).
Graph GenerateRandomGraph(const GenSpec& spec);

}  // namespace kclique

#endif  // KCLIQUE_GENERATOR_H_
