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

#include "kclique/generator.h"

#include "kclique/errors.h"
#include "kclique/file_util.h"

namespace kclique {

void Probability::Validate() const {
  if (b < 1 || a < 0 || a > b) {
    throw InputError("edge probability " + ToString() +
                     " must satisfy 0 <= a <= b, b >= 1");
  }
}

Probability ParseProbability(std::string_view text) {
  const auto slash = text.find('/');
  Probability p;
  if (slash == std::string_view::npos) {
    auto whole = ParseInteger<std::int64_t>(text);
    if (!whole) throw InputError("probability must be 'a/b', got '" + std::string(text) + "'");
    p = {*whole, 1};
  } else {
    auto a = ParseInteger<std::int64_t>(text.substr(0, slash));
    auto b = ParseInteger<std::int64_t>(text.substr(slash + 1));
    if (!a || !b) throw InputError("probability must be 'a/b', got '" + std::string(text) + "'");
    p = {*a, *b};
  }
  p.Validate();
  return p;
}

void GenSpec::Validate() const {
  if (n < 1) throw InputError("n must be >= 1");
  prob.Validate();
}

Graph GenerateRandomGraph(const GenSpec& spec) {
  spec.Validate();
  Graph g(spec.n);
  SplitMix64 rng(spec.seed);
  const auto a = static_cast<std::uint64_t>(spec.prob.a);
  const auto b = static_cast<std::uint64_t>(spec.prob.b);
  for (int i = 1; i < spec.n; ++i) {
    for (int j = i + 1; j <= spec.n; ++j) {
      if (rng.Next() % b < a) g.AddEdge(i, j);
    }
  }
  return g;
}

}  // namespace kclique
