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

#ifndef KCLIQUE_DEADLINE_H_
#define KCLIQUE_DEADLINE_H_

#include <chrono>
#include <optional>

namespace kclique {

// Cooperative wall-clock limit. Engines poll `Expired()` every few hundred
// nodes/conflicts; a default-constructed deadline never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline Never() { return Deadline(); }
  static Deadline After(std::chrono::duration<double> budget) {
    Deadline d;
    d.at_ = Clock::now() +
            std::chrono::duration_cast<Clock::duration>(budget);
    return d;
  }

  bool Expired() const { return at_.has_value() && Clock::now() >= *at_; }
  bool IsFinite() const { return at_.has_value(); }

  // Remaining time, clamped at zero. Infinite deadlines report nullopt.
  std::optional<Clock::duration> Remaining() const {
    if (!at_) return std::nullopt;
    auto left = *at_ - Clock::now();
    return left < Clock::duration::zero() ? Clock::duration::zero() : left;
  }

 private:
  std::optional<Clock::time_point> at_;
};

}  // namespace kclique

#endif  // KCLIQUE_DEADLINE_H_
