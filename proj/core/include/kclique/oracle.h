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

#ifndef KCLIQUE_ORACLE_H_
#define KCLIQUE_ORACLE_H_

#include <chrono>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "kclique/generator.h"
#include "kclique/graph.h"

namespace kclique {

// Nonnegative quantity held as its natural logarithm, with an explicit zero.
class LogNumber {
 public:
  static LogNumber Zero() { return LogNumber(); }
  static LogNumber FromLog(double ln) { return LogNumber(ln); }
  // Throws InputError for negative values.
  static LogNumber FromValue(double value);

  bool is_zero() const { return zero_; }
  // Natural log; -infinity for zero.
  double ln() const;
  double log10() const;
  double ToDouble() const;  // may overflow to +inf

  // "2.486e+22" with `digits` significant digits; "0" for zero.
  std::string ToScientific(int digits = 4) const;

  friend LogNumber operator*(LogNumber a, LogNumber b);
  friend LogNumber operator/(LogNumber a, LogNumber b);  // b nonzero
  friend bool operator<(const LogNumber& a, const LogNumber& b);
  friend bool operator==(const LogNumber& a, const LogNumber& b) {
    return a.zero_ == b.zero_ && (a.zero_ || a.ln_ == b.ln_);
  }

 private:
  LogNumber() = default;
  explicit LogNumber(double ln) : zero_(false), ln_(ln) {}

  bool zero_ = true;
  double ln_ = 0.0;
};

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kExactBinomialMaxN = 200;

// Exact C(n, k) from Pascal's recurrence; 0 when k > n or k < 0. Throws
// InputError for n outside 0..kExactBinomialMaxN.
BigInt BinomialExact(int n, int k);

// C(n, k) from log-gamma sums; zero when k > n or k < 0.
LogNumber Binomial(int n, int k);

// First-moment estimate E[N_k] = C(n, k) * (a/b)^(k(k-1)/2) for G(n, a/b).
// Requires 0 < a <= b.
LogNumber ExpectedCliqueCount(int n, int k, const Probability& p);

// Time to examine all C(n, k) subsets at `steps_per_second` (> 0).
std::chrono::duration<double> NaiveCostEstimate(int n, int k, double steps_per_second);

double ToYears(std::chrono::duration<double> d);  // Julian years

inline constexpr double kBruteForceBudget = 1e7;

// Checks every k-subset in lexicographic order. Refuses (RefusalError) when
// C(n, k) > kBruteForceBudget.
bool BruteForceDecide(const CliqueInstance& instance);

// Clique number by descending-k brute force. Refuses when n > 20.
int MaxCliqueBrute(const Graph& g);

}  // namespace kclique

#endif  // KCLIQUE_ORACLE_H_
