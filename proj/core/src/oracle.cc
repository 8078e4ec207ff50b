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

#include "kclique/oracle.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "kclique/errors.h"

namespace kclique {

LogNumber LogNumber::FromValue(double value) {
  if (value < 0 || std::isnan(value)) throw InputError("LogNumber requires a nonnegative value");
  if (value == 0) return Zero();
  return LogNumber(std::log(value));
}

double LogNumber::ln() const {
  return zero_ ? -std::numeric_limits<double>::infinity() : ln_;
}

double LogNumber::log10() const { return ln() / std::log(10.0); }

double LogNumber::ToDouble() const { return zero_ ? 0.0 : std::exp(ln_); }

std::string LogNumber::ToScientific(int digits) const {
  if (zero_) return "0";
  const double l10 = log10();
  double exponent = std::floor(l10);
  double mantissa = std::pow(10.0, l10 - exponent);
  // Rounding can carry the mantissa to 10.
  const double scale = std::pow(10.0, digits - 1);
  if (std::round(mantissa * scale) / scale >= 10.0) {
    mantissa /= 10.0;
    exponent += 1.0;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*fe%+03d", digits - 1, mantissa,
                static_cast<int>(exponent));
  return buf;
}

LogNumber operator*(LogNumber a, LogNumber b) {
  if (a.zero_ || b.zero_) return LogNumber::Zero();
  return LogNumber(a.ln_ + b.ln_);
}

LogNumber operator/(LogNumber a, LogNumber b) {
  if (b.zero_) throw InputError("LogNumber division by zero");
  if (a.zero_) return a;
  return LogNumber(a.ln_ - b.ln_);
}

bool operator<(const LogNumber& a, const LogNumber& b) {
  if (b.zero_) return false;
  if (a.zero_) return true;
  return a.ln_ < b.ln_;
}

BigInt BinomialExact(int n, int k) {
  if (n < 0 || n > kExactBinomialMaxN)
    throw InputError("exact binomial supports 0 <= n <= " + std::to_string(kExactBinomialMaxN));
  if (k < 0 || k > n) return 0;
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int r = 1; r <= n; ++r)
    for (int c = r; c >= 1; --c) row[c] += row[c - 1];
  return row[k];
}

LogNumber Binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return LogNumber::Zero();
  return LogNumber::FromLog(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                            std::lgamma(n - k + 1.0));
}

LogNumber ExpectedCliqueCount(int n, int k, const Probability& p) {
  p.Validate();
  if (p.a == 0) throw InputError("expected clique count needs a > 0");
  const double pairs = 0.5 * static_cast<double>(k) * (k - 1);
  const double ln_p = std::log(static_cast<double>(p.a)) - std::log(static_cast<double>(p.b));
  return Binomial(n, k) * LogNumber::FromLog(pairs * ln_p);
}

std::chrono::duration<double> NaiveCostEstimate(int n, int k, double steps_per_second) {
  if (!(steps_per_second > 0)) throw InputError("steps_per_second must be positive");
  return std::chrono::duration<double>(Binomial(n, k).ToDouble() / steps_per_second);
}

double ToYears(std::chrono::duration<double> d) {
  return d.count() / (365.25 * 24 * 3600);
}

bool BruteForceDecide(const CliqueInstance& instance) {
  instance.Validate();
  const Graph& g = instance.graph;
  const int n = g.n(), k = instance.k;
  if (Binomial(n, k).ToDouble() > kBruteForceBudget * (1 + 1e-9)) {
    throw RefusalError("C(" + std::to_string(n) + "," + std::to_string(k) +
                       ") subsets exceed the brute-force budget");
  }
  std::vector<int> comb(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) comb[i] = i + 1;
  while (true) {
    bool clique = true;
    for (int a = 0; a < k && clique; ++a)
      for (int b = a + 1; b < k && clique; ++b)
        clique = g.HasEdge(comb[a], comb[b]);
    if (clique) return true;
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i + 1) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
}

int MaxCliqueBrute(const Graph& g) {
  if (g.n() > 20) throw RefusalError("brute-force clique number is limited to n <= 20");
  for (int k = g.n(); k > 1; --k)
    if (BruteForceDecide({g, k})) return k;
  return 1;
}

}  // namespace kclique
