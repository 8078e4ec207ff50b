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

#include <gtest/gtest.h>

#include "kclique/backtrack.h"
#include "kclique/errors.h"
#include "testing/oracles.h"

namespace kclique {
namespace {

TEST(BinomialTest, Examples) {
  EXPECT_EQ(BinomialExact(12, 5), 792);
  EXPECT_EQ(BinomialExact(7, 0), 1);
  EXPECT_EQ(BinomialExact(0, 0), 1);
  EXPECT_EQ(BinomialExact(5, 6), 0);
  EXPECT_EQ(BinomialExact(100, 23), BigInt("24865270306254660391200"));
  EXPECT_EQ(Binomial(100, 23).ToScientific(4), "2.487e+22");
  EXPECT_TRUE(Binomial(5, 6).is_zero());
  EXPECT_NEAR(Binomial(12, 5).ToDouble(), 792.0, 1e-9);
  EXPECT_NEAR(Binomial(40, 0).ToDouble(), 1.0, 1e-12);
}

TEST(BinomialTest, ExactRangeChecked) {
  EXPECT_THROW(BinomialExact(201, 3), InputError);
  EXPECT_THROW(BinomialExact(-1, 0), InputError);
}

TEST(BinomialTest, LogFormAgreesWithExact) {
  for (int n = 0; n <= kExactBinomialMaxN; ++n) {
    for (int k = 0; k <= n; ++k) {
      const double exact_ln = std::log(BinomialExact(n, k).convert_to<double>());
      const double ln = Binomial(n, k).ln();
      ASSERT_NEAR(ln, exact_ln, 1e-9 * std::max(1.0, exact_ln)) << n << " " << k;
    }
  }
}

TEST(ExpectedCliqueCountTest, Examples) {
  EXPECT_NEAR(ExpectedCliqueCount(10, 1, {1, 2}).ToDouble(), 10.0, 1e-9);
  EXPECT_NEAR(ExpectedCliqueCount(10, 2, {1, 2}).ToDouble(), 22.5, 1e-9);
  EXPECT_NEAR(ExpectedCliqueCount(5, 5, {1, 1}).ToDouble(), 1.0, 1e-9);
  const double e23 = ExpectedCliqueCount(100, 23, {5, 6}).ToDouble();
  const double e24 = ExpectedCliqueCount(100, 24, {5, 6}).ToDouble();
  EXPECT_GT(e23, 100.0);
  EXPECT_LT(e23, 1000.0);
  EXPECT_GT(e24, 1.0);
  EXPECT_LT(e24, 100.0);
  EXPECT_TRUE(ExpectedCliqueCount(4, 5, {1, 2}).is_zero());
  EXPECT_THROW(ExpectedCliqueCount(10, 2, {0, 1}), InputError);
}

TEST(ExpectedCliqueCountTest, DecreasesPastTheMode) {
  for (int n : {40, 60, 100}) {
    for (Probability p : {Probability{1, 2}, Probability{2, 3}, Probability{5, 6}}) {
      int k = 1;
      while (k < n && ExpectedCliqueCount(n, k, p) < ExpectedCliqueCount(n, k + 1, p)) ++k;
      for (; k < n; ++k)
        EXPECT_LT(ExpectedCliqueCount(n, k + 1, p), ExpectedCliqueCount(n, k, p));
    }
  }
}

TEST(NaiveCostTest, Examples) {
  EXPECT_NEAR(NaiveCostEstimate(10, 5, 252.0).count(), 1.0, 1e-9);
  const double years = ToYears(NaiveCostEstimate(100, 23, 2.6e9));
  EXPECT_GT(years, 2.5e5);
  EXPECT_LT(years, 3.5e5);
  EXPECT_THROW(NaiveCostEstimate(10, 5, 0.0), InputError);
}

TEST(LogNumberTest, Arithmetic) {
  EXPECT_EQ(LogNumber::Zero().ToScientific(), "0");
  EXPECT_EQ(LogNumber::FromValue(0.0), LogNumber::Zero());
  EXPECT_EQ(LogNumber::FromValue(1234.5).ToScientific(3), "1.23e+03");
  EXPECT_NEAR((LogNumber::FromValue(6.0) / LogNumber::FromValue(3.0)).ToDouble(), 2.0, 1e-12);
  EXPECT_NEAR((LogNumber::FromValue(6.0) * LogNumber::FromValue(3.0)).ToDouble(), 18.0, 1e-12);
  EXPECT_TRUE((LogNumber::Zero() * LogNumber::FromValue(3.0)).is_zero());
  EXPECT_TRUE(LogNumber::Zero() < LogNumber::FromValue(1e-300));
  EXPECT_THROW(LogNumber::FromValue(-1.0), InputError);
  // Values far beyond double range stay representable.
  EXPECT_EQ(LogNumber::FromLog(1000.0 * std::log(10.0)).ToScientific(3), "1.00e+1000");
}

TEST(BruteForceTest, AgreesWithBacktrack) {
  for (int n = 1; n <= 12; ++n) {
    for (const Graph& g : testing::SmallRandomGraphs(n, 6)) {
      const int omega = MaxCliqueBrute(g);
      ASSERT_EQ(omega, testing::SubsetMaxClique(g));
      for (int k = 1; k <= n; ++k) {
        const bool brute = BruteForceDecide({g, k});
        EXPECT_EQ(brute, k <= omega);
        EXPECT_EQ(brute, BacktrackDecide({g, k}).decision == Decision::kFound);
      }
    }
  }
}

TEST(BruteForceTest, Refusals) {
  EXPECT_THROW(BruteForceDecide({Graph(100), 23}), RefusalError);
  EXPECT_NO_THROW(BruteForceDecide({Graph(100), 3}));
  EXPECT_THROW(MaxCliqueBrute(Graph(21)), RefusalError);
  EXPECT_THROW(BruteForceDecide({Graph(5), 6}), InputError);
}

}  // namespace
}  // namespace kclique
