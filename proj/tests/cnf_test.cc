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

#include "kclique/cnf.h"

#include <gtest/gtest.h>

#include "kclique/errors.h"
#include "kclique/sat_encoding.h"

namespace kclique {
namespace {

TEST(CnfFormulaTest, RejectsBadLiterals) {
  CnfFormula f(3);
  EXPECT_THROW(f.AddClause({1, 0}), InputError);
  EXPECT_THROW(f.AddClause({4}), InputError);
  EXPECT_THROW(f.AddClause({}), InputError);
  f.AddClause({-3, 2});
  EXPECT_EQ(f.num_clauses(), 1u);
}

TEST(DimacsTest, SplitsClausesByZero) {
  CnfFormula f(4);
  f.AddClause({1, -2});
  f.AddClause({-4, -1, 3});
  EXPECT_EQ(WriteDimacs(f), "p cnf 4 2\n1 -2 0\n-4 -1 3 0\n");
}

TEST(DimacsTest, EmptyFormula) {
  EXPECT_EQ(WriteDimacs(CnfFormula(0)), "p cnf 0 0\n");
  EXPECT_EQ(ReadDimacs("p cnf 0 0\n"), CnfFormula(0));
}

TEST(DimacsTest, WritesCommentsBeforeHeader) {
  CnfFormula f(1);
  f.AddClause({1});
  const std::string comments[] = {"k-clique n=1 k=1"};
  EXPECT_EQ(WriteDimacs(f, comments), "c k-clique n=1 k=1\np cnf 1 1\n1 0\n");
}

TEST(DimacsTest, ReadsFreeFormLayout) {
  CnfFormula f = ReadDimacs("c hello\np cnf 4 2\n 1 -2 0 -4\n-1 3 0\n");
  ASSERT_EQ(f.num_clauses(), 2u);
  EXPECT_EQ(f.clauses()[0], (Clause{1, -2}));
  EXPECT_EQ(f.clauses()[1], (Clause{-4, -1, 3}));
}

TEST(DimacsTest, ReadsEmptyClause) {
  CnfFormula f = ReadDimacs("p cnf 1 2\n1 0\n0\n");
  ASSERT_EQ(f.num_clauses(), 2u);
  EXPECT_TRUE(f.clauses()[1].empty());
}

TEST(DimacsTest, ParseErrors) {
  EXPECT_THROW(ReadDimacs("1 2 0\n"), ParseError);
  EXPECT_THROW(ReadDimacs(""), ParseError);
  EXPECT_THROW(ReadDimacs("p cnf 2 1\n1 3 0\n"), ParseError);
  EXPECT_THROW(ReadDimacs("p cnf 2 1\n1 2\n"), ParseError);
  EXPECT_THROW(ReadDimacs("p cnf 2 2\n1 2 0\n"), ParseError);
  EXPECT_THROW(ReadDimacs("p cnf 2 1\n1 x 0\n"), ParseError);
  EXPECT_THROW(ReadDimacs("p sat 2 1\n1 0\n"), ParseError);
  try {
    ReadDimacs("p cnf 2 1\n\n1 -7 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(DimacsTest, RoundTripsAnEncoding) {
  KCliqueEncoding enc = EncodeKClique({Graph::Complete(3), 3});
  EXPECT_EQ(ReadDimacs(WriteDimacs(enc.formula)), enc.formula);
}

}  // namespace
}  // namespace kclique
