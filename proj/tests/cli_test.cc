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

#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "kclique/bench.h"
#include "kclique/external.h"
#include "kclique/file_util.h"
#include "kclique/graph.h"

namespace kclique {
namespace {

const std::string kCli = KCLIQUE_CLI_PATH;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("kclique-cli-test-" + std::string(::testing::UnitTest::GetInstance()
                                                  ->current_test_info()
                                                  ->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  ProcessResult Run(const std::string& args) const {
    return RunCommand("cd '" + dir_.string() + "' && '" + kCli + "' " + args, Deadline::Never());
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, GenIsDeterministic) {
  ASSERT_EQ(Run("gen --n 30 --prob 2/3 --seed 5 -o a.edge").exit_code, 0);
  ASSERT_EQ(Run("--seed 5 gen --n 30 --prob 2/3 -o b.edge").exit_code, 0);
  EXPECT_EQ(ReadTextFile(Path("a.edge")), ReadTextFile(Path("b.edge")));
  ProcessResult m = Run("gen --n 4 --prob 1/1 --format matrix");
  EXPECT_EQ(m.out, "4\n0111\n1011\n1101\n1110\n");
}

TEST_F(CliTest, SolveExitCodes) {
  WriteGraphFile(Graph::Complete(5), GraphFormat::kDimacsEdge, Path("k5.edge"));
  for (const char* backend : {"backtrack", "sat", "ilp"}) {
    ProcessResult found = Run(std::string("solve --backend ") + backend + " --k 5 k5.edge");
    EXPECT_EQ(found.exit_code, 10) << backend << found.out << found.err;
    EXPECT_NE(found.out.find("witness: {1,2,3,4,5}"), std::string::npos) << found.out;
  }
  ProcessResult sat = Run("solve --backend sat --k 3 k5.edge");
  EXPECT_NE(sat.out.find("num_vars: 29"), std::string::npos) << sat.out;
  EXPECT_NE(sat.out.find("num_clauses: "), std::string::npos);

  WriteGraphFile(Graph(5), GraphFormat::kDimacsEdge, Path("empty.edge"));
  EXPECT_EQ(Run("solve --backend backtrack --k 2 empty.edge").exit_code, 20);
  EXPECT_EQ(Run("solve --backend sat --k 2 empty.edge").exit_code, 20);
  EXPECT_EQ(Run("solve --backend ilp --k 2 empty.edge").exit_code, 20);

  EXPECT_EQ(Run("gen --n 200 --prob 9/10 --seed 1 -o big.edge").exit_code, 0);
  EXPECT_EQ(Run("--timeout 0.05 solve --backend backtrack --k 100 big.edge").exit_code, 30);

  EXPECT_EQ(Run("solve --backend sat --k 9 k5.edge").exit_code, 1);
  EXPECT_EQ(Run("solve --backend sat --k 2 missing.edge").exit_code, 1);
  EXPECT_EQ(Run("solve --backend nope --k 2 k5.edge").exit_code, 1);
  WriteTextFile(Path("bad.edge"), "p edge 3 1\ne 1 9\n");
  ProcessResult bad = Run("solve --backend sat --k 2 bad.edge");
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
}

TEST_F(CliTest, EncodersWriteFiles) {
  WriteGraphFile(Graph::Complete(3), GraphFormat::kDimacsEdge, Path("k3.edge"));
  ASSERT_EQ(Run("encode-sat --k 3 k3.edge -o k3.cnf").exit_code, 0);
  EXPECT_NE(ReadTextFile(Path("k3.cnf")).find("p cnf 19 53\n"), std::string::npos);
  ASSERT_EQ(Run("encode-ilp k3.edge -o k3.lp").exit_code, 0);
  EXPECT_EQ(ReadTextFile(Path("k3.lp")), "max: x1 + x2 + x3;\nbin x1,x2,x3;\n");
}

TEST_F(CliTest, SatSolveServesAsExternalSolver) {
  ASSERT_EQ(Run("gen --n 30 --prob 2/3 --seed 2 -o g.edge").exit_code, 0);
  for (int k : {6, 12}) {
    const std::string ks = std::to_string(k);
    ProcessResult embedded = Run("solve --backend sat --k " + ks + " g.edge");
    ProcessResult external =
        Run("solve --backend sat --k " + ks + " --external-sat \"'" + kCli + "' sat-solve\" g.edge");
    EXPECT_EQ(embedded.exit_code, external.exit_code) << external.out << external.err;
    EXPECT_TRUE(external.exit_code == 10 || external.exit_code == 20);
  }
}

TEST_F(CliTest, Oracle) {
  ProcessResult e = Run("oracle expected --n 100 --k 24 --prob 5/6");
  EXPECT_EQ(e.exit_code, 0);
  EXPECT_NE(e.out.find("expected: 1.11"), std::string::npos) << e.out;
  EXPECT_NE(e.out.find("log10"), std::string::npos);
  ProcessResult n = Run("oracle naive --n 100 --k 23 --steps-per-second 2.6e9");
  EXPECT_NE(n.out.find("years: 3.03"), std::string::npos) << n.out;
  WriteGraphFile(Graph::Complete(4), GraphFormat::kMatrix, Path("k4.txt"));
  EXPECT_EQ(Run("oracle decide --k 4 k4.txt").exit_code, 10);
  EXPECT_EQ(Run("oracle decide --k 2 " + Path("k4.txt")).exit_code, 10);
}

TEST_F(CliTest, BenchWritesReports) {
  WriteTextFile(Path("suite.json"),
                R"({"graphs": [{"n": 20, "prob": "1/2", "seed": 1, "k": [3, 4, 5, 6, 7]}],
                    "timeout_s": 30, "output": {"diagnostics": "diag"}})");
  ProcessResult r = Run("bench suite.json -o out.csv --markdown out.md --workers 2");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto records = ParseCsv(ReadTextFile(Path("out.csv")));
  EXPECT_EQ(records.size(), 11u);
  EXPECT_EQ(ReadTextFile(Path("out.md")), r.out);
  EXPECT_EQ(Run("bench nothing.json").exit_code, 1);
}

}  // namespace
}  // namespace kclique
