// Copyright 2026 The hypernim Authors.
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

#include "cli.h"

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hypernim/hypergraph.h"

namespace hypernim::cli {
namespace {

const std::string kFourCycle =
    std::string(HYPERNIM_TEST_DATA_DIR) + "/four_cycle.hg";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "hypernim");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = Run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, HeightAndCertificate) {
  auto r = RunCli({"height", "--hypergraph", kFourCycle, "--position",
                   "1,2,4,2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "4\n");
  r = RunCli({"height", "--hypergraph", kFourCycle, "--position", "6,7,14,9",
              "--certificate"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, 3), "16\n");
  EXPECT_NE(r.out.find("mu{"), std::string::npos);
  r = RunCli({"height", "--hypergraph", kFourCycle, "--position", "6,7,14,9",
              "--machine"});
  EXPECT_EQ(r.out, "height=16\n");
}

TEST(CliTest, SgAndJm) {
  auto r = RunCli({"sg", "--hypergraph", kFourCycle, "--position", "1,2,4,2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "4\n");
  r = RunCli({"jm", "--hypergraph", kFourCycle, "--position", "1,2,4,2"});
  EXPECT_EQ(r.out, "m=1 y=3 class=long U=4\n");
  r = RunCli({"jm", "--hypergraph", kFourCycle, "--position", "4,5,7,5",
              "--machine"});
  EXPECT_EQ(r.out, "m=4\ny=3\nv=3\nclass=short\nU=3\n");
  r = RunCli({"sg", "--family", "pair-transversal", "--param", "k=2",
              "--position", "4,5,7,5"});
  EXPECT_EQ(r.out, "3\n");
}

TEST(CliTest, ParseErrorsAreUsageErrors) {
  auto r = RunCli({"height", "--hypergraph",
                   std::string(HYPERNIM_TEST_DATA_DIR) + "/bad_token.hg",
                   "--position", "1,1,1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  r = RunCli({"height", "--hypergraph",
              std::string(HYPERNIM_TEST_DATA_DIR) + "/uncovered.hg",
              "--position", "1,1,1"});
  EXPECT_EQ(r.code, kExitUsage);
  r = RunCli({"sg", "--hypergraph", kFourCycle, "--position", "1,2,4"});
  EXPECT_EQ(r.code, kExitUsage);
  r = RunCli({"sg", "--hypergraph", kFourCycle, "--position", "1,a,4,2"});
  EXPECT_EQ(r.code, kExitUsage);
  r = RunCli({"sg", "--hypergraph", kFourCycle, "--family", "cube",
              "--position", "1"});
  EXPECT_EQ(r.code, kExitUsage);
  r = RunCli({"sg", "--position", "1"});
  EXPECT_EQ(r.code, kExitUsage);
  r = RunCli({"bogus"});
  EXPECT_EQ(r.code, kExitUsage);
  r = RunCli({"gen", "--family", "nope"});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(CliTest, ResourceLimits) {
  auto r = RunCli({"sg", "--family", "classical", "--param", "n=1",
                   "--position", "300"});
  EXPECT_EQ(r.code, kExitResource);
  EXPECT_NE(r.err.find("max-pile"), std::string::npos);
  r = RunCli({"sg", "--hypergraph", kFourCycle, "--position", "9,9,9,9",
              "--max-memo", "10"});
  EXPECT_EQ(r.code, kExitResource);
  r = RunCli({"sg", "--hypergraph", kFourCycle, "--position", "1,1,1,1",
              "--max-pile", "0"});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(CliTest, GenRoundTrip) {
  auto r = RunCli({"gen", "--family", "moore", "--param", "n=3,k=2"});
  ASSERT_EQ(r.code, kExitOk);
  const Hypergraph h = ParseHypergraph(r.out);
  EXPECT_EQ(h.num_edges(), 6);
  r = RunCli({"gen", "--hypergraph", kFourCycle});
  EXPECT_EQ(ParseHypergraph(r.out), ReadHypergraphFile(kFourCycle));
  r = RunCli({"gen", "--list"});
  EXPECT_NE(r.out.find("petersen-fec7"), std::string::npos);
}

TEST(CliTest, Classify) {
  auto r = RunCli({"classify", "--family", "pair-transversal", "--param",
                   "k=2", "--machine"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("verdict=ProvablyJM"), std::string::npos);
  r = RunCli({"classify", "--family", "classical", "--param", "n=2"});
  EXPECT_NE(r.out.find("verdict: ProvablyNotJM"), std::string::npos);
  EXPECT_NE(r.out.find("reason: not connected"), std::string::npos);
  r = RunCli({"classify", "--family", "cube", "--d2-bound", "2"});
  EXPECT_NE(r.out.find("verdict: Unknown"), std::string::npos);
  EXPECT_NE(r.out.find("not a proof"), std::string::npos);
}

TEST(CliTest, VerifyExitCodes) {
  auto r = RunCli({"verify", "--family", "classical", "--param", "n=2",
                   "--bound", "3", "--machine"});
  EXPECT_EQ(r.code, kExitCounterexample);
  EXPECT_NE(r.out.find("CONDITION sg-equals-u FAILS x=1,3;sg=2;U=4"),
            std::string::npos);
  r = RunCli({"verify", "--hypergraph", kFourCycle, "--bound", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("not a proof"), std::string::npos);
  r = RunCli({"verify", "--hypergraph", kFourCycle, "--check", "conditions",
              "--conditions", "A,B1", "--bound", "2", "--machine"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("CONDITION A HOLDS -"), std::string::npos);
  EXPECT_EQ(r.out.find("CONDITION B2"), std::string::npos);
  r = RunCli({"verify", "--hypergraph", kFourCycle, "--check", "heights",
              "--bound", "3", "--workers", "2"});
  EXPECT_EQ(r.code, kExitOk);
  r = RunCli({"verify", "--family", "tree", "--param", "k=2", "--check",
              "bounds"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("equality"), std::string::npos);
  r = RunCli({"verify", "--hypergraph", kFourCycle, "--check", "nope"});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(CliTest, Graphs) {
  auto r = RunCli({"graphs", "--jm"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, 9), "count: 6\n");
  r = RunCli({"graphs", "--connected", "5"});
  EXPECT_EQ(r.out.substr(0, 10), "count: 21\n");
}

TEST(CliTest, PlayAgainstTheEngine) {
  // The engine moves first from (1,2,4,2) to the P position (1,1,1,2); the
  // human then plays (0,0,1,2) and the engine answers.
  auto r = RunCli({"play", "--hypergraph", kFourCycle, "--position",
                   "1,2,4,2"},
                  "0 0,0,1,2\nq\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("1,1,1,2"), std::string::npos);
  EXPECT_NE(r.out.find("P position"), std::string::npos);
  r = RunCli({"play", "--hypergraph", kFourCycle, "--position", "1,0,0,0"},
             "");
  EXPECT_EQ(r.code, kExitOk);
}

}  // namespace
}  // namespace hypernim::cli
