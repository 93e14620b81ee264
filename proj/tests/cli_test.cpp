// Copyright 2026 The rpq Authors
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

// Runs the rpq binary end to end.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace rpq {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  std::vector<std::string> lines() const {
    std::vector<std::string> v;
    std::istringstream in(out);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
  }
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rpq_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    social_ = write("social.g", testing::kSocial);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  Outcome rpq(const std::string& args) {
    const fs::path out = dir_ / "stdout";
    const fs::path err = dir_ / "stderr";
    const std::string cmd = std::string("'") + RPQ_CLI_PATH + "' " + args + " >'" +
                            out.string() + "' 2>'" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    return Outcome{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
  }

  fs::path dir_;
  std::string social_;
};

TEST_F(Cli, AnyShortestToRome) {
  const Outcome o = rpq("--graph " + social_ +
                        " --start John --regex 'knows+/lives' --selector any-shortest"
                        " --restrictor walk");
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out,
            R"({"seq":0,"node":"Rome","len":3,)"
            R"("path":["John","e1","Joe","e2","John","e8","Rome"]})"
            "\n");
}

TEST_F(Cli, AllWalkIsPlanError) {
  const Outcome o =
      rpq("--graph " + social_ + " --start John --regex 'knows*' --selector all --restrictor walk");
  EXPECT_EQ(o.code, 2);
  EXPECT_TRUE(o.out.empty());
  EXPECT_NE(o.err.find("infinite"), std::string::npos) << o.err;
}

TEST_F(Cli, ShortestWithDfsIsPlanError) {
  const Outcome o = rpq("--graph " + social_ +
                        " --start John --regex 'knows*' --selector any-shortest"
                        " --restrictor trail --strategy dfs");
  EXPECT_EQ(o.code, 2);
}

TEST_F(Cli, LimitZero) {
  const Outcome o = rpq("--graph " + social_ + " --start John --regex 'knows*' --limit 0");
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
}

TEST_F(Cli, MissingGraphFile) {
  const Outcome o = rpq("--graph " + (dir_ / "nope.g").string() + " --start a --regex a");
  EXPECT_EQ(o.code, 4);
}

TEST_F(Cli, MalformedGraph) {
  const std::string bad = write("bad.g", "a r b\nbroken\n");
  const Outcome o = rpq("--graph " + bad + " --start a --regex r");
  EXPECT_EQ(o.code, 5);
  EXPECT_NE(o.err.find("line 2"), std::string::npos) << o.err;
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(rpq("--graph " + social_ + " --start John --regex a --selector sometimes").code, 1);
  EXPECT_EQ(rpq("--graph " + social_ + " --start John").code, 1);
  EXPECT_EQ(rpq("--bogus").code, 1);
  EXPECT_EQ(rpq("gen-diamond 0").code, 1);
}

TEST_F(Cli, RegexSyntaxIsPlanError) {
  EXPECT_EQ(rpq("--graph " + social_ + " --start John --regex 'knows/('").code, 2);
}

TEST_F(Cli, Timeout) {
  const Outcome gen = rpq("gen-diamond 40");
  ASSERT_EQ(gen.code, 0);
  const std::string d40 = write("d40.g", gen.out);
  const Outcome o = rpq("--graph " + d40 +
                        " --start start --regex 'a*' --selector any --restrictor trail"
                        " --strategy bfs --timeout 20");
  EXPECT_EQ(o.code, 3) << o.err;
}

TEST_F(Cli, GenDiamondRoundTrips) {
  const Outcome o = rpq("gen-diamond 3");
  ASSERT_EQ(o.code, 0);
  const GraphDB g = load_graph(o.out);
  EXPECT_EQ(g.num_nodes(), 10u);
  EXPECT_EQ(g.num_edges(), 12u);
  const std::string file = write("d3.g", o.out);
  const Outcome q = rpq("--graph " + file +
                        " --start start --end end --regex 'a*' --selector all-shortest");
  EXPECT_EQ(q.code, 0) << q.err;
  EXPECT_EQ(q.lines().size(), 8u);
}

TEST_F(Cli, StatsLine) {
  const Outcome o = rpq("--graph " + social_ + " --start John --regex 'knows*' --stats --repeat 2");
  EXPECT_EQ(o.code, 0);
  for (const char* key : {"run=1 ", "run=2 ", "nodes=8 ", "edges=11 ", "states=", "pops=",
                          "results=", "elapsed_ms=", "termination=exhausted", "index=csr-cache",
                          "csr_bytes=", "arena_bytes="}) {
    EXPECT_NE(o.err.find(key), std::string::npos) << key << "\n" << o.err;
  }
  // Results are printed once however many runs.
  EXPECT_EQ(o.lines().size(), 6u);
}

TEST_F(Cli, Count) {
  const Outcome gen = rpq("gen-diamond 70");
  const std::string d70 = write("d70.g", gen.out);
  const Outcome o = rpq("--graph " + d70 +
                        " --start start --end end --regex 'a*' --selector all-shortest --count");
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out, R"({"seq":0,"node":"end","len":140,"count":"1180591620717411303424"})"
                   "\n");
  EXPECT_EQ(rpq("--graph " + d70 + " --start start --regex 'a*' --selector any --count").code, 2);
}

TEST_F(Cli, TextOutputAndWarnings) {
  const Outcome o = rpq("--graph " + social_ +
                        " --start Paul --regex '^knows' --output text --end Joe");
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "Paul <-e3- Joe\n");
  const Outcome w = rpq("--graph " + social_ + " --start Nobody --regex 'likes'");
  EXPECT_EQ(w.code, 0);
  EXPECT_TRUE(w.out.empty());
  EXPECT_NE(w.err.find("Nobody"), std::string::npos);
  EXPECT_NE(w.err.find("likes"), std::string::npos);
}

TEST_F(Cli, IndexModesByteIdentical) {
  std::string first;
  for (const char* mode : {"csr-cache", "csr-full", "scan"}) {
    const Outcome o = rpq("--graph " + social_ +
                          " --start John --regex '(knows|^knows)*/(lives|works)'"
                          " --selector all --restrictor simple --index " + std::string(mode));
    ASSERT_EQ(o.code, 0);
    if (first.empty()) first = o.out;
    EXPECT_EQ(o.out, first) << mode;
  }
  EXPECT_FALSE(first.empty());
}

}  // namespace
}  // namespace rpq
