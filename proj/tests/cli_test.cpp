// Copyright 2026 The maxpareto Authors
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
//
// End-to-end tests of the command-line binary: exit codes, output shape,
// and golden help texts (the synopsis strings are part of the interface).

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "maxpareto/json_util.hpp"
#include "maxpareto/matching.hpp"
#include "maxpareto/model.hpp"
#include "test_util.hpp"

namespace maxpareto {
namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(MAXPARETO_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  int raw = pclose(pipe);
  RunResult res;
  res.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  res.output = output;
  return res;
}

std::string golden_path(const std::string& name) {
  return std::string(MAXPARETO_GOLDEN_DIR) + "/" + name;
}

std::string temp_path(const std::string& name) {
  return ::testing::TempDir() + name;
}

std::string write_box_instance() {
  std::string path = temp_path("cli_box.mpj");
  save_instance(testutil::unit_box_identity(), path);
  return path;
}

std::string write_demo_graph() {
  std::string path = temp_path("cli_demo.bgj");
  save_graph(testutil::demo_graph(), path);
  return path;
}

TEST(Cli, VerifyInteriorPointExitsOneWithWitness) {
  RunResult res =
      run_cli("verify --instance " + write_box_instance() + " --point 0.5,0.5");
  EXPECT_EQ(res.exit_code, 1);
  EXPECT_NE(res.output.find("Dominated"), std::string::npos);
  EXPECT_NE(res.output.find("witness payoff 1 1"), std::string::npos);
}

TEST(Cli, VerifyCornerExitsZero) {
  RunResult res =
      run_cli("verify --instance " + write_box_instance() + " --point 1,1");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.output.find("NotDominated"), std::string::npos);
}

TEST(Cli, VerifyAcceptsRationalPointText) {
  RunResult res =
      run_cli("verify --instance " + write_box_instance() + " --point 1/2,1/2");
  EXPECT_EQ(res.exit_code, 1);
}

TEST(Cli, CertifyWritesJson) {
  std::string out = temp_path("cert.json");
  RunResult res = run_cli("certify --instance " + write_box_instance() +
                          " --point 1,1 --json-out " + out);
  EXPECT_EQ(res.exit_code, 0);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("\"w\""), std::string::npos);
  EXPECT_NE(ss.str().find("\"eta\""), std::string::npos);
}

TEST(Cli, Prop9RatioAndExitCode) {
  RunResult res = run_cli("prop9 --n 3 --mode rational");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.output.find("ratio w1/wn"), std::string::npos);
  EXPECT_NE(res.output.find("lower bound (n-1)^(n-1) = 4"), std::string::npos);
}

TEST(Cli, FpoCheckBothVerdicts) {
  std::string graph = write_demo_graph();
  RunResult good = run_cli("fpo-check --graph " + graph + " --matching 1:1,2:2");
  EXPECT_EQ(good.exit_code, 0);
  EXPECT_NE(good.output.find("fPO"), std::string::npos);
  RunResult bad = run_cli("fpo-check --graph " + graph + " --matching 1:0,2:2");
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.output.find("not fPO"), std::string::npos);
}

TEST(Cli, BlockingSetOutput) {
  std::string graph = write_demo_graph();
  RunResult res =
      run_cli("blocking-set --graph " + graph + " --matching 1:1,2:2 --edge 0:1");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.output.find("blocking set"), std::string::npos);
}

TEST(Cli, OracleOnDemoGraphWelfare) {
  std::string graph = write_demo_graph();
  std::string obj = temp_path("demo_obj.json");
  {
    BipartiteInstance g = testutil::demo_graph();
    std::vector<Rational> c;
    for (const auto& e : g.edges) c.push_back(e.weight);
    write_text_file(obj, rational_vector_to_json(c).dump() + "\n");
  }
  RunResult res = run_cli("oracle --graph " + graph + " --objective-file " + obj);
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.output.find("optimum 6"), std::string::npos);
}

TEST(Cli, GenerateEncodeBenchPipeline) {
  std::string prefix = temp_path("pipe");
  RunResult gen = run_cli("generate --agents 3 --mult 1 --seed 5 --out-prefix " +
                          prefix);
  EXPECT_EQ(gen.exit_code, 0);
  RunResult enc = run_cli("encode --alloc " + prefix + ".alj --use-welfare --out " +
                          prefix + "_enc.mpj");
  EXPECT_EQ(enc.exit_code, 0);
  MaxParetoInstance inst = load_instance(prefix + "_enc.mpj");
  EXPECT_EQ(inst.num_agents(), 3);

  std::string csv = temp_path("pipe.csv");
  RunResult bench = run_cli(
      "bench --agents 3 --mult 1 --seeds 1 --methods heuristic:one,exact "
      "--limit 30 --starts 2 --local-steps 2 --out " +
      csv);
  EXPECT_EQ(bench.exit_code, 0);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "agents,items,method,w_cap,lb,ub,ub_valid,status,time_ms,seed");
}

TEST(Cli, SolveReportsIncumbent) {
  RunResult res = run_cli("solve --instance " + write_box_instance() +
                          " --w-cap 4 --starts 3 --local-steps 3");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.output.find("lb 2"), std::string::npos);
  EXPECT_NE(res.output.find("po_verified true"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("verify").exit_code, 2);        // missing --instance
  EXPECT_EQ(run_cli("viify").exit_code, 2);         // unknown subcommand
  EXPECT_EQ(run_cli("prop9 --mode trinary").exit_code, 2);
}

TEST(Cli, DomainErrorsExitOne) {
  EXPECT_EQ(run_cli("verify --instance /nonexistent.mpj --point 1,1").exit_code, 1);
  std::string graph = write_demo_graph();
  // Non-improving edge: precondition failure.
  EXPECT_EQ(
      run_cli("blocking-set --graph " + graph + " --matching 1:1,2:2 --edge 2:0")
          .exit_code,
      1);
}

TEST(CliGolden, HelpTextsMatch) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"--help", "help_main.txt"},
      {"solve --help", "help_solve.txt"},
      {"verify --help", "help_verify.txt"},
      {"certify --help", "help_certify.txt"},
      {"oracle --help", "help_oracle.txt"},
      {"fpo-check --help", "help_fpo_check.txt"},
      {"blocking-set --help", "help_blocking_set.txt"},
      {"encode --help", "help_encode.txt"},
      {"generate --help", "help_generate.txt"},
      {"bench --help", "help_bench.txt"},
      {"prop9 --help", "help_prop9.txt"},
  };
  for (const auto& [args, golden] : cases) {
    RunResult res = run_cli(args);
    EXPECT_EQ(res.exit_code, 0) << args;
    std::ifstream in(golden_path(golden));
    ASSERT_TRUE(in.good()) << "missing golden file " << golden;
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(res.output, ss.str()) << "help text drifted for: " << args;
  }
}

}  // namespace
}  // namespace maxpareto
