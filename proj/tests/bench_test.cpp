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

#include "maxpareto/bench.hpp"

#include <gtest/gtest.h>

#include <regex>
#include <set>

#include "maxpareto/errors.hpp"
#include "maxpareto/rng.hpp"

namespace maxpareto {
namespace {

TEST(Generator, ShapesAndRanges) {
  GenSpec spec;
  spec.agents = 10;
  spec.items_multiplier = 1;
  spec.seed = 42;
  GeneratedInstance gen = generate_allocation(spec);
  EXPECT_EQ(gen.payoff.rows(), 10);
  EXPECT_EQ(gen.payoff.cols(), 10);
  EXPECT_EQ(gen.welfare.rows(), 10);
  for (int a = 0; a < 10; ++a)
    for (int i = 0; i < 10; ++i) {
      EXPECT_GE(gen.payoff(a, i), Rational(1));
      EXPECT_LE(gen.payoff(a, i), Rational(10));
      EXPECT_GE(gen.welfare(a, i), Rational(1));
      EXPECT_LE(gen.welfare(a, i), Rational(10));
    }
  // Complete admissibility; preferences ordered by payoff, ties toward the
  // lower item index.
  for (int a = 0; a < 10; ++a) {
    EXPECT_EQ(gen.allocation.preferences[a].size(), 10u);
    for (size_t r = 0; r + 1 < 10; ++r) {
      int x = gen.allocation.preferences[a][r];
      int y = gen.allocation.preferences[a][r + 1];
      EXPECT_TRUE(gen.payoff(a, x) > gen.payoff(a, y) ||
                  (gen.payoff(a, x) == gen.payoff(a, y) && x < y));
    }
  }
}

TEST(Generator, DeterministicAcrossCalls) {
  GenSpec spec;
  spec.agents = 2;
  spec.items_multiplier = 1;
  spec.seed = 7;
  GeneratedInstance a = generate_allocation(spec);
  GeneratedInstance b = generate_allocation(spec);
  EXPECT_TRUE(a.payoff == b.payoff);
  EXPECT_TRUE(a.welfare == b.welfare);
  EXPECT_EQ(a.allocation.preferences, b.allocation.preferences);
}

TEST(Generator, UniformityChiSquare) {
  // 10^5 draws over {1..10}: chi-square against uniform with 9 dof stays
  // far below an extreme cutoff.
  GenSpec spec;
  spec.agents = 10;
  spec.items_multiplier = 1;
  std::vector<long> counts(10, 0);
  long total = 0;
  for (uint64_t s = 0; s < 500; ++s) {
    spec.seed = 1000 + s;
    GeneratedInstance gen = generate_allocation(spec);
    for (int a = 0; a < 10; ++a)
      for (int i = 0; i < 10; ++i) {
        ++counts[static_cast<int>(gen.payoff(a, i).convert_to<int64_t>()) - 1];
        ++counts[static_cast<int>(gen.welfare(a, i).convert_to<int64_t>()) - 1];
        total += 2;
      }
  }
  double expected = total / 10.0;
  double chi2 = 0;
  for (long c : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, 40.0) << "chi-square " << chi2;
}

TEST(Suite, SmallGridRunsAndChecks) {
  SuiteConfig cfg;
  cfg.agents = {3, 4};
  cfg.mults = {1};
  cfg.seeds_per_spec = 2;
  cfg.base_seed = 5;
  cfg.heuristic_starts = 3;
  cfg.heuristic_local_steps = 3;
  SuiteResult result = run_suite(cfg);
  EXPECT_EQ(result.rows.size(), 2u * 2u * 4u);
  EXPECT_EQ(result.instances, 4);
  for (const auto& row : result.rows) {
    if (row.method == "exact") {
      EXPECT_EQ(row.status, RowStatus::Optimal);
      ASSERT_TRUE(row.lb && row.ub);
      EXPECT_EQ(*row.lb, *row.ub);
      EXPECT_TRUE(row.ub_valid);
    } else {
      EXPECT_EQ(row.status, RowStatus::Feasible);
      EXPECT_TRUE(row.lb.has_value());
      EXPECT_FALSE(row.ub_valid);
    }
  }
  EXPECT_NE(result.table.find("*best*"), std::string::npos);
}

TEST(Suite, CsvDeterministicModuloTime) {
  SuiteConfig cfg;
  cfg.agents = {3};
  cfg.mults = {1, 2};
  cfg.seeds_per_spec = 2;
  cfg.base_seed = 77;
  cfg.heuristic_starts = 2;
  cfg.heuristic_local_steps = 2;
  auto mask_time = [](std::string csv) {
    // The time_ms column is measured wallclock; blank it before comparing.
    std::regex row(R"(^(([^,]*,){8})[0-9]+,)", std::regex::multiline);
    return std::regex_replace(csv, row, "$1T,");
  };
  SuiteResult a = run_suite(cfg);
  SuiteResult b = run_suite(cfg);
  cfg.workers = 3;
  SuiteResult c = run_suite(cfg);
  EXPECT_EQ(mask_time(a.csv), mask_time(b.csv));
  EXPECT_EQ(mask_time(a.csv), mask_time(c.csv));
  EXPECT_NE(a.csv.find("agents,items,method,w_cap,lb,ub,ub_valid,status,time_ms,seed"),
            std::string::npos);
}

TEST(Suite, TimeLimitRowsFlagged) {
  SuiteConfig cfg;
  cfg.agents = {6};
  cfg.mults = {2};
  cfg.seeds_per_spec = 1;
  cfg.base_seed = 3;
  cfg.methods = {"heuristic:one"};
  cfg.heuristic_starts = 500;  // cannot finish within the limit
  cfg.heuristic_local_steps = 50;
  cfg.row_limit = std::chrono::milliseconds(60);
  SuiteResult result = run_suite(cfg);
  ASSERT_EQ(result.rows.size(), 1u);
  EXPECT_EQ(result.rows[0].status, RowStatus::TimeLimit);
}

TEST(Suite, RejectsUnknownMethod) {
  SuiteConfig cfg;
  cfg.methods = {"heuristic:zero"};
  EXPECT_THROW(run_suite(cfg), ParseError);
}

}  // namespace
}  // namespace maxpareto
