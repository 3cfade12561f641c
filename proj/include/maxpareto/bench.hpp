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

#ifndef MAXPARETO_BENCH_HPP
#define MAXPARETO_BENCH_HPP

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "maxpareto/matching.hpp"
#include "maxpareto/model.hpp"
#include "maxpareto/solver.hpp"

namespace maxpareto {

/// One generated welfare-maximization instance: `agents` agents, an item
/// count of `items_multiplier` times that, payoffs and welfare drawn
/// uniformly from {1, ..., items}.
struct GenSpec {
  int agents = 4;
  int items_multiplier = 1;  // 1, 2, 5 or 10
  uint64_t seed = 0;

  int items() const { return agents * items_multiplier; }
};

struct GeneratedInstance {
  GenSpec spec;
  Mat<Rational> payoff;   // agents x items
  Mat<Rational> welfare;  // agents x items
  AllocationInstance allocation;    // complete admissibility, payoff order
  BipartiteInstance payoff_graph;   // edge weight = payoff
  std::vector<Rational> welfare_objective;  // per edge of payoff_graph
};

/// Deterministic in the seed: payoff matrix first, then welfare, both
/// row-major. Preferences rank items by payoff, ties toward the lower item
/// index.
GeneratedInstance generate_allocation(const GenSpec& spec);

/// Max-Pareto instance of the generated problem: matching polytope over the
/// payoff graph, welfare objective.
MaxParetoInstance encode_generated(const GeneratedInstance& gen);

enum class RowStatus { Optimal, Feasible, TimeLimit, NoIncumbent };
std::string to_string(RowStatus s);

struct BenchRow {
  GenSpec spec;
  std::string method;
  std::optional<Rational> w_cap;  // absent for the exact oracle
  std::optional<Rational> lb;
  std::optional<Rational> ub;
  bool ub_valid = false;
  RowStatus status = RowStatus::NoIncumbent;
  std::chrono::milliseconds time{0};
};

/// Known method labels: heuristic:half, heuristic:one, heuristic:two
/// (weight caps items/2, items, 2*items) and exact.
struct SuiteConfig {
  std::vector<int> agents{4, 6, 8, 10};
  std::vector<int> mults{1, 2};
  int seeds_per_spec = 3;
  uint64_t base_seed = 1;
  std::vector<std::string> methods{"heuristic:half", "heuristic:one",
                                   "heuristic:two", "exact"};
  std::chrono::milliseconds row_limit{60000};
  NumericMode mode = NumericMode::exact();
  int workers = 1;
  int heuristic_starts = 6;
  int heuristic_local_steps = 8;
  ExactCaps caps;
};

struct SuiteResult {
  std::vector<BenchRow> rows;
  std::string csv;
  std::string table;
  int instances = 0;
  int nonmonotone_instances = 0;  // heuristic lb not monotone in w_cap
};

/// Runs every (instance, method) row, checks the sandwich tripwire
/// (exact optimum, when available, is an upper bound for every heuristic
/// lb; violations abort with a diagnostic), and reports the w_cap
/// non-monotonicity frequency. Row order is stable for any worker count.
/// Writes the CSV to `csv_path` when nonempty.
SuiteResult run_suite(const SuiteConfig& cfg, const std::string& csv_path = "");

}  // namespace maxpareto

#endif  // MAXPARETO_BENCH_HPP
