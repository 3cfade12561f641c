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

#include <algorithm>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>

#include "maxpareto/errors.hpp"
#include "maxpareto/json_util.hpp"
#include "maxpareto/parallel.hpp"
#include "maxpareto/rng.hpp"

namespace maxpareto {

GeneratedInstance generate_allocation(const GenSpec& spec) {
  if (spec.agents < 1) throw DimensionError("agents must be >= 1");
  if (spec.items_multiplier != 1 && spec.items_multiplier != 2 &&
      spec.items_multiplier != 5 && spec.items_multiplier != 10)
    throw DimensionError("items multiplier must be one of 1, 2, 5, 10");

  const int na = spec.agents;
  const int ni = spec.items();
  GeneratedInstance gen;
  gen.spec = spec;
  gen.payoff = Mat<Rational>(na, ni);
  gen.welfare = Mat<Rational>(na, ni);

  Rng rng(spec.seed);
  for (int a = 0; a < na; ++a)
    for (int i = 0; i < ni; ++i) gen.payoff(a, i) = Rational(rng.uniform_int(1, ni));
  for (int a = 0; a < na; ++a)
    for (int i = 0; i < ni; ++i) gen.welfare(a, i) = Rational(rng.uniform_int(1, ni));

  gen.allocation.agents = na;
  gen.allocation.objects = ni;
  gen.allocation.preferences.resize(na);
  for (int a = 0; a < na; ++a) {
    std::vector<int> order(ni);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return gen.payoff(a, x) > gen.payoff(a, y);
    });
    gen.allocation.preferences[a] = order;
  }

  gen.payoff_graph.n1 = na;
  gen.payoff_graph.n2 = ni;
  for (int a = 0; a < na; ++a)
    for (int i = 0; i < ni; ++i) {
      gen.payoff_graph.edges.push_back({a, i, gen.payoff(a, i)});
      gen.welfare_objective.push_back(gen.welfare(a, i));
    }
  return gen;
}

MaxParetoInstance encode_generated(const GeneratedInstance& gen) {
  return encode_matching_instance(gen.payoff_graph, gen.welfare_objective);
}

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Optimal: return "Optimal";
    case RowStatus::Feasible: return "Feasible";
    case RowStatus::TimeLimit: return "TimeLimit";
    case RowStatus::NoIncumbent: return "NoIncumbent";
  }
  return "?";
}

namespace {

struct MethodPlan {
  std::string label;
  bool exact = false;
  Rational cap_num;  // numerator of the items multiplier for w_cap
  Rational cap_den;
};

MethodPlan parse_method(const std::string& label) {
  if (label == "exact") return {label, true, 0, 1};
  if (label == "heuristic:half") return {label, false, 1, 2};
  if (label == "heuristic:one") return {label, false, 1, 1};
  if (label == "heuristic:two") return {label, false, 2, 1};
  throw ParseError("unknown bench method: " + label);
}

std::string fmt_opt(const std::optional<Rational>& v) {
  return v ? to_string(*v) : std::string();
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& cfg, const std::string& csv_path) {
  std::vector<MethodPlan> methods;
  for (const auto& label : cfg.methods) methods.push_back(parse_method(label));
  if (methods.empty()) throw ParseError("no bench methods given");

  std::vector<GenSpec> specs;
  for (int agents : cfg.agents)
    for (int mult : cfg.mults)
      for (int s = 0; s < cfg.seeds_per_spec; ++s) {
        GenSpec spec;
        spec.agents = agents;
        spec.items_multiplier = mult;
        spec.seed = Rng::derive(Rng::derive(Rng::derive(cfg.base_seed, agents), mult), s);
        specs.push_back(spec);
      }

  struct Task {
    GenSpec spec;
    MethodPlan method;
  };
  std::vector<Task> tasks;
  for (const auto& spec : specs)
    for (const auto& method : methods) tasks.push_back({spec, method});

  std::function<BenchRow(int)> run_task = [&](int t) -> BenchRow {
    const Task& task = tasks[t];
    GeneratedInstance gen = generate_allocation(task.spec);
    MaxParetoInstance inst = encode_generated(gen);

    BenchRow row;
    row.spec = task.spec;
    row.method = task.method.label;

    if (task.method.exact) {
      ExactCaps caps = cfg.caps;
      caps.time_limit = cfg.row_limit;
      try {
        SolveReport rep = solve_exact(inst, cfg.mode, caps);
        row.lb = rep.lb;
        row.ub = rep.ub;
        row.ub_valid = rep.ub_valid;
        row.time = rep.wallclock;
        if (rep.timed_out)
          row.status = RowStatus::TimeLimit;
        else if (rep.incumbent_x)
          row.status = RowStatus::Optimal;
        else
          row.status = RowStatus::NoIncumbent;
      } catch (const CapExceeded&) {
        row.status = RowStatus::NoIncumbent;
      }
      return row;
    }

    HeuristicConfig hcfg;
    hcfg.w_cap = Rational(task.spec.items()) * task.method.cap_num / task.method.cap_den;
    if (hcfg.w_cap < 1) hcfg.w_cap = 1;
    row.w_cap = hcfg.w_cap;
    hcfg.starts = cfg.heuristic_starts;
    hcfg.local_steps = cfg.heuristic_local_steps;
    hcfg.time_limit = cfg.row_limit;
    hcfg.seed = task.spec.seed;
    hcfg.mode = cfg.mode;
    SolveReport rep = solve_heuristic(inst, hcfg);
    row.lb = rep.lb;
    row.ub = rep.ub;
    row.ub_valid = rep.ub_valid;
    row.time = rep.wallclock;
    if (rep.timed_out)
      row.status = RowStatus::TimeLimit;
    else if (rep.incumbent_x)
      row.status = RowStatus::Feasible;
    else
      row.status = RowStatus::NoIncumbent;
    return row;
  };

  SuiteResult result;
  result.rows = parallel_map<BenchRow>(static_cast<int>(tasks.size()), cfg.workers,
                                       run_task);
  result.instances = static_cast<int>(specs.size());

  // Sandwich tripwire and non-monotonicity bookkeeping per instance.
  const size_t nm = methods.size();
  for (size_t s = 0; s < specs.size(); ++s) {
    std::optional<Rational> exact_opt;
    for (size_t q = 0; q < nm; ++q) {
      const BenchRow& row = result.rows[s * nm + q];
      if (row.method == "exact" && row.status == RowStatus::Optimal)
        exact_opt = row.lb;
    }
    // Float mode gets a tolerance-sized slack so solver noise cannot trip it.
    Rational slack = cfg.mode.is_exact()
                         ? Rational(0)
                         : from_double(cfg.mode.opt_tol) *
                               (1 + (exact_opt ? abs(*exact_opt) : Rational(0)));
    std::map<std::string, std::optional<Rational>> hlb;
    for (size_t q = 0; q < nm; ++q) {
      const BenchRow& row = result.rows[s * nm + q];
      if (row.method != "exact") hlb[row.method] = row.lb;
      if (exact_opt && row.method != "exact" && row.lb && *row.lb > *exact_opt + slack) {
        std::ostringstream os;
        os << "suite tripwire: heuristic lb " << to_string(*row.lb)
           << " exceeds exact optimum " << to_string(*exact_opt) << " (agents="
           << row.spec.agents << ", items=" << row.spec.items()
           << ", seed=" << row.spec.seed << ", method=" << row.method << ")";
        throw Error(os.str());
      }
    }
    auto half = hlb.find("heuristic:half");
    auto one = hlb.find("heuristic:one");
    auto two = hlb.find("heuristic:two");
    if (half != hlb.end() && one != hlb.end() && two != hlb.end() &&
        half->second && one->second && two->second) {
      bool monotone = *half->second <= *one->second && *one->second <= *two->second;
      if (!monotone) ++result.nonmonotone_instances;
    }
  }

  // CSV, stable by construction (tasks are ordered by spec then method).
  std::ostringstream csv;
  csv << "agents,items,method,w_cap,lb,ub,ub_valid,status,time_ms,seed\n";
  for (const auto& row : result.rows) {
    csv << row.spec.agents << ',' << row.spec.items() << ',' << row.method << ','
        << (row.w_cap ? to_string(*row.w_cap) : std::string()) << ','
        << fmt_opt(row.lb) << ',' << fmt_opt(row.ub) << ','
        << (row.ub_valid ? "true" : "false") << ',' << to_string(row.status) << ','
        << row.time.count() << ',' << row.spec.seed << '\n';
  }
  result.csv = csv.str();
  if (!csv_path.empty()) write_text_file(csv_path, result.csv);

  // Aligned text table with a *best* marker on each instance's best lb.
  std::ostringstream table;
  table << "agents items seed                 | method          w_cap   lb          "
           "ub          status      time_ms\n";
  for (size_t s = 0; s < specs.size(); ++s) {
    std::optional<Rational> best;
    for (size_t q = 0; q < nm; ++q) {
      const auto& lb = result.rows[s * nm + q].lb;
      if (lb && (!best || *lb > *best)) best = *lb;
    }
    for (size_t q = 0; q < nm; ++q) {
      const BenchRow& row = result.rows[s * nm + q];
      std::ostringstream lbs;
      lbs << fmt_opt(row.lb);
      if (row.lb && best && *row.lb == *best) lbs << " *best*";
      table << std::left << std::setw(6) << row.spec.agents << std::setw(6)
            << row.spec.items() << std::setw(21) << row.spec.seed << "| "
            << std::setw(16) << row.method << std::setw(8)
            << (row.w_cap ? to_string(*row.w_cap) : std::string()) << std::setw(12)
            << lbs.str() << std::setw(12) << fmt_opt(row.ub) << std::setw(12)
            << to_string(row.status) << row.time.count() << '\n';
    }
  }
  table << "instances=" << result.instances
        << " nonmonotone_heuristic_instances=" << result.nonmonotone_instances
        << "\n";
  result.table = table.str();
  return result;
}

}  // namespace maxpareto
