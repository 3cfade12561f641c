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
// Command-line front end. Every subcommand is a thin adapter over the
// library; no numerical logic lives here.

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "maxpareto/bench.hpp"
#include "maxpareto/errors.hpp"
#include "maxpareto/json_util.hpp"
#include "maxpareto/matching.hpp"
#include "maxpareto/model.hpp"
#include "maxpareto/pareto.hpp"
#include "maxpareto/rng.hpp"
#include "maxpareto/solver.hpp"

namespace {

using namespace maxpareto;

struct CommonOpts {
  std::string mode = "rational";
  uint64_t seed = 0;
  std::string json_out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--mode", opts.mode, "Arithmetic: float or rational")
      ->check(CLI::IsMember({"float", "rational"}))
      ->capture_default_str();
  cmd->add_option("--seed", opts.seed, "Random seed")->capture_default_str();
  cmd->add_option("--json-out", opts.json_out, "Write the result as JSON to PATH");
}

NumericMode mode_of(const CommonOpts& opts) {
  return opts.mode == "float" ? NumericMode::floating() : NumericMode::exact();
}

void maybe_json(const CommonOpts& opts, const std::string& payload) {
  if (!opts.json_out.empty()) write_text_file(opts.json_out, payload);
}

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
  auto q = parse_rational(text);
  if (!q) throw ParseError("flag " + flag + ": cannot parse '" + text + "'");
  return *q;
}

std::vector<Rational> read_point(const std::string& inline_text,
                                 const std::string& file) {
  std::string text = inline_text;
  if (!file.empty()) text = read_text_file(file);
  auto v = parse_rational_vector(text);
  if (!v) throw ParseError("cannot parse point vector");
  return *v;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

// ------------------------- subcommand bodies -------------------------

int cmd_solve(const CommonOpts& common, const std::string& instance_path,
              const std::string& w_cap, int starts, int local_steps,
              const std::string& step_factor, double limit_s, int workers) {
  MaxParetoInstance inst = load_instance(instance_path);
  HeuristicConfig cfg;
  cfg.w_cap = parse_rational_flag(w_cap, "--w-cap");
  cfg.starts = starts;
  cfg.local_steps = local_steps;
  cfg.step_factor = parse_rational_flag(step_factor, "--step-factor");
  cfg.time_limit = std::chrono::milliseconds(static_cast<long>(limit_s * 1000));
  cfg.seed = common.seed;
  cfg.mode = mode_of(common);
  cfg.workers = workers;
  SolveReport rep = solve_heuristic(inst, cfg);
  maybe_json(common, report_to_json(rep));
  if (!rep.incumbent_x) {
    std::cout << "no incumbent found\n";
    return 1;
  }
  std::cout << "lb " << to_string(*rep.lb) << (rep.timed_out ? " (time limit)" : "")
            << "\n";
  std::cout << "x";
  for (const auto& v : *rep.incumbent_x) std::cout << ' ' << to_string(v);
  std::cout << "\npo_verified " << (rep.po_verified ? "true" : "false")
            << "\niterations " << rep.iterations << "\ntime_ms "
            << rep.wallclock.count() << "\n";
  return 0;
}

int cmd_verify(const CommonOpts& common, const std::string& instance_path,
               const std::string& point, const std::string& point_file) {
  MaxParetoInstance inst = load_instance(instance_path);
  std::vector<Rational> x = read_point(point, point_file);
  DominanceResult res = verify_pareto(inst, x, mode_of(common));
  nlohmann::ordered_json j;
  j["dominated"] = res.dominated;
  if (res.dominated) {
    j["witness_x"] = rational_vector_to_json(res.witness_x);
    j["witness_payoff"] = rational_vector_to_json(res.witness_payoff);
  }
  maybe_json(common, j.dump(2) + "\n");
  if (!res.dominated) {
    std::cout << "NotDominated\n";
    return 0;
  }
  std::cout << "Dominated; witness payoff";
  for (const auto& v : res.witness_payoff) std::cout << ' ' << to_string(v);
  std::cout << "\nwitness x";
  for (const auto& v : res.witness_x) std::cout << ' ' << to_string(v);
  std::cout << "\n";
  return 1;
}

int cmd_certify(const CommonOpts& common, const std::string& instance_path,
                const std::string& point, const std::string& point_file,
                const std::string& w_cap) {
  MaxParetoInstance inst = load_instance(instance_path);
  std::vector<Rational> x = read_point(point, point_file);
  std::optional<Rational> cap;
  if (!w_cap.empty()) cap = parse_rational_flag(w_cap, "--w-cap");
  auto cert = find_support_certificate(inst, x, cap, mode_of(common));
  if (!cert) {
    std::cout << (cap ? "no certificate under the weight cap (inconclusive)\n"
                      : "no certificate: point is not Pareto-optimal\n");
    return 1;
  }
  maybe_json(common, certificate_to_json(*cert));
  std::cout << "w";
  for (const auto& v : cert->w) std::cout << ' ' << to_string(v);
  std::cout << "\neta";
  for (const auto& v : cert->eta) std::cout << ' ' << to_string(v);
  std::cout << "\n";
  return 0;
}

int cmd_oracle(const CommonOpts& common, const std::string& instance_path,
               const std::string& graph_path, const std::string& objective_file,
               const std::string& alloc_path, bool use_welfare, int max_k,
               int max_m, long node_budget) {
  MaxParetoInstance inst;
  if (!instance_path.empty()) {
    inst = load_instance(instance_path);
  } else if (!graph_path.empty()) {
    BipartiteInstance g = load_graph(graph_path);
    std::vector<Rational> c;
    if (!objective_file.empty()) {
      nlohmann::json j = load_json_file(objective_file);
      c = json_to_rational_vector(j);
    }
    inst = encode_matching_instance(g, c);
  } else if (!alloc_path.empty()) {
    AllocationInstance a = load_allocation(alloc_path);
    if (use_welfare) {
      auto welfare = load_allocation_welfare(alloc_path);
      if (!welfare) throw ParseError("allocation file has no welfare matrix");
      BipartiteInstance g = make_preference_graph(a);
      std::vector<Rational> c;
      for (const auto& e : g.edges) c.push_back((*welfare)(e.i, e.j));
      inst = encode_matching_instance(g, c);
    } else {
      inst = encode_allocation(a);
    }
  } else {
    throw ParseError("oracle needs --instance, --graph, or --alloc");
  }
  ExactCaps caps;
  caps.max_k = max_k;
  caps.max_m = max_m;
  caps.node_budget = static_cast<size_t>(node_budget);
  SolveReport rep = solve_exact(inst, mode_of(common), caps);
  maybe_json(common, report_to_json(rep));
  if (!rep.incumbent_x) {
    std::cout << (rep.timed_out ? "time limit reached, no incumbent\n"
                                : "no Pareto-optimal point found\n");
    return 1;
  }
  std::cout << "optimum " << to_string(*rep.lb) << "\nx";
  for (const auto& v : *rep.incumbent_x) std::cout << ' ' << to_string(v);
  std::cout << "\ntime_ms " << rep.wallclock.count() << "\n";
  return 0;
}

int cmd_fpo_check(const CommonOpts& common, const std::string& graph_path,
                  const std::string& matching_text) {
  BipartiteInstance g = load_graph(graph_path);
  Matching m = parse_matching(matching_text);
  bool fpo = is_fpo_matching(g, m, mode_of(common));
  nlohmann::ordered_json j;
  j["fpo"] = fpo;
  maybe_json(common, j.dump(2) + "\n");
  std::cout << (fpo ? "fPO\n" : "not fPO\n");
  return fpo ? 0 : 1;
}

int cmd_blocking_set(const CommonOpts& common, const std::string& graph_path,
                     const std::string& matching_text, const std::string& edge) {
  BipartiteInstance g = load_graph(graph_path);
  Matching m = parse_matching(matching_text);
  auto colon = edge.find(':');
  if (colon == std::string::npos) throw ParseError("--edge uses the form i:j");
  int i = std::stoi(edge.substr(0, colon));
  int j = std::stoi(edge.substr(colon + 1));
  BlockingSet b = find_blocking_set(g, m, i, j);
  nlohmann::ordered_json out;
  out["members"] = b.members;
  maybe_json(common, out.dump(2) + "\n");
  std::cout << "blocking set";
  for (int v : b.members) std::cout << ' ' << v;
  std::cout << "\n";
  return 0;
}

int cmd_encode(const CommonOpts& common, const std::string& alloc_path,
               bool use_welfare, const std::string& out_path) {
  AllocationInstance a = load_allocation(alloc_path);
  MaxParetoInstance inst;
  if (use_welfare) {
    auto welfare = load_allocation_welfare(alloc_path);
    if (!welfare) throw ParseError("allocation file has no welfare matrix");
    BipartiteInstance g = make_preference_graph(a);
    std::vector<Rational> c;
    for (const auto& e : g.edges) c.push_back((*welfare)(e.i, e.j));
    inst = encode_allocation(a, c);
  } else {
    inst = encode_allocation(a);
  }
  save_instance(inst, out_path);
  nlohmann::ordered_json j;
  j["written"] = out_path;
  j["threshold"] = a.required ? static_cast<int>(a.required->size()) : 0;
  maybe_json(common, j.dump(2) + "\n");
  std::cout << "wrote " << out_path << "\n";
  if (a.required)
    std::cout << "decision threshold " << a.required->size() << "\n";
  return 0;
}

int cmd_generate(const CommonOpts& common, int agents, int mult,
                 const std::string& out_prefix) {
  GenSpec spec;
  spec.agents = agents;
  spec.items_multiplier = mult;
  spec.seed = common.seed;
  GeneratedInstance gen = generate_allocation(spec);
  save_allocation_with_welfare(gen.allocation, gen.welfare, out_prefix + ".alj");
  save_graph(gen.payoff_graph, out_prefix + ".bgj");
  save_instance(encode_generated(gen), out_prefix + ".mpj");
  write_text_file(out_prefix + ".objective.json",
                  rational_vector_to_json(gen.welfare_objective).dump() + "\n");
  nlohmann::ordered_json j;
  j["written"] = {out_prefix + ".alj", out_prefix + ".bgj", out_prefix + ".mpj",
                  out_prefix + ".objective.json"};
  maybe_json(common, j.dump(2) + "\n");
  std::cout << "wrote " << out_prefix << ".{alj,bgj,mpj,objective.json}\n";
  return 0;
}

int cmd_bench(const CommonOpts& common, const std::string& agents,
              const std::string& mults, int seeds, const std::string& methods,
              double limit_s, const std::string& out_csv, int starts,
              int local_steps, int workers) {
  SuiteConfig cfg;
  cfg.agents = parse_int_list(agents);
  cfg.mults = parse_int_list(mults);
  cfg.seeds_per_spec = seeds;
  cfg.base_seed = common.seed;
  {
    cfg.methods.clear();
    std::stringstream ss(methods);
    std::string item;
    while (std::getline(ss, item, ',')) cfg.methods.push_back(item);
  }
  cfg.row_limit = std::chrono::milliseconds(static_cast<long>(limit_s * 1000));
  cfg.mode = mode_of(common);
  cfg.workers = workers;
  cfg.heuristic_starts = starts;
  cfg.heuristic_local_steps = local_steps;
  SuiteResult result = run_suite(cfg, out_csv);
  std::cout << result.table;
  if (!out_csv.empty()) std::cout << "wrote " << out_csv << "\n";
  nlohmann::ordered_json j;
  j["instances"] = result.instances;
  j["nonmonotone_instances"] = result.nonmonotone_instances;
  j["csv"] = out_csv;
  maybe_json(common, j.dump(2) + "\n");
  return 0;
}

int cmd_prop9(const CommonOpts& common, int n) {
  BipartiteInstance g = make_diagonal_chain_instance(n);
  std::vector<std::pair<int, int>> diag;
  for (int i = 0; i < n; ++i) diag.emplace_back(i, i);
  Matching m = Matching::from_pairs(std::move(diag));
  MaxParetoInstance inst = encode_matching_instance(g);
  std::vector<Rational> x = matching_indicator(g, m);
  auto cert = find_support_certificate(inst, x, std::nullopt, mode_of(common));
  if (!cert) {
    std::cout << "no certificate found\n";
    return 1;
  }
  Rational ratio = cert->w.front() / cert->w.back();
  Rational bound(1);
  for (int i = 0; i < n - 1; ++i) bound *= n - 1;
  maybe_json(common, certificate_to_json(*cert));
  std::cout << "w";
  for (const auto& v : cert->w) std::cout << ' ' << to_string(v);
  std::cout << "\nratio w1/wn = " << to_string(ratio)
            << "\nlower bound (n-1)^(n-1) = " << to_string(bound) << "\n";
  return ratio >= bound ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-Pareto toolkit: optimize a linear objective over the "
               "Pareto-optimal solutions of a bounded polyhedron"};
  app.name("maxpareto");
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Bounded-weight heuristic solve");
  CommonOpts solve_common;
  std::string solve_instance, solve_wcap = "8", solve_step = "2";
  int solve_starts = 16, solve_steps = 12, solve_workers = 1;
  double solve_limit = 60.0;
  solve->add_option("--instance", solve_instance, "Instance file (.mpj)")->required();
  solve->add_option("--w-cap", solve_wcap, "Weight bound (rational)")
      ->capture_default_str();
  solve->add_option("--starts", solve_starts, "Sampled weight starts")
      ->capture_default_str();
  solve->add_option("--local-steps", solve_steps, "Accepted local-search steps")
      ->capture_default_str();
  solve->add_option("--step-factor", solve_step, "Coordinate step factor")
      ->capture_default_str();
  solve->add_option("--limit", solve_limit, "Time limit in seconds")
      ->capture_default_str();
  solve->add_option("--workers", solve_workers, "Worker threads")
      ->capture_default_str();
  add_common(solve, solve_common);

  // verify
  auto* verify = app.add_subcommand("verify", "Pareto-optimality check for a point");
  CommonOpts verify_common;
  std::string verify_instance, verify_point, verify_point_file;
  verify->add_option("--instance", verify_instance, "Instance file (.mpj)")
      ->required();
  verify->add_option("--point", verify_point,
                     "Point as comma-separated rationals (1/3 allowed)");
  verify->add_option("--point-file", verify_point_file, "File holding the point");
  add_common(verify, verify_common);

  // certify
  auto* certify =
      app.add_subcommand("certify", "Supporting-weight certificate for a point");
  CommonOpts certify_common;
  std::string certify_instance, certify_point, certify_point_file, certify_wcap;
  certify->add_option("--instance", certify_instance, "Instance file (.mpj)")
      ->required();
  certify->add_option("--point", certify_point,
                      "Point as comma-separated rationals (1/3 allowed)");
  certify->add_option("--point-file", certify_point_file, "File holding the point");
  certify->add_option("--w-cap", certify_wcap,
                      "Weight cap (omit for an unrestricted search)");
  add_common(certify, certify_common);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact optimum over the Pareto set");
  CommonOpts oracle_common;
  std::string oracle_instance, oracle_graph, oracle_objective, oracle_alloc;
  bool oracle_welfare = false;
  int oracle_max_k = 12, oracle_max_m = 24;
  long oracle_budget = 4'000'000;
  oracle->add_option("--instance", oracle_instance,
                     "Instance file (.mpj); solved by vertex enumeration");
  oracle->add_option("--graph", oracle_graph,
                     "Bipartite graph (.bgj); solved by matching enumeration");
  oracle->add_option("--objective-file", oracle_objective,
                     "JSON array: per-edge objective for --graph");
  oracle->add_option("--alloc", oracle_alloc, "Allocation file (.alj)");
  oracle->add_flag("--use-welfare", oracle_welfare,
                   "Objective from the allocation file's welfare matrix");
  oracle->add_option("--max-k", oracle_max_k, "Vertex-enumeration variable cap")
      ->capture_default_str();
  oracle->add_option("--max-m", oracle_max_m, "Vertex-enumeration row cap")
      ->capture_default_str();
  oracle->add_option("--node-budget", oracle_budget, "Matching-enumeration budget")
      ->capture_default_str();
  add_common(oracle, oracle_common);

  // fpo-check
  auto* fpo = app.add_subcommand("fpo-check",
                                 "Fractional Pareto-optimality of a matching");
  CommonOpts fpo_common;
  std::string fpo_graph, fpo_matching;
  fpo->add_option("--graph", fpo_graph, "Bipartite graph (.bgj)")->required();
  fpo->add_option("--matching", fpo_matching, "Matching as i:j pairs, e.g. 0:1,2:0")
      ->required();
  add_common(fpo, fpo_common);

  // blocking-set
  auto* blocking = app.add_subcommand(
      "blocking-set", "Constructive blocking set for an improving edge");
  CommonOpts blocking_common;
  std::string blocking_graph, blocking_matching, blocking_edge;
  blocking->add_option("--graph", blocking_graph, "Bipartite graph (.bgj)")
      ->required();
  blocking->add_option("--matching", blocking_matching, "Matching as i:j pairs")
      ->required();
  blocking->add_option("--edge", blocking_edge, "Improving edge i:j")->required();
  add_common(blocking, blocking_common);

  // encode
  auto* encode = app.add_subcommand(
      "encode", "Encode an allocation instance as a Max-Pareto instance");
  CommonOpts encode_common;
  std::string encode_alloc, encode_out;
  bool encode_welfare = false;
  encode->add_option("--alloc", encode_alloc, "Allocation file (.alj)")->required();
  encode->add_flag("--use-welfare", encode_welfare,
                   "Objective from the file's welfare matrix instead of Q");
  encode->add_option("--out", encode_out, "Output instance path (.mpj)")->required();
  add_common(encode, encode_common);

  // generate
  auto* generate =
      app.add_subcommand("generate", "Sample a random welfare/payoff instance");
  CommonOpts generate_common;
  int generate_agents = 4, generate_mult = 1;
  std::string generate_prefix;
  generate->add_option("--agents", generate_agents, "Agent count")
      ->capture_default_str();
  generate->add_option("--mult", generate_mult, "Items per agent (1, 2, 5, 10)")
      ->capture_default_str();
  generate->add_option("--out-prefix", generate_prefix, "Output path prefix")
      ->required();
  add_common(generate, generate_common);

  // bench
  auto* bench = app.add_subcommand("bench", "Benchmark suite over a spec grid");
  CommonOpts bench_common;
  std::string bench_agents = "4,6,8,10", bench_mults = "1,2";
  std::string bench_methods = "heuristic:half,heuristic:one,heuristic:two,exact";
  std::string bench_out;
  int bench_seeds = 3, bench_starts = 6, bench_steps = 8, bench_workers = 1;
  double bench_limit = 60.0;
  bench->add_option("--agents", bench_agents, "Agent counts, comma-separated")
      ->capture_default_str();
  bench->add_option("--mult", bench_mults, "Item multipliers, comma-separated")
      ->capture_default_str();
  bench->add_option("--seeds", bench_seeds, "Seeds per grid point")
      ->capture_default_str();
  bench->add_option("--methods", bench_methods, "Methods, comma-separated")
      ->capture_default_str();
  bench->add_option("--limit", bench_limit, "Per-row time limit in seconds")
      ->capture_default_str();
  bench->add_option("--out", bench_out, "CSV output path");
  bench->add_option("--starts", bench_starts, "Heuristic starts per row")
      ->capture_default_str();
  bench->add_option("--local-steps", bench_steps, "Heuristic local steps")
      ->capture_default_str();
  bench->add_option("--workers", bench_workers, "Worker threads")
      ->capture_default_str();
  add_common(bench, bench_common);

  // prop9
  auto* prop9 = app.add_subcommand(
      "prop9", "Minimal certificate ratio on the diagonal-chain family");
  CommonOpts prop9_common;
  int prop9_n = 3;
  prop9->add_option("--n", prop9_n, "Side size (n >= 2)")->capture_default_str();
  add_common(prop9, prop9_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*solve)
      return cmd_solve(solve_common, solve_instance, solve_wcap, solve_starts,
                       solve_steps, solve_step, solve_limit, solve_workers);
    if (*verify)
      return cmd_verify(verify_common, verify_instance, verify_point,
                        verify_point_file);
    if (*certify)
      return cmd_certify(certify_common, certify_instance, certify_point,
                         certify_point_file, certify_wcap);
    if (*oracle)
      return cmd_oracle(oracle_common, oracle_instance, oracle_graph,
                        oracle_objective, oracle_alloc, oracle_welfare,
                        oracle_max_k, oracle_max_m, oracle_budget);
    if (*fpo) return cmd_fpo_check(fpo_common, fpo_graph, fpo_matching);
    if (*blocking)
      return cmd_blocking_set(blocking_common, blocking_graph, blocking_matching,
                              blocking_edge);
    if (*encode)
      return cmd_encode(encode_common, encode_alloc, encode_welfare, encode_out);
    if (*generate)
      return cmd_generate(generate_common, generate_agents, generate_mult,
                          generate_prefix);
    if (*bench)
      return cmd_bench(bench_common, bench_agents, bench_mults, bench_seeds,
                       bench_methods, bench_limit, bench_out, bench_starts,
                       bench_steps, bench_workers);
    if (*prop9) return cmd_prop9(prop9_common, prop9_n);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
