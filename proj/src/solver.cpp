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

#include "maxpareto/solver.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "maxpareto/errors.hpp"
#include "maxpareto/json_util.hpp"
#include "maxpareto/lp.hpp"
#include "maxpareto/parallel.hpp"
#include "maxpareto/rng.hpp"

namespace maxpareto {

namespace {

using Clock = std::chrono::steady_clock;

Rational clamp_weight(const Rational& w, const Rational& cap) {
  if (w < 1) return Rational(1);
  if (w > cap) return cap;
  return w;
}

}  // namespace

WeightEvaluation evaluate_weight(const MaxParetoInstance& inst,
                                 const std::vector<Rational>& w,
                                 const NumericMode& mode) {
  check_dimensions(inst);
  if (static_cast<int>(w.size()) != inst.num_agents())
    throw DimensionError("weight vector length must equal the agent count");
  for (const auto& v : w)
    if (v <= 0) throw PreconditionViolated("weights must be strictly positive");

  LpProblem p = make_polytope_lp(inst);
  p.objective = inst.payoff_map.mul_transposed(w);
  LexStages stages = solve_lexicographic_stages(p, inst.objective, mode);

  WeightEvaluation out;
  out.x = stages.stage2.x;
  out.value = dot(inst.objective, out.x);

  // Certificates require weights >= 1; the support system is jointly
  // homogeneous in (w, eta), so scale both sides up as needed.
  Rational scale(1);
  for (const auto& v : w)
    if (v < 1 && 1 / v > scale) scale = 1 / v;
  out.certificate.w = w;
  out.certificate.eta = stages.stage1.duals;
  for (auto& v : out.certificate.w) v *= scale;
  for (auto& v : out.certificate.eta) v *= scale;
  return out;
}

namespace {

struct StartOutcome {
  bool has = false;
  std::vector<Rational> x;
  Rational value;
  SupportCertificate cert;
  long evaluations = 0;
  bool timed_out = false;
};

}  // namespace

SolveReport solve_heuristic(const MaxParetoInstance& inst,
                            const HeuristicConfig& cfg) {
  check_dimensions(inst);
  if (cfg.w_cap < 1) throw PreconditionViolated("w_cap must be at least 1");
  if (cfg.starts < 1 || cfg.local_steps < 0)
    throw PreconditionViolated("heuristic counts must be positive");
  if (cfg.step_factor <= 1)
    throw PreconditionViolated("step_factor must exceed 1");

  const auto t0 = Clock::now();
  auto out_of_time = [&]() {
    return Clock::now() - t0 > cfg.time_limit;
  };

  const int n = inst.num_agents();
  std::optional<std::vector<Rational>> aligned =
      detect_aligned_interests(inst, cfg.mode);

  // Start 0 runs the aligned-interests witness when present (no local
  // search: its LP optimum is already globally optimal); sampled starts
  // follow.
  const int total_starts = cfg.starts + (aligned ? 1 : 0);
  std::function<StartOutcome(int)> run_start = [&](int s) -> StartOutcome {
    StartOutcome res;
    if (out_of_time()) {
      res.timed_out = true;
      return res;
    }
    const bool is_aligned_start = aligned && s == 0;
    std::vector<Rational> w;
    if (is_aligned_start) {
      w = *aligned;
    } else {
      Rng rng(Rng::derive(cfg.seed, static_cast<uint64_t>(s)));
      w.resize(n);
      for (int r = 0; r < n; ++r)
        w[r] = rng.log_uniform_weight(to_double(cfg.w_cap));
    }
    try {
      WeightEvaluation eval = evaluate_weight(inst, w, cfg.mode);
      res.has = true;
      res.x = eval.x;
      res.value = eval.value;
      res.cert = eval.certificate;
      ++res.evaluations;
    } catch (const NumericalBreakdown&) {
      return res;
    }
    if (is_aligned_start) return res;

    int accepted = 0;
    bool improved = true;
    while (improved && accepted < cfg.local_steps) {
      improved = false;
      for (int r = 0; r < n && !improved; ++r) {
        for (int dir = 0; dir < 2 && !improved; ++dir) {
          if (out_of_time()) {
            res.timed_out = true;
            return res;
          }
          std::vector<Rational> cand = w;
          Rational moved = dir == 0 ? Rational(cand[r] * cfg.step_factor)
                                    : Rational(cand[r] / cfg.step_factor);
          cand[r] = clamp_weight(moved, cfg.w_cap);
          if (cand[r] == w[r]) continue;
          try {
            WeightEvaluation eval = evaluate_weight(inst, cand, cfg.mode);
            ++res.evaluations;
            if (eval.value > res.value) {
              w = cand;
              res.x = eval.x;
              res.value = eval.value;
              res.cert = eval.certificate;
              ++accepted;
              improved = true;
            }
          } catch (const NumericalBreakdown&) {
          }
        }
      }
    }
    return res;
  };

  std::vector<StartOutcome> outcomes =
      parallel_map<StartOutcome>(total_starts, cfg.workers, run_start);

  SolveReport report;
  for (const auto& oc : outcomes) {
    report.iterations += oc.evaluations;
    report.timed_out = report.timed_out || oc.timed_out;
  }
  // Deterministic reduction: best value, ties to the lowest start index.
  int best = -1;
  for (int s = 0; s < total_starts; ++s) {
    if (!outcomes[s].has) continue;
    if (best < 0 || outcomes[s].value > outcomes[best].value) best = s;
  }
  // Emission gate: the incumbent must re-pass the Pareto check and carry a
  // valid certificate; candidates that fail (a float-mode possibility) are
  // discarded in favor of the next best.
  std::vector<int> order;
  for (int s = 0; s < total_starts; ++s)
    if (outcomes[s].has) order.push_back(s);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (outcomes[a].value != outcomes[b].value)
      return outcomes[a].value > outcomes[b].value;
    return a < b;
  });
  for (int s : order) {
    const StartOutcome& oc = outcomes[s];
    if (!validate_certificate(inst, oc.x, oc.cert, cfg.mode)) continue;
    if (verify_pareto(inst, oc.x, cfg.mode).dominated) continue;
    report.incumbent_x = oc.x;
    report.lb = oc.value;
    report.certificate = oc.cert;
    report.po_verified = true;
    break;
  }
  report.wallclock =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
  return report;
}

namespace {

// Lazy best-first enumeration of matchings in descending objective order.
// Requires a nonnegative edge objective so that the per-agent maximum bound
// stays admissible; the first Pareto-optimal matching popped is optimal.
SolveReport solve_exact_matching(const MaxParetoInstance& inst,
                                 const NumericMode& mode, const ExactCaps& caps) {
  const auto t0 = Clock::now();
  const auto& shape = *inst.matching_shape;
  const int n1 = shape.n1;
  const int ne = static_cast<int>(shape.edge_of_var.size());
  if (shape.n2 > 63) throw CapExceeded("matching enumeration supports n2 <= 63");

  std::vector<std::vector<std::pair<int, int>>> edges_of_agent(n1);  // (var, j)
  for (int e = 0; e < ne; ++e)
    edges_of_agent[shape.edge_of_var[e].first].push_back(
        {e, shape.edge_of_var[e].second});

  // Rebuilt graph for the cheap integral-dominance pre-filter. An integral
  // dominator is in particular a fractional one, so pre-rejecting on it is
  // sound; acceptance still goes through the verification LP.
  BipartiteInstance filter_graph;
  filter_graph.n1 = n1;
  filter_graph.n2 = shape.n2;
  for (int e = 0; e < ne; ++e)
    filter_graph.edges.push_back({shape.edge_of_var[e].first,
                                  shape.edge_of_var[e].second,
                                  inst.payoff_map(shape.edge_of_var[e].first, e)});
  const bool use_filter = n1 <= 12;

  // Admissible bound: the sum over remaining agents of their best single
  // edge objective (ignoring conflicts).
  std::vector<Rational> suffix_best(n1 + 1, Rational(0));
  for (int i = n1 - 1; i >= 0; --i) {
    Rational best(0);
    for (const auto& [e, j] : edges_of_agent[i])
      if (inst.objective[e] > best) best = inst.objective[e];
    suffix_best[i] = suffix_best[i + 1] + best;
  }

  struct Node {
    Rational f;
    long seq;
    int agent;
    uint64_t used;
    Rational g;
    std::vector<int> chosen;  // edge var per assigned agent, -1 unmatched
  };
  struct NodeCmp {
    bool operator()(const Node& a, const Node& b) const {
      if (a.f != b.f) return a.f < b.f;  // max-heap on f
      return a.seq < b.seq;              // ties newest-first, so leaves come up fast
    }
  };
  std::priority_queue<Node, std::vector<Node>, NodeCmp> open;
  long seq = 0;
  size_t nodes = 0;
  auto push_node = [&](Node&& node) {
    if (++nodes > caps.node_budget)
      throw CapExceeded("matching enumeration node budget exceeded");
    open.push(std::move(node));
  };
  push_node({suffix_best[0], seq++, 0, 0, Rational(0), {}});

  SolveReport report;
  long pops = 0;
  while (!open.empty()) {
    if (caps.time_limit.count() > 0 && (++pops & 255) == 0 &&
        Clock::now() - t0 > caps.time_limit) {
      report.timed_out = true;
      break;
    }
    Node cur = open.top();
    open.pop();
    if (cur.agent == n1) {
      ++report.iterations;
      if (use_filter) {
        PayoffVector base(n1, Rational(0));
        for (int a = 0; a < n1; ++a)
          if (cur.chosen[a] >= 0) base[a] = inst.payoff_map(a, cur.chosen[a]);
        if (dominating_matching_exists(filter_graph, base)) continue;
      }
      std::vector<Rational> x(ne, Rational(0));
      for (int v : cur.chosen)
        if (v >= 0) x[v] = 1;
      if (!verify_pareto(inst, x, mode).dominated) {
        report.incumbent_x = x;
        report.lb = cur.g;
        report.ub = cur.g;
        report.ub_valid = true;
        report.po_verified = true;
        report.certificate = find_support_certificate(inst, x, std::nullopt, mode);
        break;
      }
      continue;
    }
    const int i = cur.agent;
    {
      Node next = cur;
      next.agent = i + 1;
      next.chosen.push_back(-1);
      next.f = next.g + suffix_best[i + 1];
      next.seq = seq++;
      push_node(std::move(next));
    }
    for (const auto& [e, j] : edges_of_agent[i]) {
      if (cur.used & (uint64_t(1) << j)) continue;
      Node next = cur;
      next.agent = i + 1;
      next.used |= uint64_t(1) << j;
      next.g += inst.objective[e];
      next.chosen.push_back(e);
      next.f = next.g + suffix_best[i + 1];
      next.seq = seq++;
      push_node(std::move(next));
    }
  }
  report.wallclock =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
  return report;
}

std::optional<std::vector<Rational>> solve_square(const Mat<Rational>& a,
                                                  const std::vector<Rational>& b) {
  const int n = a.rows();
  Mat<Rational> m = a;
  std::vector<Rational> rhs = b;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      std::swap(rhs[pivot], rhs[col]);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      Rational f = m(r, col) / m(col, col);
      for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / m(i, i);
  return x;
}

}  // namespace

std::vector<std::vector<Rational>> enumerate_vertices(const MaxParetoInstance& inst,
                                                      const ExactCaps& caps) {
  check_dimensions(inst);
  const int m = inst.num_rows();
  const int k = inst.num_vars();
  if (k > caps.max_k || m > caps.max_m)
    throw CapExceeded("vertex enumeration caps exceeded");

  std::set<std::vector<Rational>> seen;

  // All k-subsets of rows as candidate tight systems.
  std::vector<std::vector<Rational>> out;
  auto consider = [&](const std::vector<int>& rows) {
    Mat<Rational> sub(k, k);
    std::vector<Rational> rhs(k);
    for (int r = 0; r < k; ++r) {
      for (int j = 0; j < k; ++j) sub(r, j) = inst.a(rows[r], j);
      rhs[r] = inst.b[rows[r]];
    }
    auto x = solve_square(sub, rhs);
    if (!x) return;
    std::vector<Rational> ax = inst.a.mul(*x);
    for (int i = 0; i < m; ++i)
      if (ax[i] > inst.b[i]) return;
    if (seen.insert(*x).second) out.push_back(*x);
  };

  if (m < k) return out;
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i;
  for (;;) {
    consider(comb);
    int pos = k - 1;
    while (pos >= 0 && comb[pos] == m - k + pos) --pos;
    if (pos < 0) break;
    ++comb[pos];
    for (int j = pos + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SolveReport solve_exact(const MaxParetoInstance& inst, const NumericMode& mode,
                        const ExactCaps& caps) {
  check_dimensions(inst);
  if (inst.matching_shape) {
    bool nonneg = std::all_of(inst.objective.begin(), inst.objective.end(),
                              [](const Rational& c) { return c >= 0; });
    if (nonneg) return solve_exact_matching(inst, mode, caps);
  }

  const auto t0 = Clock::now();
  SolveReport report;
  std::vector<std::vector<Rational>> vertices = enumerate_vertices(inst, caps);
  for (const auto& v : vertices) {
    ++report.iterations;
    if (verify_pareto(inst, v, mode).dominated) continue;
    Rational value = dot(inst.objective, v);
    if (!report.lb || value > *report.lb) {
      report.lb = value;
      report.incumbent_x = v;
    }
  }
  if (report.incumbent_x) {
    report.ub = report.lb;
    report.ub_valid = true;
    report.po_verified = true;
    report.certificate =
        find_support_certificate(inst, *report.incumbent_x, std::nullopt, mode);
  }
  report.wallclock =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
  return report;
}

BipartiteInstance make_diagonal_chain_instance(int n) {
  if (n < 2) throw DimensionError("the chain instance needs n >= 2");
  BipartiteInstance g;
  g.n1 = n;
  g.n2 = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational w(0);
      if (i == j) w = 1;
      if (i == j + 1) w = n;
      g.edges.push_back({i, j, w});
    }
  return g;
}

std::string report_to_json(const SolveReport& report) {
  nlohmann::ordered_json j;
  if (report.lb)
    j["lb"] = rational_to_json(*report.lb);
  else
    j["lb"] = nullptr;
  if (report.ub)
    j["ub"] = rational_to_json(*report.ub);
  else
    j["ub"] = nullptr;
  j["ub_valid"] = report.ub_valid;
  if (report.incumbent_x)
    j["x"] = rational_vector_to_json(*report.incumbent_x);
  else
    j["x"] = nlohmann::ordered_json::array();
  if (report.certificate) {
    nlohmann::ordered_json cert;
    cert["w"] = rational_vector_to_json(report.certificate->w);
    cert["eta"] = rational_vector_to_json(report.certificate->eta);
    j["certificate"] = cert;
  } else {
    j["certificate"] = nullptr;
  }
  j["time_ms"] = static_cast<long>(report.wallclock.count());
  j["iterations"] = report.iterations;
  return j.dump(2) + "\n";
}

}  // namespace maxpareto
