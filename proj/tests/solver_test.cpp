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

#include <gtest/gtest.h>

#include "maxpareto/bench.hpp"
#include "maxpareto/errors.hpp"
#include "maxpareto/rng.hpp"
#include "test_util.hpp"

namespace maxpareto {
namespace {

using testutil::demo_graph;
using testutil::unit_box_identity;

// Welfare-style objective: the payoff sum per edge.
std::vector<Rational> payoff_sum_objective(const BipartiteInstance& g) {
  std::vector<Rational> c;
  for (const auto& e : g.edges) c.push_back(e.weight);
  return c;
}

TEST(EvaluateWeight, AlignedObjectiveHitsPlainOptimum) {
  // c = U'w with w = (2, 3): the weighted stage equals the plain LP.
  MaxParetoInstance inst = unit_box_identity({Rational(2), Rational(3)});
  WeightEvaluation eval =
      evaluate_weight(inst, {Rational(2), Rational(3)}, NumericMode::exact());
  EXPECT_EQ(eval.value, Rational(5));
  EXPECT_EQ(eval.x, (std::vector<Rational>{Rational(1), Rational(1)}));
  EXPECT_TRUE(validate_certificate(inst, eval.x, eval.certificate,
                                   NumericMode::exact()));
}

TEST(EvaluateWeight, TiedWeightsPickObjectiveCorner) {
  // Objective (1, -1) over the diagonal face x1 + x2 = 2 of the box: the
  // face is the single corner (1, 1), value 0.
  MaxParetoInstance inst = unit_box_identity({Rational(1), Rational(-1)});
  WeightEvaluation eval =
      evaluate_weight(inst, {Rational(1), Rational(1)}, NumericMode::exact());
  EXPECT_EQ(eval.x, (std::vector<Rational>{Rational(1), Rational(1)}));
  EXPECT_EQ(eval.value, Rational(0));
}

TEST(EvaluateWeight, DemoGraphWelfare) {
  BipartiteInstance g = demo_graph();
  MaxParetoInstance inst = encode_matching_instance(g, payoff_sum_objective(g));
  std::vector<Rational> ones(3, Rational(1));
  WeightEvaluation eval = evaluate_weight(inst, ones, NumericMode::exact());
  EXPECT_EQ(eval.value, Rational(6));
  EXPECT_FALSE(verify_pareto(inst, eval.x, NumericMode::exact()).dominated);
}

TEST(EvaluateWeight, ScaleInvariance) {
  Rng rng(404);
  for (int t = 0; t < 20; ++t) {
    MaxParetoInstance inst = testutil::random_boxed_instance(rng);
    std::vector<Rational> w(inst.num_agents());
    for (auto& v : w) v = Rational(rng.uniform_int(1, 9));
    WeightEvaluation a = evaluate_weight(inst, w, NumericMode::exact());
    std::vector<Rational> w2 = w;
    for (auto& v : w2) v *= Rational(7, 3);
    WeightEvaluation b = evaluate_weight(inst, w2, NumericMode::exact());
    EXPECT_EQ(a.x, b.x);
    EXPECT_EQ(a.value, b.value);
  }
}

TEST(EvaluateWeight, SubUnitWeightsScaledIntoCertificate) {
  MaxParetoInstance inst = unit_box_identity();
  WeightEvaluation eval = evaluate_weight(inst, {Rational(1, 4), Rational(1, 2)},
                                          NumericMode::exact());
  for (const auto& v : eval.certificate.w) EXPECT_GE(v, Rational(1));
  EXPECT_TRUE(validate_certificate(inst, eval.x, eval.certificate,
                                   NumericMode::exact()));
}

TEST(SolveExact, UnitBox) {
  MaxParetoInstance inst = unit_box_identity();
  SolveReport rep = solve_exact(inst, NumericMode::exact());
  ASSERT_TRUE(rep.lb.has_value());
  EXPECT_EQ(*rep.lb, Rational(2));
  EXPECT_TRUE(rep.ub_valid);
  EXPECT_EQ(*rep.ub, Rational(2));
  EXPECT_TRUE(rep.po_verified);
  EXPECT_EQ(*rep.incumbent_x, (std::vector<Rational>{Rational(1), Rational(1)}));
}

TEST(SolveExact, DemoGraphWelfareOptimumIsSix) {
  BipartiteInstance g = demo_graph();
  MaxParetoInstance inst = encode_matching_instance(g, payoff_sum_objective(g));
  SolveReport rep = solve_exact(inst, NumericMode::exact());
  ASSERT_TRUE(rep.lb.has_value());
  EXPECT_EQ(*rep.lb, Rational(6));
  EXPECT_TRUE(rep.ub_valid);
}

// The exact solver against a brute-force double loop that never touches an
// LP: enumerate payoffs, filter dominated ones, take the best objective.
TEST(SolveExact, MatchesBruteForceOracle) {
  Rng rng(555);
  for (int t = 0; t < 60; ++t) {
    BipartiteInstance g = testutil::random_graph(rng, 5);
    std::vector<Rational> welfare;
    for (size_t e = 0; e < g.edges.size(); ++e)
      welfare.push_back(Rational(rng.uniform_int(0, 9)));
    MaxParetoInstance inst = encode_matching_instance(g, welfare);
    SolveReport rep = solve_exact(inst, NumericMode::exact());

    auto oracle = testutil::enumerate_with_po(g);
    std::optional<Rational> best;
    for (size_t idx = 0; idx < oracle.matchings.size(); ++idx) {
      if (!oracle.po[idx]) continue;
      Rational value(0);
      for (const auto& [i, j] : oracle.matchings[idx].pairs)
        for (size_t e = 0; e < g.edges.size(); ++e)
          if (g.edges[e].i == i && g.edges[e].j == j) value += welfare[e];
      if (!best || value > *best) best = value;
    }
    ASSERT_TRUE(rep.lb.has_value());
    ASSERT_TRUE(best.has_value());
    EXPECT_EQ(*rep.lb, *best) << "graph seed diverged at t=" << t;
  }
}

TEST(SolveExact, GeneralPathViaVertexEnumeration) {
  Rng rng(31);
  for (int t = 0; t < 25; ++t) {
    MaxParetoInstance inst = testutil::random_boxed_instance(rng);
    SolveReport rep = solve_exact(inst, NumericMode::exact());
    ASSERT_TRUE(rep.lb.has_value());
    // Oracle: evaluate every vertex, keep the not-dominated ones.
    std::optional<Rational> best;
    for (const auto& v : enumerate_vertices(inst)) {
      if (verify_pareto(inst, v, NumericMode::exact()).dominated) continue;
      Rational value = dot(inst.objective, v);
      if (!best || value > *best) best = value;
    }
    EXPECT_EQ(*rep.lb, *best);
  }
}

TEST(SolveExact, CapExceededOnLargeGeneralInstance) {
  MaxParetoInstance inst;
  inst.a = Mat<Rational>(30, 13);
  for (int j = 0; j < 13; ++j) inst.a(j, j) = 1;
  inst.b.assign(30, Rational(1));
  inst.payoff_map = Mat<Rational>(1, 13);
  inst.payoff_map(0, 0) = 1;
  inst.objective.assign(13, Rational(1));
  EXPECT_THROW(solve_exact(inst, NumericMode::exact()), CapExceeded);
}

TEST(VertexEnumeration, UnitBoxHasFourVertices) {
  MaxParetoInstance inst = unit_box_identity();
  auto vertices = enumerate_vertices(inst);
  EXPECT_EQ(vertices.size(), 4u);
}

TEST(DiagonalChain, WeightsAndRatios) {
  BipartiteInstance g2 = make_diagonal_chain_instance(2);
  // Weight table [[1,0],[2,1]] row-major by V1 vertex.
  GTEST_ASSERT_EQ(g2.edges.size(), 4u);
  auto weight_of = [&](const BipartiteInstance& g, int i, int j) {
    for (const auto& e : g.edges)
      if (e.i == i && e.j == j) return e.weight;
    return Rational(-1);
  };
  EXPECT_EQ(weight_of(g2, 0, 0), Rational(1));
  EXPECT_EQ(weight_of(g2, 0, 1), Rational(0));
  EXPECT_EQ(weight_of(g2, 1, 0), Rational(2));
  EXPECT_EQ(weight_of(g2, 1, 1), Rational(1));

  for (int n = 2; n <= 5; ++n) {
    BipartiteInstance g = make_diagonal_chain_instance(n);
    std::vector<std::pair<int, int>> diag;
    for (int i = 0; i < n; ++i) diag.emplace_back(i, i);
    Matching m = Matching::from_pairs(std::move(diag));
    EXPECT_EQ(payoff_vector(g, m), PayoffVector(n, Rational(1)));
    EXPECT_TRUE(is_po_matching(g, m));
    MaxParetoInstance inst = encode_matching_instance(g);
    auto cert = find_support_certificate(inst, matching_indicator(g, m),
                                         std::nullopt, NumericMode::exact());
    ASSERT_TRUE(cert.has_value());
    Rational bound(1);
    for (int i = 0; i < n - 1; ++i) bound *= n - 1;
    EXPECT_GE(cert->w.front() / cert->w.back(), bound) << "n=" << n;
  }
}

TEST(SolveHeuristic, AlignedInstanceSolvedAtStartZero) {
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    MaxParetoInstance inst = testutil::random_boxed_instance(rng);
    std::vector<Rational> w(inst.num_agents());
    for (auto& v : w) v = Rational(rng.uniform_int(1, 5));
    inst.objective = inst.payoff_map.mul_transposed(w);
    HeuristicConfig cfg;
    cfg.starts = 2;
    cfg.local_steps = 2;
    cfg.seed = 9 + t;
    SolveReport rep = solve_heuristic(inst, cfg);
    ASSERT_TRUE(rep.lb.has_value());
    LpProblem p = make_polytope_lp(inst);
    p.objective = inst.objective;
    LpSolution plain = solve_lp(p, NumericMode::exact());
    EXPECT_EQ(*rep.lb, plain.objective_value);
    EXPECT_TRUE(rep.po_verified);
  }
}

TEST(SolveHeuristic, LbNeverExceedsExactOptimum) {
  Rng rng(12);
  for (int t = 0; t < 25; ++t) {
    GenSpec spec;
    spec.agents = 4;
    spec.items_multiplier = 1;
    spec.seed = rng.next();
    GeneratedInstance gen = generate_allocation(spec);
    MaxParetoInstance inst = encode_generated(gen);
    SolveReport exact = solve_exact(inst, NumericMode::exact());
    ASSERT_TRUE(exact.lb.has_value());
    HeuristicConfig cfg;
    cfg.w_cap = Rational(spec.items());
    cfg.starts = 4;
    cfg.local_steps = 4;
    cfg.seed = spec.seed;
    SolveReport heur = solve_heuristic(inst, cfg);
    ASSERT_TRUE(heur.lb.has_value());
    EXPECT_LE(*heur.lb, *exact.lb);
    EXPECT_TRUE(heur.po_verified);
  }
}

TEST(SolveHeuristic, DeterministicForFixedSeed) {
  GenSpec spec;
  spec.agents = 5;
  spec.items_multiplier = 2;
  spec.seed = 77;
  MaxParetoInstance inst = encode_generated(generate_allocation(spec));
  HeuristicConfig cfg;
  cfg.w_cap = Rational(10);
  cfg.starts = 5;
  cfg.local_steps = 5;
  cfg.seed = 123;
  SolveReport a = solve_heuristic(inst, cfg);
  SolveReport b = solve_heuristic(inst, cfg);
  cfg.workers = 3;
  SolveReport c = solve_heuristic(inst, cfg);
  ASSERT_TRUE(a.lb && b.lb && c.lb);
  EXPECT_EQ(*a.lb, *b.lb);
  EXPECT_EQ(*a.lb, *c.lb);
  EXPECT_EQ(*a.incumbent_x, *b.incumbent_x);
  EXPECT_EQ(*a.incumbent_x, *c.incumbent_x);
}

// With a cap of 10, the all-diagonal matching of the n=6 chain needs a
// weight spread of 5^5 = 3125 and cannot be certified; the heuristic must
// still return some other verified Pareto-optimal point.
TEST(SolveHeuristic, ChainInstanceBeyondCapStillYieldsIncumbent) {
  const int n = 6;
  BipartiteInstance g = make_diagonal_chain_instance(n);
  std::vector<Rational> diag_indicator;
  for (const auto& e : g.edges)
    diag_indicator.push_back(e.i == e.j ? Rational(1) : Rational(0));
  MaxParetoInstance inst = encode_matching_instance(g, diag_indicator);

  std::vector<std::pair<int, int>> diag;
  for (int i = 0; i < n; ++i) diag.emplace_back(i, i);
  std::vector<Rational> xdiag = matching_indicator(g, Matching::from_pairs(std::move(diag)));
  EXPECT_FALSE(find_support_certificate(inst, xdiag, Rational(10),
                                        NumericMode::exact())
                   .has_value());

  HeuristicConfig cfg;
  cfg.w_cap = Rational(10);
  cfg.starts = 6;
  cfg.local_steps = 4;
  cfg.seed = 3;
  SolveReport rep = solve_heuristic(inst, cfg);
  ASSERT_TRUE(rep.incumbent_x.has_value());
  EXPECT_TRUE(rep.po_verified);
  EXPECT_FALSE(rep.ub_valid);
  // The all-diagonal matching scores n; the capped search must land below.
  EXPECT_LT(*rep.lb, Rational(n));
}

TEST(ReportJson, ShapeAndValues) {
  MaxParetoInstance inst = unit_box_identity();
  SolveReport rep = solve_exact(inst, NumericMode::exact());
  std::string json = report_to_json(rep);
  EXPECT_NE(json.find("\"lb\": 2"), std::string::npos);
  EXPECT_NE(json.find("\"ub_valid\": true"), std::string::npos);
  EXPECT_NE(json.find("\"certificate\""), std::string::npos);
}

}  // namespace
}  // namespace maxpareto
