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

#include "maxpareto/lp.hpp"

#include <gtest/gtest.h>

#include "maxpareto/errors.hpp"
#include "maxpareto/matching.hpp"
#include "maxpareto/rng.hpp"
#include "test_util.hpp"

namespace maxpareto {
namespace {

using testutil::demo_graph;

LpProblem unit_box_max_sum() {
  LpProblem p = LpProblem::with_vars(2);
  p.add_row({Rational(1), Rational(0)}, RowSense::LE, Rational(1));
  p.add_row({Rational(0), Rational(1)}, RowSense::LE, Rational(1));
  p.add_row({Rational(-1), Rational(0)}, RowSense::LE, Rational(0));
  p.add_row({Rational(0), Rational(-1)}, RowSense::LE, Rational(0));
  p.objective = {Rational(1), Rational(1)};
  return p;
}

TEST(SolveLp, UnitBoxBothModes) {
  LpProblem p = unit_box_max_sum();
  for (const auto& mode : {NumericMode::exact(), NumericMode::floating()}) {
    LpSolution s = solve_lp(p, mode);
    ASSERT_EQ(s.status, LpStatus::Optimal);
    EXPECT_EQ(s.x, (std::vector<Rational>{Rational(1), Rational(1)}));
    EXPECT_EQ(s.objective_value, Rational(2));
  }
}

TEST(SolveLp, InfeasibleWithFarkas) {
  LpProblem p = LpProblem::with_vars(1);
  p.add_row({Rational(1)}, RowSense::LE, Rational(-1));
  p.add_row({Rational(-1)}, RowSense::LE, Rational(0));
  p.objective = {Rational(1)};
  LpSolution s = solve_lp(p, NumericMode::exact());
  ASSERT_EQ(s.status, LpStatus::Infeasible);
  EXPECT_TRUE(check_farkas_exact(p, s.farkas));
}

TEST(SolveLp, InfeasibleNonSingletonFarkas) {
  // x1 + x2 <= -1 with x >= 0 via explicit rows.
  LpProblem p = LpProblem::with_vars(2);
  p.add_row({Rational(1), Rational(1)}, RowSense::LE, Rational(-1));
  p.add_row({Rational(-1), Rational(0)}, RowSense::LE, Rational(0));
  p.add_row({Rational(0), Rational(-1)}, RowSense::LE, Rational(0));
  p.objective = {Rational(0), Rational(0)};
  LpSolution s = solve_lp(p, NumericMode::exact());
  ASSERT_EQ(s.status, LpStatus::Infeasible);
  EXPECT_TRUE(check_farkas_exact(p, s.farkas));
}

TEST(SolveLp, Unbounded) {
  LpProblem p = LpProblem::with_vars(1);
  p.add_row({Rational(-1)}, RowSense::LE, Rational(0));
  p.objective = {Rational(1)};
  EXPECT_EQ(solve_lp(p, NumericMode::exact()).status, LpStatus::Unbounded);
  EXPECT_EQ(solve_lp(p, NumericMode::floating()).status, LpStatus::Unbounded);
}

// The assignment relaxation of the demo graph attains the best total payoff
// over integral matchings, at an integral vertex. The expected value comes
// from exhaustive enumeration, frozen at 6.
TEST(SolveLp, DemoGraphAssignmentIntegralVertex) {
  BipartiteInstance g = demo_graph();
  auto enumerated = testutil::enumerate_with_po(g);
  Rational best(0);
  for (const auto& u : enumerated.payoffs) {
    Rational sum(0);
    for (const auto& v : u) sum += v;
    if (sum > best) best = sum;
  }
  EXPECT_EQ(best, Rational(6));

  MaxParetoInstance inst = encode_matching_instance(g);
  LpProblem p = make_polytope_lp(inst);
  std::vector<Rational> ones(inst.num_agents(), Rational(1));
  p.objective = inst.payoff_map.mul_transposed(ones);
  LpSolution s = solve_lp(p, NumericMode::exact());
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.objective_value, best);
  for (const auto& xi : s.x)
    EXPECT_TRUE(xi == 0 || xi == 1) << "fractional vertex entry " << to_string(xi);
}

TEST(Lexicographic, SinglePointFace) {
  LpProblem p = unit_box_max_sum();
  LpSolution s =
      solve_lexicographic(p, {Rational(1), Rational(-1)}, NumericMode::exact());
  EXPECT_EQ(s.x, (std::vector<Rational>{Rational(1), Rational(1)}));
}

TEST(Lexicographic, EdgeFace) {
  LpProblem p = unit_box_max_sum();
  p.objective = {Rational(1), Rational(0)};
  LpSolution s =
      solve_lexicographic(p, {Rational(0), Rational(1)}, NumericMode::exact());
  EXPECT_EQ(s.x, (std::vector<Rational>{Rational(1), Rational(1)}));
}

TEST(Lexicographic, DegeneratePrimary) {
  LpProblem p = unit_box_max_sum();
  p.objective = {Rational(0), Rational(0)};
  LpSolution s =
      solve_lexicographic(p, {Rational(1), Rational(1)}, NumericMode::exact());
  EXPECT_EQ(s.x, (std::vector<Rational>{Rational(1), Rational(1)}));
}

// Classic cycling-prone instance (degenerate origin, fractional costs);
// termination plus the known optimum, which vertex enumeration over the
// tight systems confirms independently at 1/20.
TEST(Cycling, DegenerateFractionalCosts) {
  LpProblem p = LpProblem::with_vars(4);
  p.add_row({Rational(1, 4), Rational(-60), Rational(-1, 25), Rational(9)},
            RowSense::LE, Rational(0));
  p.add_row({Rational(1, 2), Rational(-90), Rational(-1, 50), Rational(3)},
            RowSense::LE, Rational(0));
  p.add_row({Rational(0), Rational(0), Rational(1), Rational(0)}, RowSense::LE,
            Rational(1));
  for (int j = 0; j < 4; ++j) {
    std::vector<Rational> row(4, Rational(0));
    row[j] = -1;
    p.add_row(row, RowSense::LE, Rational(0));
  }
  p.objective = {Rational(3, 4), Rational(-150), Rational(1, 50), Rational(-6)};
  LpSolution s = solve_lp(p, NumericMode::exact());
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.objective_value, Rational(1, 20));
  LpSolution sf = solve_lp(p, NumericMode::floating());
  ASSERT_EQ(sf.status, LpStatus::Optimal);
  EXPECT_NEAR(to_double(sf.objective_value), 0.05, 1e-7);
}

// A batch of deliberately degenerate LPs: many coincident rows through the
// origin. Bland's rule must keep every solve finite.
TEST(Cycling, RandomDegenerateBatch) {
  Rng rng(20260809);
  for (int t = 0; t < 200; ++t) {
    const int k = 3;
    LpProblem p = LpProblem::with_vars(k);
    const int rows = 6 + static_cast<int>(rng.uniform_int(0, 4));
    for (int i = 0; i < rows; ++i) {
      std::vector<Rational> row(k);
      for (int j = 0; j < k; ++j) row[j] = Rational(rng.uniform_int(-2, 2));
      p.add_row(row, RowSense::LE, Rational(0));  // all tight at the origin
    }
    for (int j = 0; j < k; ++j) {
      std::vector<Rational> row(k, Rational(0));
      row[j] = 1;
      p.add_row(row, RowSense::LE, Rational(1));
    }
    for (int j = 0; j < k; ++j) p.objective[j] = Rational(rng.uniform_int(-2, 2));
    LpSolution s = solve_lp(p, NumericMode::exact());
    EXPECT_TRUE(s.status == LpStatus::Optimal || s.status == LpStatus::Unbounded);
  }
}

TEST(Modes, RationalEqualsFloatOnWellConditionedSuite) {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    MaxParetoInstance inst = testutil::random_boxed_instance(rng);
    LpProblem p = make_polytope_lp(inst);
    p.objective = inst.objective;
    LpSolution exact = solve_lp(p, NumericMode::exact());
    LpSolution approx = solve_lp(p, NumericMode::floating());
    ASSERT_EQ(exact.status, LpStatus::Optimal);
    ASSERT_EQ(approx.status, LpStatus::Optimal);
    double ve = to_double(exact.objective_value);
    double va = to_double(approx.objective_value);
    EXPECT_NEAR(ve, va, 1e-6 * (1 + std::abs(ve)));
  }
}

// Optimal results satisfy row feasibility and matching primal/dual
// objectives; exact mode dispatches to the fraction-free engine, so this
// also pins the engines against each other.
TEST(Invariants, FeasibilityAndDualityGap) {
  Rng rng(99);
  for (int t = 0; t < 120; ++t) {
    MaxParetoInstance inst = testutil::random_boxed_instance(rng);
    LpProblem p = make_polytope_lp(inst);
    p.objective = inst.objective;
    for (const auto& mode : {NumericMode::exact(), NumericMode::floating()}) {
      LpSolution s = solve_lp(p, mode);
      ASSERT_EQ(s.status, LpStatus::Optimal);
      std::vector<Rational> ax = p.a.mul(s.x);
      for (int i = 0; i < p.num_rows(); ++i) {
        Rational norm(0);
        for (int j = 0; j < p.num_vars(); ++j) norm += abs(p.a(i, j));
        Rational slack_tol =
            mode.is_exact() ? Rational(0) : from_double(mode.feas_tol) * (1 + norm);
        EXPECT_LE(ax[i], p.rhs[i] + slack_tol);
      }
      Rational dual_obj = dot(s.duals, p.rhs);
      Rational gap = abs(dual_obj - s.objective_value);
      Rational gap_tol = mode.is_exact()
                             ? Rational(0)
                             : from_double(mode.opt_tol) *
                                   (1 + abs(s.objective_value));
      EXPECT_LE(gap, gap_tol) << "duality gap " << to_string(gap);
    }
  }
}

TEST(Invariants, KktCheckedOnDemand) {
  LpProblem p = unit_box_max_sum();
  LpSolution s = solve_lp(p, NumericMode::exact());
  EXPECT_NO_THROW(check_kkt_exact(p, s));
  // Corrupting the solution must be caught.
  s.x[0] = Rational(2);
  EXPECT_THROW(check_kkt_exact(p, s), Error);
}

TEST(Invariants, EqualityRowDuals) {
  // max x1 + x2 s.t. x1 + x2 = 1, x free: whole line optimal, duals exact.
  LpProblem p = LpProblem::with_vars(2);
  p.add_row({Rational(1), Rational(1)}, RowSense::EQ, Rational(1));
  p.objective = {Rational(1), Rational(1)};
  LpSolution s = solve_lp(p, NumericMode::exact());
  ASSERT_EQ(s.status, LpStatus::Optimal);
  EXPECT_EQ(s.objective_value, Rational(1));
  EXPECT_EQ(s.duals[0], Rational(1));
}

}  // namespace
}  // namespace maxpareto
