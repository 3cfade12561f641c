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

#ifndef MAXPARETO_LP_HPP
#define MAXPARETO_LP_HPP

#include <optional>
#include <vector>

#include "maxpareto/matrix.hpp"
#include "maxpareto/numeric.hpp"

namespace maxpareto {

enum class RowSense { LE, EQ };
enum class OptDir { Max, Min };
enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Dense LP in the form  opt c'x  s.t.  a x {<=,=} rhs,  lower <= x <= upper.
/// Variables are free unless bounds are given. Data is exact; the numeric
/// mode chosen at solve time decides the arithmetic.
struct LpProblem {
  Mat<Rational> a;
  std::vector<Rational> rhs;
  std::vector<RowSense> sense;  // empty means all LE
  std::vector<Rational> objective;
  OptDir direction = OptDir::Max;
  std::vector<std::optional<Rational>> lower;  // empty means all free
  std::vector<std::optional<Rational>> upper;

  int num_rows() const { return a.rows(); }
  int num_vars() const { return a.cols(); }

  RowSense row_sense(int i) const { return sense.empty() ? RowSense::LE : sense[i]; }

  /// Convenience for building row systems incrementally.
  static LpProblem with_vars(int k) {
    LpProblem p;
    p.a = Mat<Rational>(0, k);
    p.objective.assign(k, Rational(0));
    return p;
  }
  void add_row(const std::vector<Rational>& coeffs, RowSense s, const Rational& b);
};

/// Result of a solve. `x` is a basic (vertex) solution when Optimal.
/// Duals are reported per original row with the maximization convention:
/// objective gradient = a' * duals + bound multipliers, and duals >= 0 on
/// LE rows for Max problems (<= 0 for Min). `farkas` carries an
/// infeasibility certificate over the original rows when Infeasible.
struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  std::vector<Rational> x;
  Rational objective_value = Rational(0);
  std::vector<int> basis;
  std::vector<Rational> duals;
  std::vector<Rational> farkas;
  long iterations = 0;
};

/// Primal simplex on a dense tableau. Dantzig pricing with Bland's rule
/// engaged after a run of degenerate pivots, so every solve terminates.
/// Exact mode uses fraction-free integer pivoting (int64 fast path, GMP
/// escalation); float mode uses a double tableau with the mode's tolerances
/// and throws NumericalBreakdown when pivots degrade.
LpSolution solve_lp(const LpProblem& p, const NumericMode& mode);

/// Vertex maximizing `secondary` over the optimal face of `p`. Implemented
/// by re-solving with the stage-1 objective pinned to its optimum (exactly
/// in rational mode, within an opt_tol band in float mode).
LpSolution solve_lexicographic(const LpProblem& p,
                               const std::vector<Rational>& secondary,
                               const NumericMode& mode);

/// Two-stage variant that also exposes the stage-1 solution; certificate
/// assembly needs the stage-1 duals.
struct LexStages {
  LpSolution stage1;
  LpSolution stage2;
};
LexStages solve_lexicographic_stages(const LpProblem& p,
                                     const std::vector<Rational>& secondary,
                                     const NumericMode& mode);

/// Exact KKT audit of an Optimal solution: primal feasibility, stationarity
/// against the reported duals, complementary slackness. Throws Error on any
/// violation. Exact-mode solves run this automatically; exposed for tests.
void check_kkt_exact(const LpProblem& p, const LpSolution& s);

/// Checks a Farkas certificate: duals' combination of rows is unsatisfiable
/// within the variable bounds. Exact arithmetic.
bool check_farkas_exact(const LpProblem& p, const std::vector<Rational>& farkas);

}  // namespace maxpareto

#endif  // MAXPARETO_LP_HPP
