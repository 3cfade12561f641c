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

#ifndef MAXPARETO_SOLVER_HPP
#define MAXPARETO_SOLVER_HPP

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "maxpareto/matching.hpp"
#include "maxpareto/model.hpp"
#include "maxpareto/pareto.hpp"

namespace maxpareto {

/// Multi-start weight-space search settings. `w_cap` is the weight bound;
/// sampled starts live in [1, w_cap]^n on a log scale.
struct HeuristicConfig {
  Rational w_cap = Rational(8);
  int starts = 16;
  int local_steps = 12;
  Rational step_factor = Rational(2);
  std::chrono::milliseconds time_limit{60000};
  uint64_t seed = 0;
  NumericMode mode = NumericMode::exact();
  int workers = 1;
};

/// Solver output. Every emitted incumbent has passed the Pareto check and
/// carries a validated certificate. `ub_valid` is false whenever the bound
/// does not hold for the unrestricted problem (the bounded-weight search
/// never produces a valid one on its own).
struct SolveReport {
  std::optional<std::vector<Rational>> incumbent_x;
  std::optional<Rational> lb;
  std::optional<Rational> ub;
  bool ub_valid = false;
  std::optional<SupportCertificate> certificate;
  bool po_verified = false;
  std::chrono::milliseconds wallclock{0};
  long iterations = 0;
  bool timed_out = false;
  bool cap_exceeded = false;
};

struct WeightEvaluation {
  std::vector<Rational> x;
  Rational value;
  SupportCertificate certificate;
};

/// For a fixed strictly positive weight vector: maximizes w'Ux over X, then
/// the objective over that optimal face (a two-stage lexicographic solve).
/// The result is Pareto-optimal by construction; the certificate pairs the
/// (rescaled to >= 1) weights with the stage-1 duals.
WeightEvaluation evaluate_weight(const MaxParetoInstance& inst,
                                 const std::vector<Rational>& w,
                                 const NumericMode& mode);

/// Multi-start + coordinate-wise local search over weight space. The
/// aligned-interests witness, when one exists, seeds start zero and solves
/// the instance outright. Deterministic for a fixed seed at any worker
/// count; on time-out the best verified incumbent so far is returned with
/// `timed_out` set.
SolveReport solve_heuristic(const MaxParetoInstance& inst,
                            const HeuristicConfig& cfg);

struct ExactCaps {
  int max_k = 12;
  int max_m = 24;
  size_t node_budget = 4'000'000;
  std::chrono::milliseconds time_limit{0};  // zero: no limit
};

/// Exact optimum over the Pareto set. Matching-shaped instances enumerate
/// matchings lazily in descending objective order and stop at the first
/// Pareto-optimal one; general instances enumerate polytope vertices by
/// basis enumeration. Throws CapExceeded beyond the caps/budget.
SolveReport solve_exact(const MaxParetoInstance& inst, const NumericMode& mode,
                        const ExactCaps& caps = {});

/// All vertices of {x : a x <= b} by k-subset basis enumeration with an
/// exact feasibility filter, deduplicated and sorted.
std::vector<std::vector<Rational>> enumerate_vertices(const MaxParetoInstance& inst,
                                                      const ExactCaps& caps = {});

/// Complete n-by-n graph with weight 1 on the diagonal, n just below it, 0
/// elsewhere. The all-diagonal matching pays (1, ..., 1) and is
/// Pareto-optimal, yet supporting weights must satisfy
/// w_1 / w_n >= (n-1)^(n-1): the canonical witness that bounded-weight
/// searches lose completeness.
BipartiteInstance make_diagonal_chain_instance(int n);

std::string report_to_json(const SolveReport& report);

}  // namespace maxpareto

#endif  // MAXPARETO_SOLVER_HPP
