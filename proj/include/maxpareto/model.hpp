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

#ifndef MAXPARETO_MODEL_HPP
#define MAXPARETO_MODEL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxpareto/lp.hpp"
#include "maxpareto/matrix.hpp"
#include "maxpareto/numeric.hpp"

namespace maxpareto {

/// One payoff per agent.
using PayoffVector = std::vector<Rational>;

/// The problem datum: a bounded polyhedron {x : a x <= b}, a linear payoff
/// map (one row per agent), and a linear objective. Immutable after
/// construction; safe to share read-only across workers.
struct MaxParetoInstance {
  Mat<Rational> a;                  // m x k
  std::vector<Rational> b;          // m
  Mat<Rational> payoff_map;         // n x k
  std::vector<Rational> objective;  // k

  std::vector<std::string> row_names;    // optional labels
  std::vector<std::string> var_names;
  std::vector<std::string> agent_names;

  /// Set when the feasible region is a bipartite matching polytope and each
  /// variable is one edge; enables matching-aware exact solving.
  struct MatchingShape {
    int n1 = 0;
    int n2 = 0;
    std::vector<std::pair<int, int>> edge_of_var;
  };
  std::optional<MatchingShape> matching_shape;

  int num_rows() const { return a.rows(); }
  int num_vars() const { return a.cols(); }
  int num_agents() const { return payoff_map.rows(); }

  bool operator==(const MaxParetoInstance& o) const {
    return a == o.a && b == o.b && payoff_map == o.payoff_map &&
           objective == o.objective;
  }
};

/// Throws DimensionError unless all shapes are mutually consistent and
/// m, k, n >= 1.
void check_dimensions(const MaxParetoInstance& inst);

/// u = U x.
PayoffVector payoff(const MaxParetoInstance& inst, const std::vector<Rational>& x);

/// LP skeleton over the instance's rows (a x <= b, free variables, zero
/// objective); callers set objectives on top.
LpProblem make_polytope_lp(const MaxParetoInstance& inst);

/// Membership test. Exact in rational mode; float mode allows a feas_tol
/// slack scaled by each row's magnitude.
bool contains_point(const MaxParetoInstance& inst, const std::vector<Rational>& x,
                    const NumericMode& mode);

struct ValidationReport {
  bool nonempty = false;
  bool bounded = false;
};

/// Feasibility by a phase-1 LP; boundedness by maximizing and minimizing
/// each coordinate. An empty polyhedron reports bounded = true.
ValidationReport validate_instance(const MaxParetoInstance& inst,
                                   const NumericMode& mode = NumericMode::exact());

/// Reads the JSON instance format. Numbers are either JSON numbers or
/// two-element [p, q] arrays denoting p/q (strings are accepted inside the
/// array for values beyond int64). Throws ParseError / DimensionError, and
/// ValidationError when the polyhedron is empty or unbounded.
MaxParetoInstance load_instance(const std::string& path);

/// Parses the same format from an in-memory string (no validation LPs).
MaxParetoInstance parse_instance_json(const std::string& text);

void save_instance(const MaxParetoInstance& inst, const std::string& path);
std::string instance_to_json(const MaxParetoInstance& inst);

}  // namespace maxpareto

#endif  // MAXPARETO_MODEL_HPP
