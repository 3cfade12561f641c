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

#ifndef MAXPARETO_PARETO_HPP
#define MAXPARETO_PARETO_HPP

#include <optional>
#include <string>
#include <vector>

#include "maxpareto/model.hpp"
#include "maxpareto/numeric.hpp"

namespace maxpareto {

/// Strict componentwise dominance: u >= v everywhere and u != v.
bool dominates(const PayoffVector& u, const PayoffVector& v);

struct DominanceResult {
  bool dominated = false;
  std::vector<Rational> witness_x;  // a dominating point, when dominated
  PayoffVector witness_payoff;
  PayoffVector improvement;  // witness payoff minus the tested payoff
};

/// Pareto-optimality check for a feasible point: maximizes the payoff sum
/// over {y in X : U y >= U x}. Not dominated iff the optimum stays at the
/// point's own payoff sum (exactly; within n * opt_tol in float mode).
/// Throws InfeasiblePointError when x lies outside X.
DominanceResult verify_pareto(const MaxParetoInstance& inst,
                              const std::vector<Rational>& x,
                              const NumericMode& mode);

/// A supporting-weight certificate: w >= 1 and nonnegative row multipliers
/// eta with  a' eta = U' w  and  w'(Ux) >= b' eta. Existence of such a pair
/// proves x is Pareto-optimal; with an unrestricted weight cap in exact
/// mode, nonexistence proves it is not.
struct SupportCertificate {
  std::vector<Rational> w;
  std::vector<Rational> eta;
};

/// Searches for a certificate for x, minimizing the weight sum. `w_cap`
/// bounds every weight entry; nullopt means unrestricted. A nullopt result
/// under a finite cap is inconclusive.
std::optional<SupportCertificate> find_support_certificate(
    const MaxParetoInstance& inst, const std::vector<Rational>& x,
    const std::optional<Rational>& w_cap, const NumericMode& mode);

bool validate_certificate(const MaxParetoInstance& inst,
                          const std::vector<Rational>& x,
                          const SupportCertificate& cert, const NumericMode& mode);

/// Detects aligned interests: a strictly positive w with U'w = c. Returns
/// the witness (exact equality in rational mode) or nullopt. When this
/// succeeds, any plain LP optimum of max c'x is already Pareto-optimal.
std::optional<std::vector<Rational>> detect_aligned_interests(
    const MaxParetoInstance& inst, const NumericMode& mode);

std::string certificate_to_json(const SupportCertificate& cert);
SupportCertificate certificate_from_json(const std::string& text);

}  // namespace maxpareto

#endif  // MAXPARETO_PARETO_HPP
