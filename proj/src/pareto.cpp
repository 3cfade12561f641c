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

#include "maxpareto/pareto.hpp"

#include "maxpareto/errors.hpp"
#include "maxpareto/json_util.hpp"
#include "maxpareto/lp.hpp"

namespace maxpareto {

bool dominates(const PayoffVector& u, const PayoffVector& v) {
  if (u.size() != v.size()) throw DimensionError("payoff vectors differ in length");
  bool strict = false;
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] < v[i]) return false;
    if (u[i] > v[i]) strict = true;
  }
  return strict;
}

DominanceResult verify_pareto(const MaxParetoInstance& inst,
                              const std::vector<Rational>& x,
                              const NumericMode& mode) {
  check_dimensions(inst);
  if (!contains_point(inst, x, mode))
    throw InfeasiblePointError("point is not in the feasible region");

  const int n = inst.num_agents();
  const int k = inst.num_vars();
  const int m = inst.num_rows();
  PayoffVector ux = payoff(inst, x);

  // Rows: the polytope, then -(U y) <= -(U x) per agent. Built in one pass;
  // this path is hot in the equivalence suites.
  LpProblem p;
  p.a = Mat<Rational>(m + n, k);
  p.rhs.resize(m + n);
  p.sense.assign(m + n, RowSense::LE);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) p.a(i, j) = inst.a(i, j);
    p.rhs[i] = inst.b[i];
  }
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < k; ++j) p.a(m + r, j) = -inst.payoff_map(r, j);
    p.rhs[m + r] = -ux[r];
  }
  std::vector<Rational> ones(n, Rational(1));
  p.objective = inst.payoff_map.mul_transposed(ones);

  LpSolution sol = solve_lp(p, mode);
  if (sol.status != LpStatus::Optimal)
    throw Error("verification LP failed to solve");

  Rational base(0);
  for (const auto& u : ux) base += u;

  bool dominated;
  if (mode.is_exact()) {
    dominated = sol.objective_value > base;
  } else {
    Rational margin = from_double(mode.opt_tol) * n * (1 + abs(base));
    dominated = sol.objective_value > base + margin;
  }

  DominanceResult out;
  out.dominated = dominated;
  if (dominated) {
    out.witness_x = sol.x;
    out.witness_payoff = payoff(inst, sol.x);
    out.improvement.resize(n);
    for (int r = 0; r < n; ++r) out.improvement[r] = out.witness_payoff[r] - ux[r];
  }
  return out;
}

std::optional<SupportCertificate> find_support_certificate(
    const MaxParetoInstance& inst, const std::vector<Rational>& x,
    const std::optional<Rational>& w_cap, const NumericMode& mode) {
  check_dimensions(inst);
  if (!contains_point(inst, x, mode))
    throw InfeasiblePointError("point is not in the feasible region");

  const int n = inst.num_agents();
  const int m = inst.num_rows();
  const int k = inst.num_vars();
  PayoffVector u = payoff(inst, x);

  // Variables: w (n entries, in [1, w_cap]), eta (m entries, >= 0).
  // Rows: a' eta = U' w per variable, then b' eta <= w' u.
  LpProblem p;
  p.a = Mat<Rational>(k + 1, n + m);
  p.rhs.assign(k + 1, Rational(0));
  p.sense.assign(k + 1, RowSense::EQ);
  p.objective.assign(n + m, Rational(0));
  for (int j = 0; j < k; ++j) {
    for (int r = 0; r < n; ++r) p.a(j, r) = -inst.payoff_map(r, j);
    for (int i = 0; i < m; ++i) p.a(j, n + i) = inst.a(i, j);
  }
  for (int r = 0; r < n; ++r) p.a(k, r) = -u[r];
  for (int i = 0; i < m; ++i) p.a(k, n + i) = inst.b[i];
  p.sense[k] = RowSense::LE;
  p.lower.assign(n + m, Rational(0));
  p.upper.assign(n + m, std::nullopt);
  for (int r = 0; r < n; ++r) {
    p.lower[r] = Rational(1);
    if (w_cap) p.upper[r] = *w_cap;
  }
  for (int r = 0; r < n; ++r) p.objective[r] = 1;
  p.direction = OptDir::Min;

  LpSolution sol = solve_lp(p, mode);
  if (sol.status == LpStatus::Infeasible) return std::nullopt;
  if (sol.status != LpStatus::Optimal)
    throw Error("certificate LP unexpectedly unbounded");

  SupportCertificate cert;
  cert.w.assign(sol.x.begin(), sol.x.begin() + n);
  cert.eta.assign(sol.x.begin() + n, sol.x.end());
  if (mode.is_exact() && !validate_certificate(inst, x, cert, mode))
    throw Error("certificate failed self-validation");
  return cert;
}

bool validate_certificate(const MaxParetoInstance& inst,
                          const std::vector<Rational>& x,
                          const SupportCertificate& cert, const NumericMode& mode) {
  const int n = inst.num_agents();
  const int m = inst.num_rows();
  if (static_cast<int>(cert.w.size()) != n || static_cast<int>(cert.eta.size()) != m)
    return false;
  Rational feas = from_double(mode.is_exact() ? 0.0 : mode.feas_tol);

  for (const auto& w : cert.w)
    if (w < 1 - feas) return false;
  for (const auto& e : cert.eta)
    if (e < -feas) return false;

  std::vector<Rational> lhs = inst.a.mul_transposed(cert.eta);
  std::vector<Rational> rhs = inst.payoff_map.mul_transposed(cert.w);
  for (int j = 0; j < inst.num_vars(); ++j) {
    Rational diff = abs(lhs[j] - rhs[j]);
    if (diff > feas * (1 + abs(rhs[j]))) return false;
  }

  PayoffVector u = payoff(inst, x);
  Rational wu = dot(cert.w, u);
  Rational be = dot(cert.eta, inst.b);
  return wu >= be - feas * (1 + abs(be));
}

std::optional<std::vector<Rational>> detect_aligned_interests(
    const MaxParetoInstance& inst, const NumericMode& mode) {
  check_dimensions(inst);
  const int n = inst.num_agents();
  const int k = inst.num_vars();

  // Variables: w (n entries >= 1) and a scale lambda >= 1 with U'w = lambda*c.
  // Joint homogeneity makes this feasible exactly when some strictly
  // positive w solves U'w = c; the witness returned is w / lambda.
  LpProblem p;
  p.a = Mat<Rational>(k, n + 1);
  p.rhs.assign(k, Rational(0));
  p.sense.assign(k, RowSense::EQ);
  p.objective.assign(n + 1, Rational(0));
  for (int j = 0; j < k; ++j) {
    for (int r = 0; r < n; ++r) p.a(j, r) = inst.payoff_map(r, j);
    p.a(j, n) = -inst.objective[j];
  }
  p.lower.assign(n + 1, Rational(1));
  p.upper.assign(n + 1, std::nullopt);
  for (int r = 0; r < n; ++r) p.objective[r] = 1;
  p.direction = OptDir::Min;

  LpSolution sol = solve_lp(p, mode);
  if (sol.status != LpStatus::Optimal) return std::nullopt;

  std::vector<Rational> w(sol.x.begin(), sol.x.begin() + n);
  const Rational& lambda = sol.x[n];
  for (auto& v : w) v /= lambda;

  if (mode.is_exact()) {
    std::vector<Rational> utw = inst.payoff_map.mul_transposed(w);
    for (int j = 0; j < k; ++j)
      if (utw[j] != inst.objective[j]) throw Error("aligned-interest witness invalid");
  }
  return w;
}

std::string certificate_to_json(const SupportCertificate& cert) {
  nlohmann::ordered_json j;
  j["w"] = rational_vector_to_json(cert.w);
  j["eta"] = rational_vector_to_json(cert.eta);
  return j.dump(2) + "\n";
}

SupportCertificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed certificate JSON: ") + e.what());
  }
  if (!j.contains("w") || !j.contains("eta"))
    throw ParseError("certificate requires fields 'w' and 'eta'");
  SupportCertificate cert;
  cert.w = json_to_rational_vector(j["w"]);
  cert.eta = json_to_rational_vector(j["eta"]);
  return cert;
}

}  // namespace maxpareto
