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

#include "maxpareto/model.hpp"

#include "maxpareto/errors.hpp"
#include "maxpareto/json_util.hpp"
#include "maxpareto/lp.hpp"

namespace maxpareto {

void check_dimensions(const MaxParetoInstance& inst) {
  const int m = inst.a.rows();
  const int k = inst.a.cols();
  const int n = inst.payoff_map.rows();
  if (m < 1 || k < 1 || n < 1)
    throw DimensionError("instance requires m >= 1, k >= 1, n >= 1");
  if (static_cast<int>(inst.b.size()) != m)
    throw DimensionError("b length does not match A row count");
  if (inst.payoff_map.cols() != k)
    throw DimensionError("U column count does not match A");
  if (static_cast<int>(inst.objective.size()) != k)
    throw DimensionError("c length does not match variable count");
}

PayoffVector payoff(const MaxParetoInstance& inst, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != inst.num_vars())
    throw DimensionError("point length does not match variable count");
  return inst.payoff_map.mul(x);
}

LpProblem make_polytope_lp(const MaxParetoInstance& inst) {
  LpProblem p = LpProblem::with_vars(inst.num_vars());
  p.a = inst.a;
  p.rhs = inst.b;
  p.sense.assign(inst.num_rows(), RowSense::LE);
  p.objective.assign(inst.num_vars(), Rational(0));
  return p;
}

bool contains_point(const MaxParetoInstance& inst, const std::vector<Rational>& x,
                    const NumericMode& mode) {
  if (static_cast<int>(x.size()) != inst.num_vars())
    throw DimensionError("point length does not match variable count");
  std::vector<Rational> ax = inst.a.mul(x);
  for (int i = 0; i < inst.num_rows(); ++i) {
    if (mode.is_exact()) {
      if (ax[i] > inst.b[i]) return false;
    } else {
      Rational norm(1);
      for (int j = 0; j < inst.num_vars(); ++j) norm += abs(inst.a(i, j));
      norm += abs(inst.b[i]);
      if (ax[i] > inst.b[i] + from_double(mode.feas_tol) * norm) return false;
    }
  }
  return true;
}

ValidationReport validate_instance(const MaxParetoInstance& inst,
                                   const NumericMode& mode) {
  check_dimensions(inst);
  ValidationReport report;
  LpProblem p = make_polytope_lp(inst);
  LpSolution feas = solve_lp(p, mode);
  report.nonempty = feas.status != LpStatus::Infeasible;
  report.bounded = true;
  if (!report.nonempty) return report;
  for (int j = 0; j < inst.num_vars() && report.bounded; ++j) {
    for (OptDir dir : {OptDir::Max, OptDir::Min}) {
      p.objective.assign(inst.num_vars(), Rational(0));
      p.objective[j] = 1;
      p.direction = dir;
      if (solve_lp(p, mode).status == LpStatus::Unbounded) {
        report.bounded = false;
        break;
      }
    }
  }
  return report;
}

namespace {

Mat<Rational> json_to_matrix(const nlohmann::json& j, const std::string& name) {
  if (!j.is_array() || j.empty())
    throw ParseError("field '" + name + "' must be a nonempty array of rows");
  const int rows = static_cast<int>(j.size());
  if (!j[0].is_array()) throw ParseError("field '" + name + "' rows must be arrays");
  const int cols = static_cast<int>(j[0].size());
  Mat<Rational> m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
      throw ParseError("field '" + name + "' has ragged rows");
    for (int c = 0; c < cols; ++c) m(i, c) = json_to_rational(j[i][c]);
  }
  return m;
}

nlohmann::ordered_json matrix_to_json(const Mat<Rational>& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(rational_vector_to_json(m.row(i)));
  return rows;
}

}  // namespace

MaxParetoInstance parse_instance_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  for (const char* field : {"m", "k", "n", "A", "b", "U", "c"})
    if (!j.contains(field)) throw ParseError(std::string("missing field '") + field + "'");

  MaxParetoInstance inst;
  inst.a = json_to_matrix(j["A"], "A");
  inst.payoff_map = json_to_matrix(j["U"], "U");
  inst.b = json_to_rational_vector(j["b"]);
  inst.objective = json_to_rational_vector(j["c"]);

  const int m = j["m"].get<int>();
  const int k = j["k"].get<int>();
  const int n = j["n"].get<int>();
  if (inst.a.rows() != m || inst.a.cols() != k)
    throw DimensionError("A does not match declared m x k");
  if (inst.payoff_map.rows() != n)
    throw DimensionError("U does not match declared n");
  check_dimensions(inst);

  if (j.contains("names")) {
    const auto& names = j["names"];
    if (names.contains("rows"))
      inst.row_names = names["rows"].get<std::vector<std::string>>();
    if (names.contains("vars"))
      inst.var_names = names["vars"].get<std::vector<std::string>>();
    if (names.contains("agents"))
      inst.agent_names = names["agents"].get<std::vector<std::string>>();
  }
  return inst;
}

MaxParetoInstance load_instance(const std::string& path) {
  MaxParetoInstance inst = parse_instance_json(read_text_file(path));
  ValidationReport report = validate_instance(inst, NumericMode::exact());
  if (!report.nonempty)
    throw ValidationError("instance rejected: feasible region is empty");
  if (!report.bounded)
    throw ValidationError("instance rejected: feasible region is unbounded");
  return inst;
}

std::string instance_to_json(const MaxParetoInstance& inst) {
  nlohmann::ordered_json j;
  j["m"] = inst.num_rows();
  j["k"] = inst.num_vars();
  j["n"] = inst.num_agents();
  j["A"] = matrix_to_json(inst.a);
  j["b"] = rational_vector_to_json(inst.b);
  j["U"] = matrix_to_json(inst.payoff_map);
  j["c"] = rational_vector_to_json(inst.objective);
  if (!inst.row_names.empty() || !inst.var_names.empty() || !inst.agent_names.empty()) {
    nlohmann::ordered_json names;
    if (!inst.row_names.empty()) names["rows"] = inst.row_names;
    if (!inst.var_names.empty()) names["vars"] = inst.var_names;
    if (!inst.agent_names.empty()) names["agents"] = inst.agent_names;
    j["names"] = names;
  }
  return j.dump(2) + "\n";
}

void save_instance(const MaxParetoInstance& inst, const std::string& path) {
  write_text_file(path, instance_to_json(inst));
}

}  // namespace maxpareto
