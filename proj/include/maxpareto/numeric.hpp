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

#ifndef MAXPARETO_NUMERIC_HPP
#define MAXPARETO_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace maxpareto {

/// Exact rational scalar. All data is held exactly at rest; floating-point
/// is an opt-in compute mode.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Numeric policy shared by every operation that solves or checks something.
/// Float mode carries a feasibility and an optimality tolerance; exact mode
/// has none.
struct NumericMode {
  enum class Kind { Float, ExactRational };

  Kind kind = Kind::ExactRational;
  double feas_tol = 1e-9;
  double opt_tol = 1e-7;

  static NumericMode exact() { return NumericMode{Kind::ExactRational, 0.0, 0.0}; }
  static NumericMode floating(double feas = 1e-9, double opt = 1e-7) {
    return NumericMode{Kind::Float, feas, opt};
  }

  bool is_exact() const { return kind == Kind::ExactRational; }
};

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::vector<double> to_double(const std::vector<Rational>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_double(q));
  return out;
}

/// Exact embedding of a double into the rationals.
inline Rational from_double(double d) { return Rational(d); }

bool is_integer(const Rational& q);

/// Renders p/q, or just p when q == 1.
std::string to_string(const Rational& q);

/// Parses "p", "p/q", or a decimal literal such as "-0.25" losslessly.
/// Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

/// Parses a comma-separated vector of rationals ("1,1/3,-0.5").
std::optional<std::vector<Rational>> parse_rational_vector(const std::string& text);

}  // namespace maxpareto

#endif  // MAXPARETO_NUMERIC_HPP
