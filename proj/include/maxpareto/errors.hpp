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

#ifndef MAXPARETO_ERRORS_HPP
#define MAXPARETO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxpareto {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file or string.
struct ParseError : Error {
  using Error::Error;
};

/// Mutually inconsistent dimensions.
struct DimensionError : Error {
  using Error::Error;
};

/// Instance rejected at load time (empty or unbounded polyhedron).
struct ValidationError : Error {
  using Error::Error;
};

/// A point handed to a Pareto check lies outside the feasible region.
struct InfeasiblePointError : Error {
  using Error::Error;
};

/// A caller obligation does not hold (e.g. non-PO matching, no improving edge).
struct PreconditionViolated : Error {
  using Error::Error;
};

/// Tripwire: a result that is claimed impossible failed re-validation.
struct ValidationFailed : Error {
  using Error::Error;
};

/// Enumeration caps or node budgets exceeded.
struct CapExceeded : Error {
  using Error::Error;
};

/// Float-mode pivot below the stability threshold; retry in exact mode.
struct NumericalBreakdown : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

/// A matching object is inconsistent with its graph.
struct InvalidMatching : Error {
  using Error::Error;
};

}  // namespace maxpareto

#endif  // MAXPARETO_ERRORS_HPP
