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

#ifndef MAXPARETO_JSON_UTIL_HPP
#define MAXPARETO_JSON_UTIL_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "maxpareto/numeric.hpp"

namespace maxpareto {

/// Shared "num" encoding: a JSON number, or [p, q] for the rational p/q.
/// Integers too large for int64 may appear as strings inside the array.
Rational json_to_rational(const nlohmann::json& j);
nlohmann::ordered_json rational_to_json(const Rational& q);

std::vector<Rational> json_to_rational_vector(const nlohmann::json& j);
nlohmann::ordered_json rational_vector_to_json(const std::vector<Rational>& v);

/// Loads and parses a JSON file; IoError / ParseError on failure.
nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace maxpareto

#endif  // MAXPARETO_JSON_UTIL_HPP
