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

#include "maxpareto/json_util.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "maxpareto/errors.hpp"

namespace maxpareto {

namespace {

BigInt json_to_bigint(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<int64_t>());
  if (j.is_number_unsigned()) return BigInt(j.get<uint64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("malformed integer string: " + j.dump());
    }
  }
  throw ParseError("expected integer, got: " + j.dump());
}

}  // namespace

Rational json_to_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<int64_t>());
  if (j.is_number_unsigned()) return Rational(BigInt(j.get<uint64_t>()));
  if (j.is_number_float()) return from_double(j.get<double>());
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError("rational pair must have two entries");
    BigInt p = json_to_bigint(j[0]);
    BigInt q = json_to_bigint(j[1]);
    if (q <= 0) throw ParseError("rational denominator must be positive");
    return Rational(p) / Rational(q);
  }
  throw ParseError("expected a number or [p, q], got: " + j.dump());
}

nlohmann::ordered_json rational_to_json(const Rational& q) {
  const BigInt num = BigInt(numerator(q));
  const BigInt den = BigInt(denominator(q));
  auto emit = [](const BigInt& v) -> nlohmann::ordered_json {
    if (v <= std::numeric_limits<int64_t>::max() &&
        v >= std::numeric_limits<int64_t>::min())
      return v.convert_to<int64_t>();
    return v.str();
  };
  if (den == 1) return emit(num);
  nlohmann::ordered_json pair = nlohmann::ordered_json::array();
  pair.push_back(emit(num));
  pair.push_back(emit(den));
  return pair;
}

std::vector<Rational> json_to_rational_vector(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected an array of numbers");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(json_to_rational(e));
  return out;
}

nlohmann::ordered_json rational_vector_to_json(const std::vector<Rational>& v) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& q : v) arr.push_back(rational_to_json(q));
  return arr;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON in ") + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write file: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace maxpareto
