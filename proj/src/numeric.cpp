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

#include "maxpareto/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace maxpareto {

bool is_integer(const Rational& q) { return denominator(q) == 1; }

std::string to_string(const Rational& q) {
  std::ostringstream os;
  if (is_integer(q)) {
    os << numerator(q);
  } else {
    os << numerator(q) << "/" << denominator(q);
  }
  return os.str();
}

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isdigit(c); });
}

// Parses an optionally signed integer literal into BigInt; empty on failure.
std::optional<BigInt> parse_bigint(std::string s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.erase(s.begin());
  }
  if (!all_digits(s)) return std::nullopt;
  BigInt v(s);
  return neg ? BigInt(-v) : v;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& raw) {
  std::string s = raw;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) return std::nullopt;

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    auto p = parse_bigint(s.substr(0, slash));
    auto q = parse_bigint(s.substr(slash + 1));
    if (!p || !q || *q == 0) return std::nullopt;
    Rational r = Rational(*p) / Rational(*q);
    return r;
  }

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (!all_digits(frac)) return std::nullopt;
    bool neg = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) head.erase(head.begin());
    if (head.empty()) head = "0";
    if (!all_digits(head)) return std::nullopt;
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = BigInt(head) * scale + BigInt(frac);
    Rational r = Rational(num) / Rational(scale);
    return neg ? Rational(-r) : r;
  }

  auto p = parse_bigint(s);
  if (!p) return std::nullopt;
  return Rational(*p);
}

std::optional<std::vector<Rational>> parse_rational_vector(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto q = parse_rational(item);
    if (!q) return std::nullopt;
    out.push_back(*q);
  }
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace maxpareto
