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

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "maxpareto/errors.hpp"
#include "maxpareto/rng.hpp"
#include "test_util.hpp"

namespace maxpareto {
namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream out(path);
  out << content;
  return path;
}

const char* kUnitBoxJson = R"({
  "m": 4, "k": 2, "n": 2,
  "A": [[1,0],[0,1],[-1,0],[0,-1]],
  "b": [1,1,0,0],
  "U": [[1,0],[0,1]],
  "c": [1,1]
})";

TEST(LoadInstance, UnitBox) {
  std::string path = write_temp("unit_box.mpj", kUnitBoxJson);
  MaxParetoInstance inst = load_instance(path);
  EXPECT_EQ(inst.num_vars(), 2);
  EXPECT_EQ(inst.num_rows(), 4);
  EXPECT_EQ(inst.num_agents(), 2);
  EXPECT_EQ(inst.payoff_map(0, 0), Rational(1));
}

TEST(LoadInstance, MissingFieldIsParseError) {
  std::string path = write_temp("missing_u.mpj", R"({
    "m": 1, "k": 1, "n": 1, "A": [[1]], "b": [1], "c": [1]
  })");
  EXPECT_THROW(load_instance(path), ParseError);
}

TEST(LoadInstance, ShapeMismatchIsDimensionError) {
  std::string path = write_temp("bad_shape.mpj", R"({
    "m": 3, "k": 2, "n": 1,
    "A": [[1,0],[0,1],[1,1]],
    "b": [1,1],
    "U": [[1,1]],
    "c": [1,1]
  })");
  EXPECT_THROW(load_instance(path), DimensionError);
}

TEST(LoadInstance, RejectsUnbounded) {
  std::string path = write_temp("unbounded.mpj", R"({
    "m": 1, "k": 1, "n": 1, "A": [[-1]], "b": [0], "U": [[1]], "c": [1]
  })");
  EXPECT_THROW(load_instance(path), ValidationError);
}

TEST(LoadInstance, RationalPairsParseExactly) {
  std::string path = write_temp("rat.mpj", R"({
    "m": 2, "k": 1, "n": 1,
    "A": [[[1,3]],[[-1,1]]],
    "b": [[2,3],0],
    "U": [[[1,2]]],
    "c": [1]
  })");
  MaxParetoInstance inst = load_instance(path);
  EXPECT_EQ(inst.a(0, 0), Rational(1, 3));
  EXPECT_EQ(inst.b[0], Rational(2, 3));
  EXPECT_EQ(inst.payoff_map(0, 0), Rational(1, 2));
}

TEST(ValidateInstance, UnitBox) {
  MaxParetoInstance inst = testutil::unit_box_identity();
  ValidationReport rep = validate_instance(inst);
  EXPECT_TRUE(rep.nonempty);
  EXPECT_TRUE(rep.bounded);
}

TEST(ValidateInstance, RayIsUnbounded) {
  MaxParetoInstance inst;
  inst.a = Mat<Rational>{{Rational(-1)}};
  inst.b = {Rational(0)};
  inst.payoff_map = Mat<Rational>{{Rational(1)}};
  inst.objective = {Rational(1)};
  ValidationReport rep = validate_instance(inst);
  EXPECT_TRUE(rep.nonempty);
  EXPECT_FALSE(rep.bounded);
}

TEST(ValidateInstance, EmptySystem) {
  MaxParetoInstance inst;
  inst.a = Mat<Rational>{{Rational(1)}, {Rational(-1)}};
  inst.b = {Rational(-1), Rational(-1)};  // x <= -1 and x >= 1
  inst.payoff_map = Mat<Rational>{{Rational(1)}};
  inst.objective = {Rational(1)};
  ValidationReport rep = validate_instance(inst);
  EXPECT_FALSE(rep.nonempty);
  EXPECT_TRUE(rep.bounded);
}

TEST(Payoff, IdentityMap) {
  MaxParetoInstance inst = testutil::unit_box_identity();
  PayoffVector u = payoff(inst, {Rational(3, 10), Rational(7, 10)});
  EXPECT_EQ(u, (PayoffVector{Rational(3, 10), Rational(7, 10)}));
}

TEST(Payoff, SumMap) {
  MaxParetoInstance inst;
  inst.a = Mat<Rational>{{Rational(1), Rational(0)}};
  inst.b = {Rational(10)};
  inst.payoff_map = Mat<Rational>{{Rational(1), Rational(1)}};
  inst.objective = {Rational(0), Rational(0)};
  EXPECT_EQ(payoff(inst, {Rational(2), Rational(3)}), (PayoffVector{Rational(5)}));
}

TEST(Payoff, ZeroMap) {
  MaxParetoInstance inst = testutil::unit_box_identity();
  inst.payoff_map = Mat<Rational>(2, 2, Rational(0));
  EXPECT_EQ(payoff(inst, {Rational(1), Rational(1)}),
            (PayoffVector{Rational(0), Rational(0)}));
}

TEST(Payoff, WrongLengthThrows) {
  MaxParetoInstance inst = testutil::unit_box_identity();
  EXPECT_THROW(payoff(inst, {Rational(1)}), DimensionError);
}

TEST(Payoff, Linearity) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    MaxParetoInstance inst = testutil::random_boxed_instance(rng);
    std::vector<Rational> x(inst.num_vars()), y(inst.num_vars()), xy(inst.num_vars());
    for (int j = 0; j < inst.num_vars(); ++j) {
      x[j] = Rational(rng.uniform_int(-5, 5), 3);
      y[j] = Rational(rng.uniform_int(-5, 5), 7);
      xy[j] = x[j] + y[j];
    }
    PayoffVector ux = payoff(inst, x), uy = payoff(inst, y), uxy = payoff(inst, xy);
    for (int r = 0; r < inst.num_agents(); ++r) EXPECT_EQ(uxy[r], ux[r] + uy[r]);
  }
}

TEST(RoundTrip, SaveLoadIsIdentity) {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    MaxParetoInstance inst = testutil::random_boxed_instance(rng);
    // Sprinkle non-integer rationals to exercise the pair encoding.
    inst.objective[0] = Rational(rng.uniform_int(-9, 9), 7);
    std::string path = ::testing::TempDir() + "roundtrip.mpj";
    save_instance(inst, path);
    MaxParetoInstance back = load_instance(path);
    EXPECT_TRUE(inst == back);
  }
}

TEST(ContainsPoint, ExactAndTolerant) {
  MaxParetoInstance inst = testutil::unit_box_identity();
  EXPECT_TRUE(contains_point(inst, {Rational(1, 2), Rational(1, 2)},
                             NumericMode::exact()));
  EXPECT_FALSE(contains_point(inst, {Rational(2), Rational(0)},
                              NumericMode::exact()));
  // Tiny violation passes in float mode only.
  std::vector<Rational> near{Rational(1) + Rational(1, 1000000000000LL), Rational(0)};
  EXPECT_FALSE(contains_point(inst, near, NumericMode::exact()));
  EXPECT_TRUE(contains_point(inst, near, NumericMode::floating()));
}

}  // namespace
}  // namespace maxpareto
