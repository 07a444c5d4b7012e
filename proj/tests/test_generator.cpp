// Copyright 2026 The fdivbound Authors
//
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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fdivbound/generator.hpp"
#include "test_util.hpp"

using namespace fdivbound;
using testutil::code_of;

namespace {

std::vector<Generator> named() {
  return {kl_generator(), tv_generator(), chi2_generator(), hellinger_generator(0.5), hellinger_generator(3.0),
          hellinger_generator(2.0)};
}

TEST(Generator, AnchorIsExactlyZero) {
  for (const auto& g : named()) EXPECT_EQ(g.eval(1.0), 0.0) << g.name();
}

TEST(Generator, HellingerTwoIsSquareMinusOne) {
  const Generator h = hellinger_generator(2.0);
  EXPECT_DOUBLE_EQ(h.eval(2.0), 3.0);
  for (double t : {0.01, 0.3, 1.7, 9.0, 250.0}) EXPECT_NEAR(h.eval(t), t * t - 1.0, 1e-12 * t * t);
}

TEST(Generator, LimitFields) {
  EXPECT_EQ(kl_generator().f_at_zero(), ExtendedReal(0.0));
  EXPECT_TRUE(kl_generator().slope_at_infinity().is_pos_inf());
  EXPECT_EQ(tv_generator().f_at_zero(), ExtendedReal(0.5));
  EXPECT_EQ(tv_generator().slope_at_infinity(), ExtendedReal(0.5));
  EXPECT_EQ(chi2_generator().f_at_zero(), ExtendedReal(-1.0));
  EXPECT_TRUE(chi2_generator().slope_at_infinity().is_pos_inf());
  EXPECT_EQ(hellinger_generator(0.5).f_at_zero(), ExtendedReal(2.0));
  EXPECT_EQ(hellinger_generator(0.5).slope_at_infinity(), ExtendedReal(0.0));
  EXPECT_EQ(hellinger_generator(3.0).f_at_zero(), ExtendedReal(-0.5));
  EXPECT_TRUE(hellinger_generator(3.0).slope_at_infinity().is_pos_inf());
}

// The stored limits must agree with what eval does near 0 and at large t.
TEST(Generator, LimitFieldsMatchSampledBehaviour) {
  for (const auto& g : named()) {
    if (g.f_at_zero().is_finite()) {
      double prev = std::abs(g.eval(1e-2) - g.f_at_zero().value());
      for (double t = 1e-4; t >= 1e-12; t *= 1e-2) {
        const double err = std::abs(g.eval(t) - g.f_at_zero().value());
        EXPECT_LE(err, prev + 1e-15) << g.name() << " at t=" << t;
        prev = err;
      }
      EXPECT_LT(prev, 1e-5) << g.name();
    }
    if (g.slope_at_infinity().is_finite()) {
      const double s = g.slope_at_infinity().value();
      EXPECT_NEAR(g.eval(1e12) / 1e12, s, 1e-5) << g.name();
    } else {
      EXPECT_GT(g.eval(1e12) / 1e12, 20.0) << g.name();
    }
  }
}

TEST(Generator, MidpointConvexityOnSamples) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(std::log(1e-6), std::log(1e6));
  for (const auto& g : named()) {
    for (int i = 0; i < 500; ++i) {
      const double s = std::exp(u(rng));
      const double t = std::exp(u(rng));
      const double lhs = g.eval(0.5 * (s + t));
      const double rhs = 0.5 * (g.eval(s) + g.eval(t));
      EXPECT_LE(lhs, rhs + 1e-9 * (1.0 + std::abs(rhs))) << g.name();
    }
  }
}

TEST(Generator, InvalidAlpha) {
  EXPECT_EQ(code_of([] { hellinger_generator(1.0); }), Errc::InvalidAlpha);
  EXPECT_EQ(code_of([] { hellinger_generator(0.0); }), Errc::InvalidAlpha);
  EXPECT_EQ(code_of([] { hellinger_generator(-2.0); }), Errc::InvalidAlpha);
}

TEST(Generator, ValueAtZeroUsesLimit) {
  EXPECT_EQ(tv_generator().value_at(0.0), ExtendedReal(0.5));
  EXPECT_EQ(tv_generator().value_at(3.0), ExtendedReal(1.0));
  EXPECT_EQ(code_of([] { tv_generator().value_at(-1.0); }), Errc::InvalidParams);
}

TEST(CustomGenerator, AcceptsConvexAnchoredFunctions) {
  const Generator sq = custom_generator([](double t) { return (t - 1.0) * (t - 1.0); }, 1.0,
                                        ExtendedReal::inf(), "pearson");
  EXPECT_EQ(sq.name(), "pearson");
  EXPECT_EQ(sq.eval(3.0), 4.0);
  const Generator lin = custom_generator([](double t) { return t - 1.0; }, -1.0, 1.0, "linear");
  EXPECT_EQ(lin.eval(1.0), 0.0);
}

TEST(CustomGenerator, RejectsConcave) {
  EXPECT_EQ(code_of([] {
              custom_generator([](double t) { return -t * t + 1.0; }, 1.0, ExtendedReal::neg_inf(), "concave");
            }),
            Errc::FailsConvexitySample);
  EXPECT_EQ(code_of([] { custom_generator([](double t) { return -t * t; }, 0.0, 0.0, "neg-square"); }),
            Errc::FailsConvexitySample);
}

TEST(CustomGenerator, RejectsBadAnchorAndLimits) {
  EXPECT_EQ(code_of([] { custom_generator([](double t) { return t * t; }, 0.0, ExtendedReal::inf(), "t2"); }),
            Errc::FailsAnchorCheck);
  EXPECT_EQ(code_of([] {
              custom_generator([](double t) { return t - 1.0; }, ExtendedReal::neg_inf(), 1.0, "bad-limit");
            }),
            Errc::InvalidParams);
}

TEST(CustomGenerator, RejectsNonFiniteValues) {
  EXPECT_EQ(code_of([] {
              custom_generator([](double t) { return t > 1e5 ? INFINITY : t - 1.0; }, -1.0, 1.0, "blowup");
            }),
            Errc::FailsConvexitySample);
}

}  // namespace
