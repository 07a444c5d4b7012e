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

#include "fdivbound/distribution.hpp"
#include "test_util.hpp"

using fdivbound::Distribution;
using fdivbound::Errc;
using fdivbound::Error;
using fdivbound::validate_distribution;

namespace {

using testutil::code_of;

TEST(Distribution, AcceptsNormalizedInput) {
  const Distribution d = validate_distribution({0.5, 0.25, 0.25});
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0], 0.5);
  EXPECT_EQ(d[1], 0.25);
  EXPECT_EQ(d[2], 0.25);
}

TEST(Distribution, PointMass) {
  const Distribution d = validate_distribution({1.0});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0], 1.0);
}

TEST(Distribution, Errors) {
  EXPECT_EQ(code_of([] { validate_distribution({0.5, -0.1, 0.6}); }), Errc::NegativeWeight);
  EXPECT_EQ(code_of([] { validate_distribution({}); }), Errc::EmptyVector);
  EXPECT_EQ(code_of([] { validate_distribution({0.5, 0.4}); }), Errc::SumOutOfTolerance);
  EXPECT_EQ(code_of([] { validate_distribution({0.5, std::nan("")}); }), Errc::NegativeWeight);
}

TEST(Distribution, RenormalizesWithinTolerance) {
  const Distribution d = validate_distribution({0.5 + 4e-10, 0.5});
  EXPECT_NEAR(d[0] + d[1], 1.0, 1e-16);
  EXPECT_GT(d[0], d[1]);
  EXPECT_EQ(code_of([] { validate_distribution({0.5 + 2e-9, 0.5}); }), Errc::SumOutOfTolerance);
}

TEST(Distribution, ZeroWeightsAllowed) {
  const Distribution d = validate_distribution({0.0, 1.0, 0.0});
  EXPECT_EQ(d[0], 0.0);
  EXPECT_EQ(d[1], 1.0);
}

}  // namespace
