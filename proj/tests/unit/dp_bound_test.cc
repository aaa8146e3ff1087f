// Copyright 2026 The miaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "gtest/gtest.h"
#include "miaug/core/invariant.h"
#include "miaug/dp_bound/dp_bound.h"

namespace miaug {
namespace {

TEST(MiUpperBound, ZeroEpsilonIsPriorExactly) {
  for (double q : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0, 1.0 / 3.0}) {
    EXPECT_EQ(*MiUpperBound(DpParams{0.0, 1, q}), q);
  }
}

TEST(MiUpperBound, ClosedForm) {
  for (double eps : {0.5, 1.0, 2.0}) {
    for (double q : {0.3, 0.5, 0.7}) {
      const double want = q * std::exp(eps) / (q * std::exp(eps) + 1 - q);
      EXPECT_NEAR(*MiUpperBound(DpParams{eps, 4, q}), want, 1e-15);
    }
  }
  EXPECT_EQ(*MiUpperBound(DpParams{3.0, 1, 0.0}), 0.0);
  EXPECT_EQ(*MiUpperBound(DpParams{3.0, 1, 1.0}), 1.0);
}

TEST(MiUpperBound, RejectsBadParams) {
  EXPECT_FALSE(MiUpperBound(DpParams{-1.0, 1, 0.5}).ok());
  EXPECT_FALSE(MiUpperBound(DpParams{NAN, 1, 0.5}).ok());
  EXPECT_FALSE(MiUpperBound(DpParams{1.0, 0, 0.5}).ok());
  EXPECT_FALSE(MiUpperBound(DpParams{1.0, 1, 1.1}).ok());
}

TEST(WorldCheck, NoViolationsAndTightAtZero) {
  for (double eps : {0.0, 1.0}) {
    const auto report = RandomizedWorldCheck(DpParams{eps, 2, 0.3}, 10, 5);
    ASSERT_TRUE(report.ok()) << report.status();
    EXPECT_EQ(report->violations, 0);
    EXPECT_LE(report->max_ratio, 1.0 + 1e-12);
  }
  EXPECT_FALSE(RandomizedWorldCheck(DpParams{1.0, 1, 0.5}, 0, 1).ok());
}

TEST(WorldCheck, Deterministic) {
  const auto a = RandomizedWorldCheck(DpParams{0.5, 3, 0.7}, 5, 11);
  const auto b = RandomizedWorldCheck(DpParams{0.5, 3, 0.7}, 5, 11);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(a->max_posterior, b->max_posterior);
  EXPECT_EQ(a->evaluations, b->evaluations);
}

}  // namespace
}  // namespace miaug
