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
#include <vector>

#include "gtest/gtest.h"
#include "miaug/bayes_oracle/entropy.h"
#include "miaug/bayes_oracle/oracle.h"
#include "miaug/bayes_oracle/suite.h"
#include "miaug/bayes_oracle/world.h"
#include "miaug/core/rng.h"

namespace miaug {
namespace {

// Two samples, two grid points, one instance each.
// losses[g][i]
DiscreteWorld TwoByTwo(double q, double gamma,
                       const std::vector<std::vector<double>>& losses) {
  std::vector<double> flat;
  for (const auto& row : losses)
    for (double l : row) flat.push_back(l);
  return DiscreteWorld({{0.0}, {1.0}}, 2, 1, q, gamma, flat);
}

// P(m_1 = 1 | theta_g) written out for the 2 x 2 world.
double HandPosterior(double q, double gamma,
                     const std::vector<std::vector<double>>& L, int g) {
  double num = 0.0, den = 0.0;
  for (int m1 = 0; m1 < 2; ++m1) {
    for (int m2 = 0; m2 < 2; ++m2) {
      const double prior = (m1 ? q : 1 - q) * (m2 ? q : 1 - q);
      auto energy = [&](int h) {
        return std::exp(-(m1 * L[h][0] + m2 * L[h][1]) / gamma);
      };
      const double lik = energy(g) / (energy(0) + energy(1));
      den += prior * lik;
      if (m1) num += prior * lik;
    }
  }
  return num / den;
}

TEST(Oracle, HandComputedWorld) {
  const std::vector<std::vector<double>> L = {{0.2, 1.5}, {2.0, 0.3}};
  for (double gamma : {0.1, 1.0, 10.0}) {
    for (double q : {0.3, 0.5, 0.7}) {
      const DiscreteWorld w = TwoByTwo(q, gamma, L);
      for (int g = 0; g < 2; ++g) {
        const double want = HandPosterior(q, gamma, L, g);
        EXPECT_NEAR(*DirectPosteriorMi(w, g), want, 1e-13);
        EXPECT_NEAR(*OptimalMiTheorem1(w, g), want, 1e-13);
        EXPECT_NEAR(*OptimalMiTheorem2(w, g), want, 1e-13);
      }
    }
  }
}

TEST(Oracle, LowLossMeansMember) {
  const std::vector<std::vector<double>> L = {{0.0, 1.0}, {5.0, 1.0}};
  const DiscreteWorld w = TwoByTwo(0.5, 1.0, L);
  EXPECT_GT(*OptimalMiTheorem2(w, 0), 0.5);
  EXPECT_LT(*OptimalMiTheorem2(w, 1), 0.5);
}

TEST(Oracle, HugeTemperatureGivesPrior) {
  RngStream rng(1);
  WorldOptions opts;
  opts.q = 0.3;
  opts.gamma = 1e12;
  const DiscreteWorld w = RandomWorld(opts, rng);
  EXPECT_NEAR(*OptimalMiTheorem1(w, 4), 0.3, 1e-9);
  EXPECT_NEAR(*OptimalMiTheorem2(w, 4), 0.3, 1e-9);
}

TEST(Oracle, DegeneratePriors) {
  RngStream rng(2);
  WorldOptions opts;
  for (double q : {0.0, 1.0}) {
    opts.q = q;
    const DiscreteWorld w = RandomWorld(opts, rng);
    EXPECT_EQ(*DirectPosteriorMi(w, 3), q);
    EXPECT_EQ(*OptimalMiTheorem1(w, 3), q);
    EXPECT_EQ(*OptimalMiTheorem2(w, 3), q);
  }
}

TEST(Oracle, PosteriorNormalizes) {
  RngStream rng(3);
  const DiscreteWorld w = RandomWorld(WorldOptions{}, rng);
  for (MembershipConfig c = 0; c < 16; ++c) {
    const std::vector<double> post = *Posterior(w, c);
    double total = 0.0;
    for (double p : post) total += p;
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
  EXPECT_FALSE(Posterior(w, 1u << 6).ok());
  EXPECT_FALSE(DirectPosteriorMi(w, w.grid_size()).ok());
}

TEST(Oracle, RandomWorldsAgree) {
  RngStream rng(4);
  for (int t = 0; t < 20; ++t) {
    WorldOptions opts;
    opts.num_samples = 3 + t % 4;
    opts.k = 1 + t % 3;
    opts.gamma = t % 2 ? 0.1 : 10.0;
    const DiscreteWorld w = RandomWorld(opts, rng);
    for (int g = 0; g < w.grid_size(); g += 5) {
      const double direct = *DirectPosteriorMi(w, g);
      EXPECT_NEAR(*OptimalMiTheorem1(w, g), direct, 1e-10);
      EXPECT_NEAR(*OptimalMiTheorem2(w, g), direct, 1e-10);
    }
  }
}

TEST(World, ValidateRejectsBadWorlds) {
  EXPECT_FALSE(DiscreteWorld({{0.0}}, 1, 1, 1.5, 1.0, {0.0}).Validate().ok());
  EXPECT_FALSE(DiscreteWorld({{0.0}}, 1, 1, 0.5, 0.0, {0.0}).Validate().ok());
  EXPECT_FALSE(DiscreteWorld({{0.0}}, 1, 1, 0.5, 1.0, {-1.0}).Validate().ok());
  EXPECT_FALSE(DiscreteWorld({{0.0}}, 1, 2, 0.5, 1.0, {0.0}).Validate().ok());
  EXPECT_TRUE(DiscreteWorld({{0.0}}, 1, 1, 0.5, 1.0, {0.0}).Validate().ok());
  EXPECT_EQ(TernaryGrid(3).size(), 27u);
}

TEST(World, SetLossTracksEdits) {
  DiscreteWorld w({{0.0}, {1.0}}, 1, 2, 0.5, 1.0, {0.1, 0.2, 0.3, 0.4});
  EXPECT_DOUBLE_EQ(w.SetLoss(1, 0), 0.7);
  w.SetInstanceLoss(1, 0, 1, 1.0);
  EXPECT_DOUBLE_EQ(w.SetLoss(1, 0), 1.3);
}

TEST(Entropy, IdentitySetsTie) {
  RngStream rng(5);
  EntropyWorldOptions opts;
  opts.deterministic = true;
  for (int t = 0; t < 10; ++t) {
    const auto check = EntropyInequalityCheck(RandomEntropyWorld(opts, rng));
    ASSERT_TRUE(check.ok()) << check.status();
    EXPECT_NEAR(check->h_given_set, check->h_given_variant, 1e-12);
  }
}

TEST(Entropy, DeterministicMembershipHasNoEntropy) {
  RngStream rng(6);
  EntropyWorldOptions opts;
  opts.base.q = 1.0;
  const auto check = EntropyInequalityCheck(RandomEntropyWorld(opts, rng));
  ASSERT_TRUE(check.ok());
  EXPECT_EQ(check->h_given_set, 0.0);
  EXPECT_EQ(check->h_given_variant, 0.0);
}

TEST(Entropy, BoundedByPriorEntropy) {
  RngStream rng(7);
  const double q = 0.5;
  for (int t = 0; t < 10; ++t) {
    const auto check =
        EntropyInequalityCheck(RandomEntropyWorld(EntropyWorldOptions{}, rng));
    ASSERT_TRUE(check.ok());
    const double prior = -q * std::log(q) - (1 - q) * std::log(1 - q);
    EXPECT_LE(check->h_given_set, prior + 1e-12);
    EXPECT_LE(check->h_given_variant, prior + 1e-12);
  }
}

TEST(Suite, SmallRunPasses) {
  OracleSuiteOptions opts;
  opts.num_worlds = 8;
  const auto report = RunOracleSuite(opts);
  ASSERT_TRUE(report.ok()) << report.status();
  EXPECT_TRUE(report->passed);
  EXPECT_EQ(report->worlds, 8);
  EXPECT_LE(report->max_error_theorem1, 1e-10);
  EXPECT_LE(report->max_error_theorem2, 1e-10);
  EXPECT_EQ(report->monotonicity_violations, 0);
  EXPECT_EQ(report->entropy_aug_lower + report->entropy_equal +
                report->entropy_aug_higher,
            8);
  EXPECT_NE(FormatOracleReport(*report).find("max_abs_error_theorem1"),
            std::string::npos);
}

}  // namespace
}  // namespace miaug
