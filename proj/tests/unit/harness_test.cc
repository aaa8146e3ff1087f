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

#include <algorithm>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "miaug/attacks/threshold.h"
#include "miaug/core/invariant.h"
#include "miaug/core/rng.h"
#include "miaug/harness/experiment.h"
#include "miaug/harness/histogram.h"
#include "miaug/harness/results_io.h"

namespace miaug {
namespace {

TEST(Histogram, IdenticalAndDisjoint) {
  const std::vector<double> a = {0.1, 0.2, 0.3, 0.9};
  EXPECT_NEAR(BuildHistogram(a, a)->overlap, 1.0, 1e-12);
  const std::vector<double> lo = {0.0, 0.1, 0.2};
  const std::vector<double> hi = {5.0, 5.5, 6.0};
  EXPECT_NEAR(BuildHistogram(lo, hi)->overlap, 0.0, 1e-12);
  const std::vector<double> same = {1.0, 1.0};
  EXPECT_EQ(BuildHistogram(same, same)->overlap, 1.0);
  EXPECT_FALSE(BuildHistogram({}, a).ok());
}

TEST(Histogram, DensitiesIntegrateToOne) {
  RngStream rng(1);
  std::vector<double> m, n;
  for (int i = 0; i < 500; ++i) {
    m.push_back(rng.Normal());
    n.push_back(rng.Normal() + 1.0);
  }
  const Histogram h = *BuildHistogram(m, n, 30);
  double sm = 0, sn = 0;
  for (int b = 0; b < 30; ++b) {
    sm += h.member_density[b] * h.bin_width;
    sn += h.nonmember_density[b] * h.bin_width;
  }
  EXPECT_NEAR(sm, 1.0, 1e-12);
  EXPECT_NEAR(sn, 1.0, 1e-12);
  EXPECT_GT(h.overlap, 0.3);
  EXPECT_LT(h.overlap, 0.9);
}

std::vector<MembershipRecord> SyntheticRecords(int n, int k, std::uint64_t seed) {
  RngStream rng(seed);
  std::vector<MembershipRecord> out;
  for (int i = 0; i < n; ++i) {
    MembershipRecord r;
    r.sample_id = i;
    r.member = rng.Bernoulli(0.5);
    for (int j = 0; j < k; ++j) {
      r.losses.push_back(rng.Uniform() * (r.member ? 1.0 : 1.0 + 0.2 * j));
    }
    r.original_loss = rng.Uniform() * (r.member ? 0.9 : 1.0);
    out.push_back(std::move(r));
  }
  return out;
}

TEST(SingleLoss, MatchesBruteForceSelection) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto calib = SyntheticRecords(120, 4, seed);
    const auto eval = SyntheticRecords(80, 4, seed + 100);
    std::vector<bool> member;
    for (const auto& r : calib) member.push_back(r.member);
    int best_index = 0;
    double best_acc = -1;
    double best_tau = 0;
    for (int index : {kOriginalLoss, 0, 1, 2, 3}) {
      std::vector<double> v;
      for (const auto& r : calib) {
        v.push_back(index == kOriginalLoss ? *r.original_loss
                                           : r.losses[index]);
      }
      const Calibration c = *CalibrateOnValues(v, member);
      if (c.balanced_accuracy > best_acc) {
        best_acc = c.balanced_accuracy;
        best_index = index;
        best_tau = c.tau;
      }
    }
    const auto got = BestSingleLossProtocol(eval, calib);
    ASSERT_TRUE(got.ok()) << got.status();
    EXPECT_EQ(got->model.loss_index, best_index);
    EXPECT_EQ(got->model.tau, best_tau);
    std::int64_t correct = 0;
    for (const auto& r : eval) {
      const double v = best_index == kOriginalLoss ? *r.original_loss
                                                   : r.losses[best_index];
      correct += (v < best_tau) == r.member;
    }
    EXPECT_EQ(got->result.tp + got->result.tn, correct);
  }
}

TEST(Splits, BalancedDisjointAndSeeded) {
  const auto records = SyntheticRecords(300, 2, 9);
  AttackSpec spec;
  spec.train_members = 50;
  spec.train_nonmembers = 40;
  const auto split = AssignSplits(records, spec, 3);
  ASSERT_TRUE(split.ok()) << split.status();
  int tm = 0, tn = 0, em = 0, en = 0;
  std::set<std::int64_t> ids;
  for (const auto& r : *split) {
    ids.insert(r.sample_id);
    if (r.split == Split::kAttackTrain) {
      ++(r.member ? tm : tn);
    } else {
      ++(r.member ? em : en);
    }
  }
  EXPECT_EQ(tm, 50);
  EXPECT_EQ(tn, 40);
  EXPECT_EQ(em, en);
  EXPECT_EQ(ids.size(), split->size());
  EXPECT_TRUE(CheckSplitsDisjoint(*split).ok());
  EXPECT_EQ(*AssignSplits(records, spec, 3), *split);
  spec.train_members = 1000;
  EXPECT_FALSE(AssignSplits(records, spec, 3).ok());
}

TEST(Invariants, UnbalancedResultIsViolation) {
  AttackResult r{"x", 1, 0.5, 2, 2, 2, 3, 0.0, 0, ""};
  EXPECT_TRUE(IsInvariantViolation(CheckResultInvariants(r)));
  r.fn = 2;
  EXPECT_TRUE(CheckResultInvariants(r).ok());
  r.success_rate = 0.4;
  EXPECT_TRUE(IsInvariantViolation(CheckResultInvariants(r)));
}

TEST(Membership, ApproximatelyBernoulli) {
  const auto bits = DrawMembership(10000, 0.3, 4);
  int ones = 0;
  for (auto b : bits) ones += b.value;
  EXPECT_NEAR(ones / 10000.0, 0.3, 0.02);
  EXPECT_EQ(DrawMembership(100, 0.3, 4),
            std::vector<MembershipBit>(bits.begin(), bits.begin() + 100));
}

ExperimentConfig Tiny() {
  ExperimentConfig c;
  c.k = 2;
  c.data.num_candidates = 240;
  c.model.hidden_sizes = {16};
  c.train.epochs = 20;
  c.attack.train_members = 40;
  c.attack.train_nonmembers = 40;
  c.attack.mi_epochs = 50;
  c.attack.moment_order = 3;
  return c;
}

TEST(Experiment, RunsAndIsReproducible) {
  const auto a = RunExperiment(Tiny());
  ASSERT_TRUE(a.ok()) << a.status();
  ASSERT_EQ(a->attacks.size(), 4u);
  EXPECT_EQ(a->attacks[0].attack, kAttackLoss);
  EXPECT_EQ(a->attacks[3].attack, kAttackMoments);
  for (const auto& r : a->attacks) {
    EXPECT_TRUE(CheckResultInvariants(r).ok());
    EXPECT_EQ(r.k, 2);
    EXPECT_EQ(r.config_fingerprint, ConfigFingerprint(Tiny()));
  }
  const auto b = RunExperiment(Tiny());
  ASSERT_TRUE(b.ok());
  EXPECT_EQ(FormatResultsCsv(a->attacks), FormatResultsCsv(b->attacks));
  const std::string csv = FormatResultsCsv(a->attacks);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "attack,k,success_rate,tp,tn,fp,fn,gap,seed");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

TEST(Experiment, StageErrorsArePrefixed) {
  ExperimentConfig c = Tiny();
  c.attack.train_members = 5000;
  const auto r = RunExperiment(c);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.status().message().substr(0, 6), "split:");
  c = Tiny();
  c.q = 2.0;
  EXPECT_EQ(RunExperiment(c).status().message().substr(0, 7), "config:");
}

TEST(Experiment, SweepAndSummary) {
  const std::vector<int> ks = {1, 2};
  const auto runs = SweepK(Tiny(), ks);
  ASSERT_TRUE(runs.ok()) << runs.status();
  ASSERT_EQ(runs->size(), 2u);
  EXPECT_EQ((*runs)[0].attacks[0].k, 1);
  EXPECT_EQ((*runs)[1].attacks[0].k, 2);
  const Histogram h =
      *EmitHistograms((*runs)[1].records, Statistic::kMeanLoss);
  EXPECT_EQ(h.statistic, "mean-loss");
  const auto doc = nlohmann::json::parse(
      FormatSummaryJson(Tiny(), *runs, std::vector<Histogram>{h}));
  EXPECT_EQ(doc["runs"].size(), 2u);
  EXPECT_EQ(doc["config"]["k"], "2");
  EXPECT_TRUE(doc["histogram_overlap"].contains("mean-loss"));
  const std::string hist = FormatHistogramCsv(std::vector<Histogram>{h});
  EXPECT_EQ(std::count(hist.begin(), hist.end(), '\n'), 1 + kHistogramBins);
}

}  // namespace
}  // namespace miaug
