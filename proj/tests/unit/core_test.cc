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
#include <cstdio>
#include <filesystem>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "miaug/core/config.h"
#include "miaug/core/invariant.h"
#include "miaug/core/loss.h"
#include "miaug/core/numeric.h"
#include "miaug/core/records_io.h"
#include "miaug/core/rng.h"
#include "miaug/core/types.h"

namespace miaug {
namespace {

TEST(CrossEntropy, UniformLogitsGiveLogClasses) {
  const std::vector<double> two = {0.0, 0.0};
  EXPECT_NEAR(*CrossEntropyLoss(two, 0), std::log(2.0), 1e-15);
  const std::vector<double> four = {3.0, 3.0, 3.0, 3.0};
  EXPECT_NEAR(*CrossEntropyLoss(four, 2), std::log(4.0), 1e-15);
}

TEST(CrossEntropy, ConfidentCorrectLogitKeepsRelativePrecision) {
  const std::vector<double> logits = {10.0, 0.0};
  // log(1 + e^-10), written out independently
  const double expected = std::log1p(std::exp(-10.0));
  const double got = *CrossEntropyLoss(logits, 0);
  EXPECT_NEAR(got, 4.5398899e-5, 1e-12);
  EXPECT_NEAR(got / expected, 1.0, 1e-14);
}

TEST(CrossEntropy, ShiftInvariant) {
  const std::vector<double> a = {0.3, -1.2, 2.5};
  std::vector<double> b = a;
  for (double& v : b) v += 700.0;
  EXPECT_NEAR(*CrossEntropyLoss(a, 1), *CrossEntropyLoss(b, 1), 1e-12);
}

TEST(CrossEntropy, RejectsBadInput) {
  const std::vector<double> logits = {0.0, 1.0};
  EXPECT_FALSE(CrossEntropyLoss(logits, 2).ok());
  EXPECT_FALSE(CrossEntropyLoss(logits, -1).ok());
  EXPECT_FALSE(CrossEntropyLoss({}, 0).ok());
  const std::vector<double> bad = {0.0, NAN};
  EXPECT_FALSE(CrossEntropyLoss(bad, 0).ok());
}

TEST(GeneralizationGap, DifferenceOfMeans) {
  const std::vector<double> train = {0.1, 0.3};
  const std::vector<double> test = {1.0, 2.0, 3.0};
  EXPECT_DOUBLE_EQ(*GeneralizationGap(train, test), 1.8);
  EXPECT_FALSE(GeneralizationGap({}, test).ok());
}

TEST(Numeric, SigmoidLogitRoundTrip) {
  for (double q : {0.01, 0.3, 0.5, 0.7, 0.99}) {
    EXPECT_NEAR(Sigmoid(Logit(q)), q, 1e-15);
  }
  EXPECT_EQ(Sigmoid(-800.0), 0.0);
  EXPECT_EQ(Sigmoid(800.0), 1.0);
}

TEST(Numeric, LogSumExpMatchesDirectSum) {
  const std::vector<double> v = {-1.0, 0.5, 2.0};
  double direct = 0.0;
  for (double x : v) direct += std::exp(x);
  EXPECT_NEAR(LogSumExp(v), std::log(direct), 1e-14);
  const std::vector<double> big = {1000.0, 1000.0};
  EXPECT_NEAR(LogSumExp(big), 1000.0 + std::log(2.0), 1e-12);
}

TEST(Rng, DeriveSeedIsPureAndLabelSensitive) {
  EXPECT_EQ(DeriveSeed(7, "a", 3), DeriveSeed(7, "a", 3));
  EXPECT_NE(DeriveSeed(7, "a", 3), DeriveSeed(7, "a", 4));
  EXPECT_NE(DeriveSeed(7, "a", 3), DeriveSeed(7, "b", 3));
  EXPECT_NE(DeriveSeed(7, "a", 3), DeriveSeed(8, "a", 3));
}

TEST(Rng, UniformIntIsUniform) {
  // chi-squared over 10 cells; the 0.999 quantile at 9 dof is 27.88
  RngStream rng(12345);
  constexpr int kCells = 10, kDraws = 100000;
  std::vector<int> counts(kCells, 0);
  for (int i = 0; i < kDraws; ++i) ++counts[rng.UniformInt(0, kCells - 1)];
  const double expected = static_cast<double>(kDraws) / kCells;
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, 27.88);
}

TEST(Rng, NormalMoments) {
  RngStream rng(99);
  double sum = 0.0, sq = 0.0;
  constexpr int kDraws = 200000;
  for (int i = 0; i < kDraws; ++i) {
    const double z = rng.Normal();
    sum += z;
    sq += z * z;
  }
  EXPECT_NEAR(sum / kDraws, 0.0, 0.01);
  EXPECT_NEAR(sq / kDraws, 1.0, 0.02);
}

TEST(Rng, ShuffleIsPermutation) {
  RngStream rng(3);
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 0);
  rng.Shuffle(std::span<int>(v));
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sorted[i], i);
}

TEST(Types, LossSetValidation) {
  EXPECT_TRUE(ValidateLossSet(std::vector<double>{0.0, 1.5}).ok());
  EXPECT_FALSE(ValidateLossSet({}).ok());
  EXPECT_FALSE(ValidateLossSet(std::vector<double>{-0.1}).ok());
  EXPECT_FALSE(ValidateLossSet(std::vector<double>{INFINITY}).ok());
}

TEST(Types, SplitNamesRoundTrip) {
  for (Split s : {Split::kAttackTrain, Split::kAttackEval}) {
    EXPECT_EQ(*ParseSplit(SplitName(s)), s);
  }
  EXPECT_FALSE(ParseSplit("holdout").ok());
}

TEST(Types, DisjointSplits) {
  std::vector<MembershipRecord> r(2);
  r[0].sample_id = 1;
  r[0].split = Split::kAttackTrain;
  r[1].sample_id = 1;
  r[1].split = Split::kAttackEval;
  EXPECT_FALSE(CheckSplitsDisjoint(r).ok());
  r[1].sample_id = 2;
  EXPECT_TRUE(CheckSplitsDisjoint(r).ok());
}

TEST(Records, LineRoundTripIsExact) {
  MembershipRecord r;
  r.sample_id = 42;
  r.member = true;
  r.split = Split::kAttackTrain;
  r.losses = {0.1, 1.0 / 3.0, 2.5e-17, 123.456};
  r.original_loss = std::nextafter(0.2, 1.0);
  const auto parsed = ParseRecordLine(FormatRecordLine(r));
  ASSERT_TRUE(parsed.ok()) << parsed.status();
  EXPECT_EQ(*parsed, r);
  r.original_loss.reset();
  EXPECT_EQ(*ParseRecordLine(FormatRecordLine(r)), r);
}

TEST(Records, FileRoundTripAndLineNumbers) {
  const std::string path =
      (std::filesystem::temp_directory_path() / "miaug_core_records.jsonl")
          .string();
  std::vector<MembershipRecord> records(3);
  for (int i = 0; i < 3; ++i) {
    records[i].sample_id = i;
    records[i].member = i % 2 == 0;
    records[i].losses = {0.5 * i, 1.0};
  }
  ASSERT_TRUE(WriteRecords(records, path).ok());
  const auto back = ReadRecords(path);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, records);

  std::FILE* f = std::fopen(path.c_str(), "a");
  std::fputs("{\"id\": 9, \"member\": true}\n", f);
  std::fclose(f);
  const auto broken = ReadRecords(path);
  ASSERT_FALSE(broken.ok());
  EXPECT_NE(broken.status().message().find("4"), absl::string_view::npos);
  std::filesystem::remove(path);
}

TEST(Records, RejectsNegativeLoss) {
  EXPECT_FALSE(ParseRecordLine(
                   R"({"id":1,"member":false,"split":"attack-eval","losses":[-1]})")
                   .ok());
}

TEST(Config, DefaultsValidateAndRoundTrip) {
  const ExperimentConfig base;
  ASSERT_TRUE(base.Validate().ok());
  const auto flat = ParseFlatConfig(FormatFlatConfig(base));
  ASSERT_TRUE(flat.ok()) << flat.status();
  const auto again = ApplyFlatConfig(ExperimentConfig(), *flat);
  ASSERT_TRUE(again.ok()) << again.status();
  EXPECT_EQ(FormatFlatConfig(*again), FormatFlatConfig(base));
}

TEST(Config, EveryListedKeyIsAccepted) {
  const auto keys = ExperimentConfigKeys();
  EXPECT_FALSE(keys.empty());
  for (const ConfigKey& key : keys) {
    FlatConfig one = {{key.key, key.default_value}};
    EXPECT_TRUE(ApplyFlatConfig(ExperimentConfig(), one).ok()) << key.key;
    EXPECT_FALSE(key.help.empty()) << key.key;
  }
}

TEST(Config, OverridesApply) {
  const auto flat = ParseFlatConfig(
      "# comment\nseed = 9\n\ntrain.epochs = 3  # trailing\nk = 2\n");
  ASSERT_TRUE(flat.ok()) << flat.status();
  const auto config = ApplyFlatConfig(ExperimentConfig(), *flat);
  ASSERT_TRUE(config.ok()) << config.status();
  EXPECT_EQ(config->master_seed, 9u);
  EXPECT_EQ(config->train.epochs, 3);
  EXPECT_EQ(config->k, 2);
}

TEST(Config, RejectsUnknownKeysAndBadValues) {
  EXPECT_FALSE(ApplyFlatConfig(ExperimentConfig(), {{"train.epoch", "3"}}).ok());
  EXPECT_FALSE(ApplyFlatConfig(ExperimentConfig(), {{"k", "eight"}}).ok());
  EXPECT_FALSE(ApplyFlatConfig(ExperimentConfig(), {{"q", "1.5"}}).ok());
  EXPECT_FALSE(ParseFlatConfig("no equals sign\n").ok());
}

TEST(Invariant, PayloadSurvivesAnnotation) {
  const absl::Status s = AnnotateStage("score", InvariantViolation("broken"));
  EXPECT_TRUE(IsInvariantViolation(s));
  EXPECT_NE(s.message().find("score: "), absl::string_view::npos);
  EXPECT_FALSE(IsInvariantViolation(absl::InternalError("x")));
}

}  // namespace
}  // namespace miaug
