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

#include "miaug/harness/experiment.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "miaug/attacks/features.h"
#include "miaug/attacks/mi_network.h"
#include "miaug/core/invariant.h"
#include "miaug/core/rng.h"
#include "miaug/core/status_macros.h"
#include "miaug/target_model/datasets.h"
#include "miaug/target_model/extract.h"

namespace miaug {
namespace {

// Propagates `expr`'s error with a stage prefix.
#define MIAUG_STAGE(stage, lhs, rexpr)                                 \
  auto MIAUG_STAGE_CONCAT(stage_or_, __LINE__) = (rexpr);              \
  if (!MIAUG_STAGE_CONCAT(stage_or_, __LINE__).ok()) {                 \
    return AnnotateStage(stage,                                        \
                         MIAUG_STAGE_CONCAT(stage_or_, __LINE__).status()); \
  }                                                                    \
  lhs = *std::move(MIAUG_STAGE_CONCAT(stage_or_, __LINE__))
#define MIAUG_STAGE_CONCAT_INNER(a, b) a##b
#define MIAUG_STAGE_CONCAT(a, b) MIAUG_STAGE_CONCAT_INNER(a, b)

std::vector<MembershipRecord> InSplit(std::span<const MembershipRecord> records,
                                      Split split) {
  std::vector<MembershipRecord> out;
  for (const MembershipRecord& r : records) {
    if (r.split == split) out.push_back(r);
  }
  return out;
}

}  // namespace

absl::StatusOr<AttackResult> ScoreAttack(
    const std::string& name, const AttackModel& model,
    std::span<const MembershipRecord> records) {
  AttackResult result;
  result.attack = name;
  for (const MembershipRecord& r : records) {
    MIAUG_ASSIGN_OR_RETURN(const bool guess, ApplyAttack(model, r));
    if (r.member) {
      ++(guess ? result.tp : result.fn);
    } else {
      ++(guess ? result.fp : result.tn);
    }
  }
  const std::int64_t total = result.tp + result.tn + result.fp + result.fn;
  if (total == 0) return absl::InvalidArgumentError("no records to score");
  result.success_rate =
      static_cast<double>(result.tp + result.tn) / static_cast<double>(total);
  return result;
}

absl::Status CheckResultInvariants(const AttackResult& r) {
  const std::int64_t total = r.tp + r.tn + r.fp + r.fn;
  if (total == 0) return InvariantViolation(r.attack + ": empty evaluation");
  if (r.tp + r.fn != r.tn + r.fp) {
    return InvariantViolation(absl::StrCat(
        r.attack, ": evaluation set not balanced (", r.tp + r.fn,
        " members vs ", r.tn + r.fp, " non-members)"));
  }
  const double expected =
      static_cast<double>(r.tp + r.tn) / static_cast<double>(total);
  if (r.success_rate != expected) {
    return InvariantViolation(
        absl::StrCat(r.attack, ": success rate disagrees with counts"));
  }
  return absl::OkStatus();
}

std::vector<MembershipBit> DrawMembership(std::size_t count, double q,
                                          std::uint64_t master_seed) {
  RngStream rng(master_seed, "membership");
  std::vector<MembershipBit> bits(count);
  for (MembershipBit& b : bits) b.value = rng.Bernoulli(q);
  return bits;
}

absl::StatusOr<std::vector<MembershipRecord>> AssignSplits(
    std::span<const MembershipRecord> records, const AttackSpec& spec,
    std::uint64_t master_seed) {
  std::vector<std::size_t> members, nonmembers;
  for (std::size_t i = 0; i < records.size(); ++i) {
    (records[i].member ? members : nonmembers).push_back(i);
  }
  const auto want_m = static_cast<std::size_t>(spec.train_members);
  const auto want_n = static_cast<std::size_t>(spec.train_nonmembers);
  if (members.size() <= want_m || nonmembers.size() <= want_n) {
    return absl::FailedPreconditionError(absl::StrCat(
        "need more than ", want_m, " members and ", want_n,
        " non-members for the attack splits; have ", members.size(), " and ",
        nonmembers.size()));
  }
  RngStream rng_m(master_seed, "attack-split", 0);
  RngStream rng_n(master_seed, "attack-split", 1);
  rng_m.Shuffle(std::span<std::size_t>(members));
  rng_n.Shuffle(std::span<std::size_t>(nonmembers));

  const std::size_t eval_each =
      std::min(members.size() - want_m, nonmembers.size() - want_n);
  std::vector<MembershipRecord> out;
  auto take = [&](const std::vector<std::size_t>& pool, std::size_t train) {
    for (std::size_t t = 0; t < train + eval_each; ++t) {
      MembershipRecord r = records[pool[t]];
      r.split = t < train ? Split::kAttackTrain : Split::kAttackEval;
      out.push_back(std::move(r));
    }
  };
  take(members, want_m);
  take(nonmembers, want_n);
  std::sort(out.begin(), out.end(),
            [](const MembershipRecord& a, const MembershipRecord& b) {
              return a.sample_id < b.sample_id;
            });
  return out;
}

absl::StatusOr<SingleLossSelection> BestSingleLossProtocol(
    std::span<const MembershipRecord> records,
    std::span<const MembershipRecord> calibration_records) {
  if (records.empty() || calibration_records.empty()) {
    return absl::InvalidArgumentError("single-loss protocol needs records");
  }
  const std::size_t k = records.front().losses.size();
  bool has_original = true;
  for (auto group : {records, calibration_records}) {
    for (const MembershipRecord& r : group) {
      if (r.losses.size() != k) {
        return absl::InvalidArgumentError("records have different set sizes");
      }
      has_original = has_original && r.original_loss.has_value();
    }
  }
  std::vector<int> candidates;
  if (has_original) candidates.push_back(kOriginalLoss);
  for (std::size_t j = 0; j < k; ++j) candidates.push_back(static_cast<int>(j));

  // selection sees calibration labels only
  std::vector<bool> is_member;
  for (const MembershipRecord& r : calibration_records) {
    is_member.push_back(r.member);
  }
  std::optional<ThresholdModel> best;
  double best_accuracy = -1.0;
  for (int index : candidates) {
    std::vector<double> values;
    for (const MembershipRecord& r : calibration_records) {
      MIAUG_ASSIGN_OR_RETURN(
          const double v, StatisticValue(r, Statistic::kSingleLoss, index));
      values.push_back(v);
    }
    MIAUG_ASSIGN_OR_RETURN(const Calibration c,
                           CalibrateOnValues(values, is_member));
    if (c.balanced_accuracy > best_accuracy) {
      best_accuracy = c.balanced_accuracy;
      best = ThresholdModel{c.tau, Statistic::kSingleLoss, index};
    }
  }
  MIAUG_ASSIGN_OR_RETURN(AttackResult result,
                         ScoreAttack(kAttackLoss, *best, records));
  return SingleLossSelection{std::move(result), *best};
}

std::string ConfigFingerprint(const ExperimentConfig& config) {
  return absl::StrFormat("%016x", DeriveSeed(0, FormatFlatConfig(config)));
}

absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& config) {
  MIAUG_RETURN_IF_ERROR(AnnotateStage("config", config.Validate()));
  const std::uint64_t seed = config.master_seed;

  MIAUG_STAGE("data", const std::vector<Sample> dataset,
              GenerateDataset(config.data, seed));
  const std::vector<MembershipBit> membership =
      DrawMembership(dataset.size(), config.q, seed);
  MIAUG_STAGE("train", TrainedTarget target,
              TrainTarget(dataset, membership, config.data.num_classes,
                          config.k, config.pool, config.model, config.train,
                          seed));

  ExtractOptions extract;
  extract.k = config.AttackK();
  extract.reuse_training_transforms = config.ReuseTrainingTransforms();
  extract.train_k = config.k;
  MIAUG_STAGE("extract", const std::vector<MembershipRecord> raw,
              ExtractLossSets(target.model, dataset, membership, config.pool,
                              extract, seed));
  MIAUG_STAGE("split", std::vector<MembershipRecord> records,
              AssignSplits(raw, config.attack, seed));
  MIAUG_RETURN_IF_ERROR(AnnotateStage("split", [&]() -> absl::Status {
    const absl::Status s = CheckSplitsDisjoint(records);
    return s.ok() ? s : InvariantViolation(s.message());
  }()));
  const std::vector<MembershipRecord> train =
      InSplit(records, Split::kAttackTrain);
  const std::vector<MembershipRecord> eval =
      InSplit(records, Split::kAttackEval);

  ExperimentResult out;
  out.train = target.report;

  MIAUG_STAGE("attack M_loss", SingleLossSelection single,
              BestSingleLossProtocol(eval, train));
  out.single_loss_index = single.model.loss_index;
  out.attacks.push_back(single.result);
  out.models.push_back(single.model);

  MIAUG_STAGE("attack M_mean", const ThresholdModel mean_model,
              CalibrateThreshold(train, Statistic::kMeanLoss));
  MIAUG_STAGE("attack M_mean", AttackResult mean_result,
              ScoreAttack(kAttackMean, mean_model, eval));
  out.attacks.push_back(mean_result);
  out.models.push_back(mean_model);

  const MiNetworkHyperparams hp{config.attack.mi_epochs,
                                config.attack.mi_learning_rate,
                                config.attack.standardize};
  const struct {
    const char* name;
    FeatureBuilderKind kind;
  } networks[] = {{kAttackNnLoss, FeatureBuilderKind::kRawLoss},
                  {kAttackMoments, FeatureBuilderKind::kMoments}};
  for (const auto& spec : networks) {
    const FeatureBuilder builder{spec.kind, config.attack.moment_order};
    const std::string stage = absl::StrCat("attack ", spec.name);
    MIAUG_STAGE(stage, MINetwork net,
                TrainMiNetwork(train, builder, hp, DeriveSeed(seed, spec.name)));
    MIAUG_STAGE(stage, AttackResult result, ScoreAttack(spec.name, net, eval));
    out.attacks.push_back(std::move(result));
    out.models.push_back(std::move(net));
  }

  const std::string fingerprint = ConfigFingerprint(config);
  for (AttackResult& r : out.attacks) {
    r.k = config.k;
    r.gap = out.train.gap;
    r.seed = seed;
    r.config_fingerprint = fingerprint;
    MIAUG_RETURN_IF_ERROR(AnnotateStage("score", CheckResultInvariants(r)));
  }
  out.records = std::move(records);
  return out;
}

absl::StatusOr<std::vector<ExperimentResult>> SweepK(
    const ExperimentConfig& config, std::span<const int> k_values) {
  if (k_values.empty()) return absl::InvalidArgumentError("no k values");
  std::vector<ExperimentResult> runs;
  for (int k : k_values) {
    ExperimentConfig cell = config;
    cell.k = k;
    cell.attack.k = 0;  // attacker queries as many instances as training used
    MIAUG_STAGE(absl::StrCat("sweep k=", k), ExperimentResult run,
                RunExperiment(cell));
    runs.push_back(std::move(run));
  }
  return runs;
}

}  // namespace miaug
