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

#ifndef MIAUG_HARNESS_EXPERIMENT_H_
#define MIAUG_HARNESS_EXPERIMENT_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "miaug/attacks/checkpoint.h"
#include "miaug/core/config.h"
#include "miaug/core/types.h"
#include "miaug/target_model/trainer.h"

namespace miaug {

inline constexpr const char* kAttackLoss = "M_loss";
inline constexpr const char* kAttackMean = "M_mean";
inline constexpr const char* kAttackNnLoss = "M_NN_loss";
inline constexpr const char* kAttackMoments = "M_moments";

struct AttackResult {
  std::string attack;
  int k = 0;
  double success_rate = 0.0;  // (tp + tn) / (tp + tn + fp + fn)
  std::int64_t tp = 0, tn = 0, fp = 0, fn = 0;
  double gap = 0.0;  // generalization gap of the target
  std::uint64_t seed = 0;
  std::string config_fingerprint;
};

// Tallies decisions of `model` over `records`.
absl::StatusOr<AttackResult> ScoreAttack(const std::string& name,
                                         const AttackModel& model,
                                         std::span<const MembershipRecord> records);

// Balanced accuracy equality, balanced set, disjoint splits.
absl::Status CheckResultInvariants(const AttackResult& result);

// Independent Bernoulli(q) membership bits from the stream ("membership").
std::vector<MembershipBit> DrawMembership(std::size_t count, double q,
                                          std::uint64_t master_seed);

// Moves attack.train_members members and attack.train_nonmembers
// non-members (drawn from the stream "attack-split") into attack-train and
// keeps an evaluation split balanced by downsampling the larger class. The
// dropped records are not returned.
absl::StatusOr<std::vector<MembershipRecord>> AssignSplits(
    std::span<const MembershipRecord> records, const AttackSpec& spec,
    std::uint64_t master_seed);

struct SingleLossSelection {
  AttackResult result;
  ThresholdModel model;
};

// Every candidate (original-sample loss when all records carry it, then
// each element index) gets a threshold calibrated on
// `calibration_records`. The candidate with the best calibration balanced
// accuracy (earlier candidates on ties) is scored on `records`. Choosing on
// evaluation labels instead would bias the baseline upward by the max over
// k + 1 noisy scores.
absl::StatusOr<SingleLossSelection> BestSingleLossProtocol(
    std::span<const MembershipRecord> records,
    std::span<const MembershipRecord> calibration_records);

struct ExperimentResult {
  TrainReport train;
  std::vector<AttackResult> attacks;  // M_loss, M_mean, M_NN_loss, M_moments
  std::vector<MembershipRecord> records;  // both splits
  int single_loss_index = kOriginalLoss;  // chosen by the M_loss protocol
  std::vector<AttackModel> models;        // parallel to `attacks`
};

// Data -> membership -> target training -> loss extraction -> splits ->
// attack calibration on attack-train -> scoring on attack-eval. Errors are
// prefixed with the failing stage.
absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& config);

// One fresh target per k (the attacker uses the same k).
absl::StatusOr<std::vector<ExperimentResult>> SweepK(
    const ExperimentConfig& config, std::span<const int> k_values);

// Short stable hash of the resolved configuration.
std::string ConfigFingerprint(const ExperimentConfig& config);

}  // namespace miaug

#endif  // MIAUG_HARNESS_EXPERIMENT_H_
