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

#ifndef MIAUG_ATTACKS_THRESHOLD_H_
#define MIAUG_ATTACKS_THRESHOLD_H_

#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "miaug/core/types.h"

namespace miaug {

enum class Statistic { kSingleLoss, kMeanLoss };

std::string_view StatisticName(Statistic statistic);

// Index into MembershipRecord::losses meaning "the original-sample loss".
inline constexpr int kOriginalLoss = -1;

// Decision rule: member <=> statistic(record) < tau (strict).
struct ThresholdModel {
  double tau = 0.0;
  Statistic statistic = Statistic::kMeanLoss;
  // For kSingleLoss: which loss the statistic reads (an element index, or
  // kOriginalLoss). Ignored for kMeanLoss.
  int loss_index = kOriginalLoss;

  bool operator==(const ThresholdModel&) const = default;
};

absl::StatusOr<double> StatisticValue(const MembershipRecord& record,
                                      Statistic statistic,
                                      int loss_index = kOriginalLoss);

struct Calibration {
  double tau = 0.0;
  double balanced_accuracy = 0.0;
};

// Threshold maximizing balanced accuracy of "value < tau" against
// `is_member`. Candidates are -inf, the midpoints between consecutive
// distinct sorted values and +inf; ties go to the smallest tau. Needs both
// classes.
absl::StatusOr<Calibration> CalibrateOnValues(std::span<const double> values,
                                              const std::vector<bool>& is_member);

absl::StatusOr<ThresholdModel> CalibrateThreshold(
    std::span<const MembershipRecord> records, Statistic statistic,
    int loss_index = kOriginalLoss);

// M_loss: threshold on one loss value. Fails if the model reads the
// original-sample loss and the record does not carry it.
absl::StatusOr<bool> MlossAttack(const MembershipRecord& record,
                                 const ThresholdModel& model);

// M_mean: member <=> MeanStatistic(losses) < tau.
absl::StatusOr<bool> MmeanAttack(const MembershipRecord& record,
                                 const ThresholdModel& model);

}  // namespace miaug

#endif  // MIAUG_ATTACKS_THRESHOLD_H_
