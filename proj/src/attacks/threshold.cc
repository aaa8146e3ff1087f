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

#include "miaug/attacks/threshold.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "miaug/attacks/features.h"
#include "miaug/core/status_macros.h"

namespace miaug {

std::string_view StatisticName(Statistic statistic) {
  return statistic == Statistic::kSingleLoss ? "single-loss" : "mean-loss";
}

absl::StatusOr<double> StatisticValue(const MembershipRecord& record,
                                      Statistic statistic, int loss_index) {
  if (statistic == Statistic::kMeanLoss) return MeanStatistic(record.losses);
  if (loss_index == kOriginalLoss) {
    if (!record.original_loss.has_value()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "record ", record.sample_id, " carries no original-sample loss"));
    }
    return *record.original_loss;
  }
  if (loss_index < 0 ||
      static_cast<std::size_t>(loss_index) >= record.losses.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "loss index ", loss_index, " out of range for record ",
        record.sample_id));
  }
  return record.losses[static_cast<std::size_t>(loss_index)];
}

absl::StatusOr<Calibration> CalibrateOnValues(
    std::span<const double> values, const std::vector<bool>& is_member) {
  if (values.size() != is_member.size()) {
    return absl::InvalidArgumentError("values/labels size mismatch");
  }
  const auto positives = static_cast<double>(
      std::count(is_member.begin(), is_member.end(), true));
  const double negatives = static_cast<double>(values.size()) - positives;
  if (positives == 0 || negatives == 0) {
    return absl::FailedPreconditionError(
        "threshold calibration needs members and non-members");
  }
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                   std::size_t b) {
    return values[a] < values[b];
  });

  // Sweep tau upwards; everything strictly below tau is called a member.
  double tp = 0, tn = negatives;
  auto balanced = [&] { return 0.5 * (tp / positives + tn / negatives); };
  Calibration best{-std::numeric_limits<double>::infinity(), balanced()};
  std::size_t i = 0;
  while (i < order.size()) {
    const double v = values[order[i]];
    while (i < order.size() && values[order[i]] == v) {
      if (is_member[order[i]]) {
        tp += 1;
      } else {
        tn -= 1;
      }
      ++i;
    }
    const double tau = i < order.size()
                           ? 0.5 * (v + values[order[i]])
                           : std::numeric_limits<double>::infinity();
    if (balanced() > best.balanced_accuracy) best = {tau, balanced()};
  }
  return best;
}

absl::StatusOr<ThresholdModel> CalibrateThreshold(
    std::span<const MembershipRecord> records, Statistic statistic,
    int loss_index) {
  std::vector<double> values;
  std::vector<bool> members;
  values.reserve(records.size());
  for (const MembershipRecord& r : records) {
    MIAUG_ASSIGN_OR_RETURN(const double v,
                           StatisticValue(r, statistic, loss_index));
    values.push_back(v);
    members.push_back(r.member);
  }
  MIAUG_ASSIGN_OR_RETURN(const Calibration calibration,
                         CalibrateOnValues(values, members));
  return ThresholdModel{calibration.tau, statistic, loss_index};
}

absl::StatusOr<bool> MlossAttack(const MembershipRecord& record,
                                 const ThresholdModel& model) {
  if (model.statistic != Statistic::kSingleLoss) {
    return absl::InvalidArgumentError("M_loss needs a single-loss threshold");
  }
  MIAUG_ASSIGN_OR_RETURN(
      const double v,
      StatisticValue(record, Statistic::kSingleLoss, model.loss_index));
  return v < model.tau;
}

absl::StatusOr<bool> MmeanAttack(const MembershipRecord& record,
                                 const ThresholdModel& model) {
  if (model.statistic != Statistic::kMeanLoss) {
    return absl::InvalidArgumentError("M_mean needs a mean-loss threshold");
  }
  MIAUG_ASSIGN_OR_RETURN(const double v, MeanStatistic(record.losses));
  return v < model.tau;
}

}  // namespace miaug
