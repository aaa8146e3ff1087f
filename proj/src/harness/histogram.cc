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

#include "miaug/harness/histogram.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "miaug/core/status_macros.h"

namespace miaug {

absl::StatusOr<Histogram> BuildHistogram(std::span<const double> member_values,
                                         std::span<const double> nonmember_values,
                                         int bins) {
  if (member_values.empty() || nonmember_values.empty()) {
    return absl::InvalidArgumentError("histogram needs both classes");
  }
  if (bins < 1) return absl::InvalidArgumentError("bins must be >= 1");
  double lo = member_values.front(), hi = member_values.front();
  for (auto values : {member_values, nonmember_values}) {
    for (double v : values) {
      if (!std::isfinite(v)) {
        return absl::InvalidArgumentError("histogram values must be finite");
      }
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  Histogram h;
  h.lower = lo;
  h.upper = hi;
  if (hi == lo) {
    h.bin_width = 1.0;
    h.member_density = {1.0};
    h.nonmember_density = {1.0};
    h.overlap = 1.0;
    return h;
  }
  h.bin_width = (hi - lo) / bins;
  auto density = [&](std::span<const double> values) {
    std::vector<double> d(static_cast<std::size_t>(bins), 0.0);
    for (double v : values) {
      const int b = std::min(bins - 1, static_cast<int>((v - lo) / h.bin_width));
      d[static_cast<std::size_t>(b)] += 1.0;
    }
    const double scale = 1.0 / (static_cast<double>(values.size()) * h.bin_width);
    for (double& x : d) x *= scale;
    return d;
  };
  h.member_density = density(member_values);
  h.nonmember_density = density(nonmember_values);
  for (int b = 0; b < bins; ++b) {
    h.overlap += std::min(h.member_density[b], h.nonmember_density[b]) *
                 h.bin_width;
  }
  return h;
}

absl::StatusOr<Histogram> EmitHistograms(std::span<const MembershipRecord> records,
                                         Statistic statistic, int loss_index) {
  if (records.empty()) return absl::InvalidArgumentError("no records");
  std::vector<double> member, nonmember;
  for (const MembershipRecord& r : records) {
    MIAUG_ASSIGN_OR_RETURN(const double v,
                           StatisticValue(r, statistic, loss_index));
    (r.member ? member : nonmember).push_back(v);
  }
  MIAUG_ASSIGN_OR_RETURN(Histogram h, BuildHistogram(member, nonmember));
  if (statistic == Statistic::kMeanLoss) {
    h.statistic = "mean-loss";
  } else if (loss_index == kOriginalLoss) {
    h.statistic = "single-loss[original]";
  } else {
    h.statistic = absl::StrCat("single-loss[", loss_index, "]");
  }
  return h;
}

}  // namespace miaug
