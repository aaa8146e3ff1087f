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

#ifndef MIAUG_HARNESS_HISTOGRAM_H_
#define MIAUG_HARNESS_HISTOGRAM_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "miaug/attacks/threshold.h"
#include "miaug/core/types.h"

namespace miaug {

inline constexpr int kHistogramBins = 50;

struct Histogram {
  std::string statistic;  // e.g. "mean-loss", "single-loss[3]"
  double lower = 0.0;
  double upper = 0.0;
  double bin_width = 0.0;
  std::vector<double> member_density;
  std::vector<double> nonmember_density;
  // sum over bins of min(member, non-member density) * bin width
  double overlap = 0.0;
};

// Equal-width bins over the pooled range of both classes. A degenerate
// range (all values equal) is one bin and overlap 1.
absl::StatusOr<Histogram> BuildHistogram(std::span<const double> member_values,
                                         std::span<const double> nonmember_values,
                                         int bins = kHistogramBins);

// Histogram of a record statistic, split by membership.
absl::StatusOr<Histogram> EmitHistograms(std::span<const MembershipRecord> records,
                                         Statistic statistic,
                                         int loss_index = kOriginalLoss);

}  // namespace miaug

#endif  // MIAUG_HARNESS_HISTOGRAM_H_
