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

#ifndef MIAUG_ATTACKS_FEATURES_H_
#define MIAUG_ATTACKS_FEATURES_H_

#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace miaug {

using FeatureVector = std::vector<double>;

// Arithmetic mean of a loss set. The values are summed in sorted order, so
// the result depends only on the multiset: any reordering of `losses` gives
// a bit-identical value.
absl::StatusOr<double> MeanStatistic(std::span<const double> losses);

// Normalized raw moments v_i = (mean(l^i))^(1/i), i = 1..m (power means).
// v_1 is exactly MeanStatistic. Like the mean, the result is a function of
// the multiset only. Fails on negative losses.
absl::StatusOr<FeatureVector> MomentFeatures(std::span<const double> losses,
                                             int m);

// The losses in stored order. Deliberately sensitive to permutation.
absl::StatusOr<FeatureVector> RawLossFeatures(std::span<const double> losses);

enum class FeatureBuilderKind { kRawLoss, kMoments };

struct FeatureBuilder {
  FeatureBuilderKind kind = FeatureBuilderKind::kMoments;
  int moment_order = 10;

  bool operator==(const FeatureBuilder&) const = default;
};

std::string_view FeatureBuilderName(const FeatureBuilder& builder);

absl::StatusOr<FeatureVector> BuildFeatures(const FeatureBuilder& builder,
                                            std::span<const double> losses);

}  // namespace miaug

#endif  // MIAUG_ATTACKS_FEATURES_H_
