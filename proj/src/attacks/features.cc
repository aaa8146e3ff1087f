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

#include "miaug/attacks/features.h"

#include <algorithm>
#include <cmath>

#include "miaug/core/types.h"

namespace miaug {
namespace {

std::vector<double> Sorted(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

double SortedMean(const std::vector<double>& sorted) {
  double sum = 0.0;
  for (double v : sorted) sum += v;
  return sum / static_cast<double>(sorted.size());
}

}  // namespace

absl::StatusOr<double> MeanStatistic(std::span<const double> losses) {
  if (losses.empty()) return absl::InvalidArgumentError("loss set is empty");
  return SortedMean(Sorted(losses));
}

absl::StatusOr<FeatureVector> MomentFeatures(std::span<const double> losses,
                                             int m) {
  if (m < 1) return absl::InvalidArgumentError("moment order must be >= 1");
  if (auto status = ValidateLossSet(losses); !status.ok()) return status;
  const std::vector<double> sorted = Sorted(losses);
  FeatureVector features(static_cast<std::size_t>(m), 0.0);
  features[0] = SortedMean(sorted);
  const double top = sorted.back();
  if (top == 0.0) return features;
  // Scale by the maximum: no overflow for large i, and a constant set maps
  // to exactly 1 before rescaling.
  std::vector<double> ratios(sorted.size());
  for (std::size_t j = 0; j < sorted.size(); ++j) ratios[j] = sorted[j] / top;
  std::vector<double> powers = ratios;
  for (int i = 2; i <= m; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < powers.size(); ++j) {
      powers[j] *= ratios[j];
      sum += powers[j];
    }
    const double mean = sum / static_cast<double>(powers.size());
    features[static_cast<std::size_t>(i - 1)] = top * std::pow(mean, 1.0 / i);
  }
  return features;
}

absl::StatusOr<FeatureVector> RawLossFeatures(std::span<const double> losses) {
  if (losses.empty()) return absl::InvalidArgumentError("loss set is empty");
  return FeatureVector(losses.begin(), losses.end());
}

std::string_view FeatureBuilderName(const FeatureBuilder& builder) {
  return builder.kind == FeatureBuilderKind::kRawLoss ? "raw-loss" : "moments";
}

absl::StatusOr<FeatureVector> BuildFeatures(const FeatureBuilder& builder,
                                            std::span<const double> losses) {
  if (builder.kind == FeatureBuilderKind::kRawLoss) {
    return RawLossFeatures(losses);
  }
  return MomentFeatures(losses, builder.moment_order);
}

}  // namespace miaug
