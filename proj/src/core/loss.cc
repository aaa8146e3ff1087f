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

#include "miaug/core/loss.h"

#include <cmath>
#include <cstddef>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "miaug/core/numeric.h"

namespace miaug {

double CrossEntropyUnchecked(std::span<const double> logits, int label,
                             std::span<double> probabilities) {
  std::size_t top = 0;
  for (std::size_t i = 1; i < logits.size(); ++i) {
    if (logits[i] > logits[top]) top = i;
  }
  const double hi = logits[top];
  // Sum of exp(l_i - hi) over i != top; the top term contributes exactly 1.
  double rest = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    if (i != top) rest += std::exp(logits[i] - hi);
  }
  if (!probabilities.empty()) {
    const double norm = 1.0 + rest;
    for (std::size_t i = 0; i < logits.size(); ++i) {
      probabilities[i] = (i == top ? 1.0 : std::exp(logits[i] - hi)) / norm;
    }
  }
  return std::log1p(rest) - (logits[static_cast<std::size_t>(label)] - hi);
}

absl::StatusOr<double> CrossEntropyLoss(std::span<const double> logits,
                                        int label) {
  if (logits.empty()) {
    return absl::InvalidArgumentError("logits are empty");
  }
  if (label < 0 || static_cast<std::size_t>(label) >= logits.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "label ", label, " outside [0, ", logits.size(), ")"));
  }
  for (double l : logits) {
    if (!std::isfinite(l)) {
      return absl::InvalidArgumentError("logits must be finite");
    }
  }
  return CrossEntropyUnchecked(logits, label);
}

absl::StatusOr<double> GeneralizationGap(std::span<const double> train_losses,
                                         std::span<const double> test_losses) {
  if (train_losses.empty() || test_losses.empty()) {
    return absl::InvalidArgumentError(
        "generalization gap needs non-empty train and test losses");
  }
  return Mean(test_losses) - Mean(train_losses);
}

}  // namespace miaug
