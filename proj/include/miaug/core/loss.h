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

#ifndef MIAUG_CORE_LOSS_H_
#define MIAUG_CORE_LOSS_H_

#include <span>

#include "absl/status/statusor.h"

namespace miaug {

// -log softmax(logits)[label], evaluated with max-subtraction and log1p so
// that near-zero losses keep full relative precision.
absl::StatusOr<double> CrossEntropyLoss(std::span<const double> logits,
                                        int label);

// Unchecked variant for inner loops. When `probabilities` is non-empty it
// receives softmax(logits).
double CrossEntropyUnchecked(std::span<const double> logits, int label,
                             std::span<double> probabilities = {});

// mean(test_losses) - mean(train_losses).
absl::StatusOr<double> GeneralizationGap(std::span<const double> train_losses,
                                         std::span<const double> test_losses);

}  // namespace miaug

#endif  // MIAUG_CORE_LOSS_H_
