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

#ifndef MIAUG_TARGET_MODEL_EXTRACT_H_
#define MIAUG_TARGET_MODEL_EXTRACT_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "miaug/core/config.h"
#include "miaug/core/types.h"
#include "miaug/target_model/target_model.h"

namespace miaug {

struct ExtractOptions {
  // Augmented queries per sample.
  int k = 1;
  // Query with the sample's training-time transform set (drawn with
  // `train_k` pipelines) instead of a fresh draw.
  bool reuse_training_transforms = false;
  int train_k = 0;
};

// For every sample: draws a transform set of size k from the stream
// ("attack-transforms", sample id), queries LossOracle on each augmented
// instance and on the original sample, and packages a MembershipRecord.
// All records are placed in the attack-eval split; see AssignSplits.
absl::StatusOr<std::vector<MembershipRecord>> ExtractLossSets(
    const TargetModel& model, std::span<const Sample> samples,
    std::span<const MembershipBit> membership, const PoolSpec& pool,
    const ExtractOptions& options, std::uint64_t master_seed);

}  // namespace miaug

#endif  // MIAUG_TARGET_MODEL_EXTRACT_H_
