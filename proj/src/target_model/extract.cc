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

#include "miaug/target_model/extract.h"

#include "miaug/augment/transform.h"
#include "miaug/core/rng.h"
#include "miaug/core/status_macros.h"
#include "miaug/target_model/trainer.h"

namespace miaug {

absl::StatusOr<std::vector<MembershipRecord>> ExtractLossSets(
    const TargetModel& model, std::span<const Sample> samples,
    std::span<const MembershipBit> membership, const PoolSpec& pool,
    const ExtractOptions& options, std::uint64_t master_seed) {
  if (options.k < 1) {
    return absl::InvalidArgumentError("loss extraction needs k >= 1");
  }
  if (samples.size() != membership.size()) {
    return absl::InvalidArgumentError("samples/membership size mismatch");
  }
  if (options.reuse_training_transforms && options.train_k != options.k) {
    return absl::InvalidArgumentError(
        "reusing training transforms requires train_k == k");
  }
  std::vector<MembershipRecord> records;
  records.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Sample& sample = samples[i];
    TransformSet set;
    if (options.reuse_training_transforms) {
      MIAUG_ASSIGN_OR_RETURN(
          set, TrainingTransformSet(master_seed, sample.id, options.k, pool));
    } else {
      RngStream rng(master_seed, "attack-transforms",
                    static_cast<std::uint64_t>(sample.id));
      MIAUG_ASSIGN_OR_RETURN(set, SampleTransformSet(rng, options.k, pool));
    }
    MIAUG_ASSIGN_OR_RETURN(std::vector<Sample> augmented,
                           AugmentSample(sample, set));
    MembershipRecord record;
    record.sample_id = sample.id;
    record.member = membership[i].value;
    record.split = Split::kAttackEval;
    record.losses.reserve(augmented.size());
    for (const Sample& a : augmented) {
      MIAUG_ASSIGN_OR_RETURN(const double loss, LossOracle(model, a));
      record.losses.push_back(loss);
    }
    MIAUG_ASSIGN_OR_RETURN(record.original_loss, LossOracle(model, sample));
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace miaug
