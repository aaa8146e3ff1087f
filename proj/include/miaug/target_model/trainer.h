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

#ifndef MIAUG_TARGET_MODEL_TRAINER_H_
#define MIAUG_TARGET_MODEL_TRAINER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "miaug/augment/transform.h"
#include "miaug/core/config.h"
#include "miaug/core/types.h"
#include "miaug/target_model/target_model.h"

namespace miaug {

struct TrainReport {
  double train_loss = 0.0;  // mean loss over members (original samples)
  double test_loss = 0.0;   // mean loss over non-members; NaN if none
  double gap = 0.0;         // test_loss - train_loss; NaN if no non-members
  double train_accuracy = 0.0;
  double test_accuracy = 0.0;
  int epochs_run = 0;
  // mean loss over the augmented training instances after the last epoch
  double instance_loss = 0.0;
};

struct TrainedTarget {
  TargetModel model;
  TrainReport report;
};

// Transform set a member is trained with. Drawn from the stream
// ("train-transforms", sample id); `epoch` only matters when transforms are
// resampled every epoch.
absl::StatusOr<TransformSet> TrainingTransformSet(std::uint64_t master_seed,
                                                  std::int64_t sample_id,
                                                  int k, const PoolSpec& pool,
                                                  int epoch = 0);

// Minimizes the augmented objective sum_{members d} sum_{t in T(d)} l(t(d))
// with mini-batch SGD (batch mean, step decay, optional momentum). k = 0
// trains on the original samples. With train.scale_epochs_by_k the epoch
// count is divided by k. Non-finite losses abort with the epoch index.
absl::StatusOr<TrainedTarget> TrainTarget(
    std::span<const Sample> dataset, std::span<const MembershipBit> membership,
    int num_classes, int k, const PoolSpec& pool, const ModelSpec& model_spec,
    const TrainSpec& train_spec, std::uint64_t master_seed);

// Fills a report for an already trained model.
absl::StatusOr<TrainReport> EvaluateTarget(
    const TargetModel& model, std::span<const Sample> dataset,
    std::span<const MembershipBit> membership);

// Mean loss over `instances` and, when `grad` is non-empty, its gradient
// with respect to the model parameters (overwrites `grad`).
double MeanInstanceLoss(const TargetModel& model,
                        std::span<const Sample> instances,
                        std::span<double> grad = {});

}  // namespace miaug

#endif  // MIAUG_TARGET_MODEL_TRAINER_H_
