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

#ifndef MIAUG_TARGET_MODEL_TARGET_MODEL_H_
#define MIAUG_TARGET_MODEL_TARGET_MODEL_H_

#include <span>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "miaug/core/config.h"
#include "miaug/core/rng.h"
#include "miaug/core/types.h"
#include "miaug/nn/network.h"

namespace miaug {

// Classifier under audit: architecture metadata plus flat parameters.
struct TargetModel {
  ModelSpec spec;
  Shape input_shape;
  int num_classes = 0;
  nn::Network network;
};

// Builds the network for `spec` with all-zero parameters.
absl::StatusOr<TargetModel> BuildTargetModel(const ModelSpec& spec,
                                             const Shape& input_shape,
                                             int num_classes);

// Black-box query: the cross-entropy loss of `sample` under `model`. This
// is the only view of a trained model that attacks receive.
absl::StatusOr<double> LossOracle(const TargetModel& model,
                                  const Sample& sample);

// Predicted class (argmax of the logits).
absl::StatusOr<int> Predict(const TargetModel& model, const Sample& sample);

// Checkpoint: one JSON document with the architecture metadata and the
// parameters written with 17 significant digits.
absl::Status SaveTargetModel(const TargetModel& model, const std::string& path);
absl::StatusOr<TargetModel> LoadTargetModel(const std::string& path);

}  // namespace miaug

#endif  // MIAUG_TARGET_MODEL_TARGET_MODEL_H_
