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

#ifndef MIAUG_TARGET_MODEL_DATASETS_H_
#define MIAUG_TARGET_MODEL_DATASETS_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "miaug/core/config.h"
#include "miaug/core/types.h"

namespace miaug {

// Seeded synthetic datasets that need no downloads.
//
// kShapes: grayscale grid_side x grid_side images of class-specific strokes
// (bars, box, diagonals, cross, ...) at a jittered position and intensity
// over a noisy background.
// kBlobs: Gaussian clusters in [0, 1]^feature_dim, one centre per class.
//
// label_noise replaces that fraction of labels with a uniform draw;
// random_labels replaces all of them. Sample ids are 0..num_candidates-1.
absl::StatusOr<std::vector<Sample>> GenerateDataset(const DatasetSpec& spec,
                                                    std::uint64_t master_seed);

// Shape of the samples GenerateDataset produces for `spec`.
Shape DatasetShape(const DatasetSpec& spec);

}  // namespace miaug

#endif  // MIAUG_TARGET_MODEL_DATASETS_H_
