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

#ifndef MIAUG_CORE_CONFIG_H_
#define MIAUG_CORE_CONFIG_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace miaug {

// Primitive augmentations. kAdditiveNoise is meant for plain-vector data
// and is not part of the default image pool.
enum class TransformKind {
  kHorizontalFlip,
  kTranslate,
  kRotate,
  kCropPad,
  kShear,
  kCutout,
  kAdditiveNoise,
};

std::string_view TransformKindName(TransformKind kind);
absl::StatusOr<TransformKind> ParseTransformKind(std::string_view name);

// Enabled primitives and the ranges their parameters are drawn from.
struct PoolSpec {
  std::vector<TransformKind> kinds = {
      TransformKind::kHorizontalFlip, TransformKind::kCropPad,
      TransformKind::kRotate,         TransformKind::kTranslate,
      TransformKind::kShear,          TransformKind::kCutout};
  double flip_probability = 0.5;
  int max_translate = 1;
  double max_rotate_degrees = 15.0;
  int crop_padding = 1;
  double max_shear = 0.15;
  int max_cutout_side = 2;
  double noise_sigma = 0.05;

  bool operator==(const PoolSpec&) const = default;
};

enum class DatasetKind { kShapes, kBlobs };

struct DatasetSpec {
  DatasetKind kind = DatasetKind::kShapes;
  int num_candidates = 1000;
  int num_classes = 4;
  int grid_side = 8;
  int feature_dim = 16;
  double pixel_noise = 0.3;
  double label_noise = 0.2;
  bool random_labels = false;
};

enum class Architecture { kSoftmaxRegression, kMlp, kTinyConvNet };
enum class Activation { kTanh, kRelu };

struct ModelSpec {
  Architecture architecture = Architecture::kMlp;
  std::vector<int> hidden_sizes = {128};
  Activation activation = Activation::kTanh;
  int conv_channels = 8;
  int dense_units = 32;
};

struct TrainSpec {
  int epochs = 1600;
  double learning_rate = 0.01;
  // Fraction of the run after which the learning rate is divided by
  // lr_decay_factor. 1 disables the decay.
  double lr_decay_at = 0.5;
  double lr_decay_factor = 10.0;
  int batch_size = 32;
  double momentum = 0.9;
  // Divide the epoch count by k so every member receives the same number of
  // gradient visits regardless of k.
  bool scale_epochs_by_k = true;
  // Draw fresh transform sets every epoch instead of one per sample.
  bool resample_each_epoch = false;
};

struct AttackSpec {
  // Augmented instances per audited sample; 0 means "same as k", or 10 when
  // the target was trained without augmentation.
  int k = 0;
  int moment_order = 10;
  int mi_epochs = 2000;
  double mi_learning_rate = 0.1;
  bool standardize = true;
  int train_members = 200;
  int train_nonmembers = 200;
  // Query with the training-time transform sets instead of fresh draws.
  // Ignored for targets trained without augmentation (k = 0).
  bool reuse_transforms = true;
};

struct ExperimentConfig {
  std::uint64_t master_seed = 1;
  int k = 8;
  double q = 0.5;
  DatasetSpec data;
  PoolSpec pool;
  ModelSpec model;
  TrainSpec train;
  AttackSpec attack;

  // Number of augmented instances the attacker evaluates per sample.
  int AttackK() const;
  // Whether loss extraction reuses the training transform sets.
  bool ReuseTrainingTransforms() const { return attack.reuse_transforms && k > 0; }

  absl::Status Validate() const;
};

// Flat "key = value" configuration text. '#' starts a comment; blank lines
// are ignored. Keys are dotted, e.g. "train.epochs".
using FlatConfig = std::map<std::string, std::string>;

absl::StatusOr<FlatConfig> ParseFlatConfig(std::string_view text);
absl::StatusOr<FlatConfig> LoadFlatConfig(const std::string& path);

struct ConfigKey {
  std::string key;
  std::string default_value;
  std::string help;
};

// Every accepted key with its default, in canonical order.
std::vector<ConfigKey> ExperimentConfigKeys();

// Applies `overrides` on top of `base`. Unknown keys and unparsable values
// are rejected; the result is validated.
absl::StatusOr<ExperimentConfig> ApplyFlatConfig(const ExperimentConfig& base,
                                                 const FlatConfig& overrides);

// Canonical key/value listing of a resolved config.
std::vector<std::pair<std::string, std::string>> ToKeyValues(
    const ExperimentConfig& config);
std::string FormatFlatConfig(const ExperimentConfig& config);

}  // namespace miaug

#endif  // MIAUG_CORE_CONFIG_H_
