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

#ifndef MIAUG_CORE_TYPES_H_
#define MIAUG_CORE_TYPES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace miaug {

// Declared shape of row-major feature storage. Rank 1 is a plain feature
// vector; rank 2 is a {height, width} grayscale grid.
struct Shape {
  std::vector<std::size_t> dims;

  static Shape Vector(std::size_t length) { return Shape{{length}}; }
  static Shape Grid(std::size_t height, std::size_t width) {
    return Shape{{height, width}};
  }

  std::size_t size() const;
  bool is_grid() const { return dims.size() == 2; }
  std::size_t height() const { return is_grid() ? dims[0] : 1; }
  std::size_t width() const { return dims.empty() ? 0 : dims.back(); }

  bool operator==(const Shape&) const = default;
};

struct Sample {
  std::int64_t id = 0;
  Shape shape;
  std::vector<double> features;
  int label = 0;

  bool operator==(const Sample&) const = default;
};

// Checks shape/feature agreement, the [0, 1] feature range and the label.
absl::Status ValidateSample(const Sample& sample, int num_classes);

// m_i: whether sample i was drawn into the training set. Set once.
struct MembershipBit {
  bool value = false;

  bool operator==(const MembershipBit&) const = default;
};

// Per-augmentation loss values of one sample. Element order is a storage
// artifact only.
using LossSet = std::vector<double>;

// Non-empty, finite and non-negative.
absl::Status ValidateLossSet(std::span<const double> losses);

enum class Split { kAttackTrain, kAttackEval };

std::string_view SplitName(Split split);
absl::StatusOr<Split> ParseSplit(std::string_view name);

struct MembershipRecord {
  std::int64_t sample_id = 0;
  bool member = false;
  Split split = Split::kAttackEval;
  LossSet losses;
  // Loss of the untransformed sample, used only by the single-loss baseline.
  std::optional<double> original_loss;

  bool operator==(const MembershipRecord&) const = default;
};

// Fails when the attack-train and attack-eval splits share a sample id.
absl::Status CheckSplitsDisjoint(std::span<const MembershipRecord> records);

}  // namespace miaug

#endif  // MIAUG_CORE_TYPES_H_
