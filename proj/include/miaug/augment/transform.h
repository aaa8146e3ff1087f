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

#ifndef MIAUG_AUGMENT_TRANSFORM_H_
#define MIAUG_AUGMENT_TRANSFORM_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "miaug/core/config.h"
#include "miaug/core/rng.h"
#include "miaug/core/types.h"

namespace miaug {

// Primitive transforms with their drawn parameters. Geometric primitives
// need a rank-2 grid; resampling is nearest-neighbour and pixels that come
// from outside the frame are 0.

struct HorizontalFlip {
  bool active = true;
  bool operator==(const HorizontalFlip&) const = default;
};

// out(r, c) = in(r - dy, c - dx).
struct Translate {
  int dx = 0;
  int dy = 0;
  bool operator==(const Translate&) const = default;
};

// Counter-clockwise as displayed (row index grows downwards), about the
// grid centre.
struct Rotate {
  double degrees = 0.0;
  bool operator==(const Rotate&) const = default;
};

// Zero-pad by `padding` on every side, then crop the original size at
// (offset_y, offset_x) in [0, 2 * padding].
struct CropPad {
  int padding = 0;
  int offset_x = 0;
  int offset_y = 0;
  bool operator==(const CropPad&) const = default;
};

// Horizontal shear: out(r, c) = in(r, c - factor * (r - centre_row)).
struct Shear {
  double factor = 0.0;
  bool operator==(const Shear&) const = default;
};

// Zeroes a side x side square. The centre is stored as a fraction of the
// grid so the parameters do not depend on the grid size.
struct Cutout {
  double center_row = 0.5;
  double center_col = 0.5;
  int side = 1;
  bool operator==(const Cutout&) const = default;
};

// Gaussian noise from a stream seeded by `seed`, clamped to [0, 1]. Works
// on plain vectors as well as grids.
struct AdditiveNoise {
  double sigma = 0.0;
  std::uint64_t seed = 0;
  bool operator==(const AdditiveNoise&) const = default;
};

using Transform = std::variant<HorizontalFlip, Translate, Rotate, CropPad,
                               Shear, Cutout, AdditiveNoise>;

TransformKind KindOf(const Transform& transform);
std::string DescribeTransform(const Transform& transform);

// Primitives applied left to right. The empty pipeline is the identity.
using Pipeline = std::vector<Transform>;

struct TransformSet {
  std::vector<Pipeline> pipelines;
  bool operator==(const TransformSet&) const = default;
};

// k pipelines; each is a uniformly random ordering of every enabled kind with
// parameters drawn uniformly from the pool ranges.
absl::StatusOr<TransformSet> SampleTransformSet(RngStream& rng, int k,
                                                const PoolSpec& pool);

// k identity pipelines.
TransformSet IdentityTransformSet(int k);

absl::StatusOr<Sample> ApplyTransform(const Transform& transform,
                                      const Sample& sample);
absl::StatusOr<Sample> ApplyPipeline(const Pipeline& pipeline,
                                     const Sample& sample);

// T(d): one augmented sample per pipeline, in pipeline order.
absl::StatusOr<std::vector<Sample>> AugmentSample(const Sample& sample,
                                                  const TransformSet& set);

}  // namespace miaug

#endif  // MIAUG_AUGMENT_TRANSFORM_H_
