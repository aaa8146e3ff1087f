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

#include "miaug/target_model/datasets.h"

#include <algorithm>

#include "miaug/core/rng.h"

namespace miaug {
namespace {

constexpr int kNumStrokeKinds = 8;

class Canvas {
 public:
  Canvas(int side, std::vector<double>& pixels)
      : side_(side), pixels_(pixels) {}

  void Paint(int r, int c, double value) {
    if (r < 0 || r >= side_ || c < 0 || c >= side_) return;
    double& px = pixels_[static_cast<std::size_t>(r * side_ + c)];
    px = std::max(px, value);
  }

 private:
  int side_;
  std::vector<double>& pixels_;
};

void DrawStroke(int kind, int side, double intensity, RngStream& rng,
                Canvas& canvas) {
  auto pick = [&](int lo, int hi) {
    return static_cast<int>(rng.UniformInt(lo, std::max(lo, hi)));
  };
  const int length = pick(side / 2, side - 2);
  switch (kind % kNumStrokeKinds) {
    case 0: {  // horizontal bar
      const int r = pick(1, side - 2);
      const int c0 = pick(0, side - length);
      for (int i = 0; i < length; ++i) canvas.Paint(r, c0 + i, intensity);
      break;
    }
    case 1: {  // vertical bar
      const int c = pick(1, side - 2);
      const int r0 = pick(0, side - length);
      for (int i = 0; i < length; ++i) canvas.Paint(r0 + i, c, intensity);
      break;
    }
    case 2: {  // box outline
      const int r0 = pick(0, side - length);
      const int c0 = pick(0, side - length);
      for (int i = 0; i < length; ++i) {
        canvas.Paint(r0, c0 + i, intensity);
        canvas.Paint(r0 + length - 1, c0 + i, intensity);
        canvas.Paint(r0 + i, c0, intensity);
        canvas.Paint(r0 + i, c0 + length - 1, intensity);
      }
      break;
    }
    case 3: {  // main diagonal
      const int r0 = pick(0, side - length);
      const int c0 = pick(0, side - length);
      for (int i = 0; i < length; ++i) canvas.Paint(r0 + i, c0 + i, intensity);
      break;
    }
    case 4: {  // anti-diagonal
      const int r0 = pick(0, side - length);
      const int c0 = pick(length - 1, side - 1);
      for (int i = 0; i < length; ++i) canvas.Paint(r0 + i, c0 - i, intensity);
      break;
    }
    case 5: {  // plus
      const int arm = std::max(1, length / 2);
      const int r = pick(arm, side - 1 - arm);
      const int c = pick(arm, side - 1 - arm);
      for (int i = -arm; i <= arm; ++i) {
        canvas.Paint(r + i, c, intensity);
        canvas.Paint(r, c + i, intensity);
      }
      break;
    }
    case 6: {  // filled square
      const int size = pick(2, side / 2);
      const int r0 = pick(0, side - size);
      const int c0 = pick(0, side - size);
      for (int r = 0; r < size; ++r) {
        for (int c = 0; c < size; ++c) canvas.Paint(r0 + r, c0 + c, intensity);
      }
      break;
    }
    default: {  // two horizontal bars
      const int r = pick(0, side - 3);
      const int c0 = pick(0, side - length);
      for (int i = 0; i < length; ++i) {
        canvas.Paint(r, c0 + i, intensity);
        canvas.Paint(r + 2, c0 + i, intensity);
      }
      break;
    }
  }
}

}  // namespace

Shape DatasetShape(const DatasetSpec& spec) {
  if (spec.kind == DatasetKind::kBlobs) {
    return Shape::Vector(static_cast<std::size_t>(spec.feature_dim));
  }
  return Shape::Grid(static_cast<std::size_t>(spec.grid_side),
                     static_cast<std::size_t>(spec.grid_side));
}

absl::StatusOr<std::vector<Sample>> GenerateDataset(const DatasetSpec& spec,
                                                    std::uint64_t master_seed) {
  if (spec.num_candidates < 1 || spec.num_classes < 2) {
    return absl::InvalidArgumentError("dataset needs samples and >= 2 classes");
  }
  if (spec.kind == DatasetKind::kShapes && spec.grid_side < 4) {
    return absl::InvalidArgumentError("shape grids need side >= 4");
  }
  const Shape shape = DatasetShape(spec);
  RngStream rng(master_seed, "dataset");

  std::vector<std::vector<double>> centers;
  if (spec.kind == DatasetKind::kBlobs) {
    for (int c = 0; c < spec.num_classes; ++c) {
      std::vector<double> center(shape.size());
      for (double& v : center) v = rng.Uniform(0.2, 0.8);
      centers.push_back(std::move(center));
    }
  }

  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(spec.num_candidates));
  for (int i = 0; i < spec.num_candidates; ++i) {
    Sample s;
    s.id = i;
    s.shape = shape;
    s.label = static_cast<int>(rng.UniformInt(0, spec.num_classes - 1));
    s.features.assign(shape.size(), 0.0);
    if (spec.kind == DatasetKind::kBlobs) {
      for (std::size_t j = 0; j < shape.size(); ++j) {
        s.features[j] = std::clamp(
            centers[static_cast<std::size_t>(s.label)][j] +
                spec.pixel_noise * rng.Normal(),
            0.0, 1.0);
      }
    } else {
      for (double& v : s.features) v = spec.pixel_noise * rng.Uniform();
      Canvas canvas(spec.grid_side, s.features);
      DrawStroke(s.label, spec.grid_side, rng.Uniform(0.6, 1.0), rng, canvas);
    }
    if (spec.random_labels || rng.Bernoulli(spec.label_noise)) {
      s.label = static_cast<int>(rng.UniformInt(0, spec.num_classes - 1));
    }
    samples.push_back(std::move(s));
  }
  return samples;
}

}  // namespace miaug
