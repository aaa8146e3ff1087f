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

#include "miaug/augment/transform.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "miaug/core/status_macros.h"
#include "miaug/core/strings.h"

namespace miaug {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Grid view over a sample's row-major features.
struct Grid {
  int height;
  int width;
  const std::vector<double>& values;

  double At(int r, int c) const {
    if (r < 0 || r >= height || c < 0 || c >= width) return 0.0;
    return values[static_cast<std::size_t>(r * width + c)];
  }
};

absl::StatusOr<Grid> GridOf(const Sample& sample, std::string_view what) {
  if (!sample.shape.is_grid()) {
    return absl::InvalidArgumentError(
        absl::StrCat(Sv(what), " needs a 2-D grid sample (sample ", sample.id,
                     ")"));
  }
  if (sample.shape.size() != sample.features.size()) {
    return absl::InvalidArgumentError("sample features do not match shape");
  }
  return Grid{static_cast<int>(sample.shape.height()),
              static_cast<int>(sample.shape.width()), sample.features};
}

// Resamples `sample` by inverse mapping: out(r, c) = in(source(r, c)).
template <typename SourceFn>
Sample Remap(const Sample& sample, const Grid& grid, SourceFn source) {
  Sample out = sample;
  for (int r = 0; r < grid.height; ++r) {
    for (int c = 0; c < grid.width; ++c) {
      const auto [sr, sc] = source(r, c);
      out.features[static_cast<std::size_t>(r * grid.width + c)] =
          grid.At(sr, sc);
    }
  }
  return out;
}

int RoundToInt(double v) { return static_cast<int>(std::lround(v)); }

double Snap(double v) { return std::abs(v) < 1e-12 ? 0.0 : v; }

}  // namespace

TransformKind KindOf(const Transform& transform) {
  return std::visit(
      Overloaded{
          [](const HorizontalFlip&) { return TransformKind::kHorizontalFlip; },
          [](const Translate&) { return TransformKind::kTranslate; },
          [](const Rotate&) { return TransformKind::kRotate; },
          [](const CropPad&) { return TransformKind::kCropPad; },
          [](const Shear&) { return TransformKind::kShear; },
          [](const Cutout&) { return TransformKind::kCutout; },
          [](const AdditiveNoise&) { return TransformKind::kAdditiveNoise; },
      },
      transform);
}

std::string DescribeTransform(const Transform& transform) {
  return std::visit(
      Overloaded{
          [](const HorizontalFlip& t) {
            return std::string(t.active ? "flip" : "flip(off)");
          },
          [](const Translate& t) {
            return absl::StrFormat("translate(%d,%d)", t.dx, t.dy);
          },
          [](const Rotate& t) {
            return absl::StrFormat("rotate(%.3f)", t.degrees);
          },
          [](const CropPad& t) {
            return absl::StrFormat("crop_pad(%d;%d,%d)", t.padding, t.offset_x,
                                   t.offset_y);
          },
          [](const Shear& t) {
            return absl::StrFormat("shear(%.3f)", t.factor);
          },
          [](const Cutout& t) {
            return absl::StrFormat("cutout(%.3f,%.3f;%d)", t.center_row,
                                   t.center_col, t.side);
          },
          [](const AdditiveNoise& t) {
            return absl::StrFormat("noise(%.3f)", t.sigma);
          },
      },
      transform);
}

absl::StatusOr<TransformSet> SampleTransformSet(RngStream& rng, int k,
                                                const PoolSpec& pool) {
  if (k < 1) {
    return absl::InvalidArgumentError("transform set size k must be >= 1");
  }
  if (pool.kinds.empty()) {
    return absl::InvalidArgumentError("transform pool is empty");
  }
  TransformSet set;
  set.pipelines.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    std::vector<TransformKind> order = pool.kinds;
    rng.Shuffle(std::span<TransformKind>(order));
    Pipeline pipeline;
    for (TransformKind kind : order) {
      switch (kind) {
        case TransformKind::kHorizontalFlip:
          pipeline.push_back(HorizontalFlip{rng.Bernoulli(pool.flip_probability)});
          break;
        case TransformKind::kTranslate: {
          const int dx = static_cast<int>(
              rng.UniformInt(-pool.max_translate, pool.max_translate));
          const int dy = static_cast<int>(
              rng.UniformInt(-pool.max_translate, pool.max_translate));
          pipeline.push_back(Translate{dx, dy});
          break;
        }
        case TransformKind::kRotate:
          pipeline.push_back(Rotate{
              rng.Uniform(-pool.max_rotate_degrees, pool.max_rotate_degrees)});
          break;
        case TransformKind::kCropPad: {
          const int ox =
              static_cast<int>(rng.UniformInt(0, 2 * pool.crop_padding));
          const int oy =
              static_cast<int>(rng.UniformInt(0, 2 * pool.crop_padding));
          pipeline.push_back(CropPad{pool.crop_padding, ox, oy});
          break;
        }
        case TransformKind::kShear:
          pipeline.push_back(
              Shear{rng.Uniform(-pool.max_shear, pool.max_shear)});
          break;
        case TransformKind::kCutout: {
          const double row = rng.Uniform();
          const double col = rng.Uniform();
          const int side =
              static_cast<int>(rng.UniformInt(1, pool.max_cutout_side));
          pipeline.push_back(Cutout{row, col, side});
          break;
        }
        case TransformKind::kAdditiveNoise:
          pipeline.push_back(AdditiveNoise{pool.noise_sigma, rng.NextU64()});
          break;
      }
    }
    set.pipelines.push_back(std::move(pipeline));
  }
  return set;
}

TransformSet IdentityTransformSet(int k) {
  return TransformSet{std::vector<Pipeline>(static_cast<std::size_t>(k))};
}

absl::StatusOr<Sample> ApplyTransform(const Transform& transform,
                                      const Sample& sample) {
  if (const auto* noise = std::get_if<AdditiveNoise>(&transform)) {
    if (sample.shape.size() != sample.features.size()) {
      return absl::InvalidArgumentError("sample features do not match shape");
    }
    Sample out = sample;
    RngStream rng(noise->seed);
    for (double& v : out.features) {
      v = std::clamp(v + noise->sigma * rng.Normal(), 0.0, 1.0);
    }
    return out;
  }

  MIAUG_ASSIGN_OR_RETURN(const Grid grid,
                         GridOf(sample, TransformKindName(KindOf(transform))));
  const double center_row = 0.5 * (grid.height - 1);
  const double center_col = 0.5 * (grid.width - 1);
  using Source = std::pair<int, int>;

  return std::visit(
      Overloaded{
          [&](const HorizontalFlip& t) -> Sample {
            if (!t.active) return sample;
            return Remap(sample, grid, [&](int r, int c) {
              return Source{r, grid.width - 1 - c};
            });
          },
          [&](const Translate& t) -> Sample {
            return Remap(sample, grid, [&](int r, int c) {
              return Source{r - t.dy, c - t.dx};
            });
          },
          [&](const Rotate& t) -> Sample {
            const double radians = t.degrees * std::numbers::pi / 180.0;
            const double cos_a = Snap(std::cos(radians));
            const double sin_a = Snap(std::sin(radians));
            return Remap(sample, grid, [&](int r, int c) {
              // Display coordinates, y pointing up.
              const double x = c - center_col;
              const double y = center_row - r;
              const double src_x = x * cos_a + y * sin_a;
              const double src_y = -x * sin_a + y * cos_a;
              return Source{RoundToInt(center_row - src_y),
                            RoundToInt(center_col + src_x)};
            });
          },
          [&](const CropPad& t) -> Sample {
            return Remap(sample, grid, [&](int r, int c) {
              return Source{r + t.offset_y - t.padding,
                            c + t.offset_x - t.padding};
            });
          },
          [&](const Shear& t) -> Sample {
            return Remap(sample, grid, [&](int r, int c) {
              return Source{r,
                            RoundToInt(c - t.factor * (r - center_row))};
            });
          },
          [&](const Cutout& t) -> Sample {
            Sample out = sample;
            const int row = std::min(
                grid.height - 1, static_cast<int>(t.center_row * grid.height));
            const int col = std::min(
                grid.width - 1, static_cast<int>(t.center_col * grid.width));
            const int top = row - t.side / 2;
            const int left = col - t.side / 2;
            for (int r = std::max(0, top);
                 r < std::min(grid.height, top + t.side); ++r) {
              for (int c = std::max(0, left);
                   c < std::min(grid.width, left + t.side); ++c) {
                out.features[static_cast<std::size_t>(r * grid.width + c)] =
                    0.0;
              }
            }
            return out;
          },
          [&](const AdditiveNoise&) -> Sample { return sample; },
      },
      transform);
}

absl::StatusOr<Sample> ApplyPipeline(const Pipeline& pipeline,
                                     const Sample& sample) {
  Sample current = sample;
  for (const Transform& t : pipeline) {
    MIAUG_ASSIGN_OR_RETURN(current, ApplyTransform(t, current));
  }
  return current;
}

absl::StatusOr<std::vector<Sample>> AugmentSample(const Sample& sample,
                                                  const TransformSet& set) {
  std::vector<Sample> out;
  out.reserve(set.pipelines.size());
  for (const Pipeline& pipeline : set.pipelines) {
    MIAUG_ASSIGN_OR_RETURN(Sample augmented, ApplyPipeline(pipeline, sample));
    out.push_back(std::move(augmented));
  }
  return out;
}

}  // namespace miaug
