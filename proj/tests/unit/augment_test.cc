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

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "miaug/augment/transform.h"
#include "miaug/core/rng.h"

namespace miaug {
namespace {

// n x n grid with distinct values v(r, c) = (r * n + c + 1) / (n * n + 1).
Sample Ramp(int n) {
  Sample s;
  s.id = 1;
  s.shape = Shape::Grid(n, n);
  for (int i = 0; i < n * n; ++i) s.features.push_back((i + 1.0) / (n * n + 1));
  return s;
}

double At(const Sample& s, int r, int c) {
  return s.features[static_cast<std::size_t>(r * s.shape.width() + c)];
}

TEST(Transform, FlipMirrorsColumns) {
  const Sample in = Ramp(5);
  const Sample out = *ApplyTransform(HorizontalFlip{}, in);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) EXPECT_EQ(At(out, r, c), At(in, r, 4 - c));
  EXPECT_EQ(*ApplyTransform(HorizontalFlip{false}, in), in);
}

TEST(Transform, Rotate90IndexMap) {
  for (int n : {4, 5}) {
    const Sample in = Ramp(n);
    const Sample out = *ApplyTransform(Rotate{90.0}, in);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        EXPECT_EQ(At(out, r, c), At(in, c, n - 1 - r)) << n << " " << r << c;
  }
}

TEST(Transform, FourQuarterTurnsAreIdentity) {
  const Sample in = Ramp(6);
  const Pipeline p(4, Rotate{90.0});
  EXPECT_EQ(*ApplyPipeline(p, in), in);
}

TEST(Transform, TranslateZeroFills) {
  const Sample in = Ramp(4);
  const Sample out = *ApplyTransform(Translate{1, 2}, in);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const int sr = r - 2, sc = c - 1;
      const bool inside = sr >= 0 && sc >= 0;
      EXPECT_EQ(At(out, r, c), inside ? At(in, sr, sc) : 0.0);
    }
}

TEST(Transform, CropPadCentredIsIdentity) {
  const Sample in = Ramp(5);
  EXPECT_EQ(*ApplyTransform(CropPad{2, 2, 2}, in), in);
  const Sample shifted = *ApplyTransform(CropPad{1, 0, 0}, in);
  EXPECT_EQ(*ApplyTransform(Translate{1, 1}, in), shifted);
}

TEST(Transform, ZeroShearAndZeroRotateAreIdentity) {
  const Sample in = Ramp(7);
  EXPECT_EQ(*ApplyTransform(Shear{0.0}, in), in);
  EXPECT_EQ(*ApplyTransform(Rotate{0.0}, in), in);
}

TEST(Transform, CutoutZeroesSquare) {
  const Sample in = Ramp(8);
  const Sample out = *ApplyTransform(Cutout{0.5, 0.5, 2}, in);
  int zeros = 0;
  for (double v : out.features) zeros += v == 0.0;
  EXPECT_EQ(zeros, 4);
  EXPECT_EQ(At(out, 4, 4), 0.0);
}

TEST(Transform, NoiseIsSeededAndClamped) {
  Sample in;
  in.shape = Shape::Vector(64);
  in.features.assign(64, 0.5);
  const Sample a = *ApplyTransform(AdditiveNoise{2.0, 7}, in);
  const Sample b = *ApplyTransform(AdditiveNoise{2.0, 7}, in);
  EXPECT_EQ(a, b);
  for (double v : a.features) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
  EXPECT_NE(*ApplyTransform(AdditiveNoise{2.0, 8}, in), a);
}

TEST(Transform, GeometricNeedsGrid) {
  Sample v;
  v.shape = Shape::Vector(4);
  v.features.assign(4, 0.1);
  EXPECT_FALSE(ApplyTransform(Rotate{10.0}, v).ok());
  Sample broken = Ramp(3);
  broken.features.pop_back();
  EXPECT_FALSE(ApplyTransform(HorizontalFlip{}, broken).ok());
}

TEST(TransformSet, SampledSetsRespectPool) {
  PoolSpec pool;
  RngStream rng(5);
  const TransformSet set = *SampleTransformSet(rng, 8, pool);
  ASSERT_EQ(set.pipelines.size(), 8u);
  for (const Pipeline& p : set.pipelines) {
    EXPECT_EQ(p.size(), pool.kinds.size());
    std::vector<TransformKind> kinds;
    for (const Transform& t : p) {
      kinds.push_back(KindOf(t));
      if (const auto* tr = std::get_if<Translate>(&t)) {
        EXPECT_LE(std::abs(tr->dx), pool.max_translate);
        EXPECT_LE(std::abs(tr->dy), pool.max_translate);
      }
      if (const auto* rot = std::get_if<Rotate>(&t)) {
        EXPECT_LE(std::abs(rot->degrees), pool.max_rotate_degrees);
      }
      if (const auto* sh = std::get_if<Shear>(&t)) {
        EXPECT_LE(std::abs(sh->factor), pool.max_shear);
      }
    }
    std::sort(kinds.begin(), kinds.end());
    std::vector<TransformKind> want = pool.kinds;
    std::sort(want.begin(), want.end());
    EXPECT_EQ(kinds, want);
  }
  RngStream again(5);
  EXPECT_EQ(*SampleTransformSet(again, 8, pool), set);
}

TEST(TransformSet, RejectsEmptyRequests) {
  RngStream rng(1);
  EXPECT_FALSE(SampleTransformSet(rng, 0, PoolSpec()).ok());
  PoolSpec empty;
  empty.kinds.clear();
  EXPECT_FALSE(SampleTransformSet(rng, 2, empty).ok());
}

TEST(TransformSet, AugmentKeepsOrderAndIdentity) {
  const Sample in = Ramp(4);
  const auto out = *AugmentSample(in, IdentityTransformSet(3));
  ASSERT_EQ(out.size(), 3u);
  for (const Sample& s : out) EXPECT_EQ(s, in);
}

}  // namespace
}  // namespace miaug
