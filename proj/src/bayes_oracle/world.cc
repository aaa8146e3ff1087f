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

#include "miaug/bayes_oracle/world.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace miaug {

DiscreteWorld::DiscreteWorld(std::vector<std::vector<double>> theta_grid,
                             int num_samples, int k, double q, double gamma,
                             std::vector<double> instance_losses)
    : theta_grid_(std::move(theta_grid)),
      num_samples_(num_samples),
      k_(k),
      q_(q),
      gamma_(gamma),
      instance_losses_(std::move(instance_losses)) {
  RecomputeSetLosses();
}

void DiscreteWorld::SetInstanceLoss(int g, int i, int j, double loss) {
  instance_losses_[Index(g, i, j)] = loss;
  double sum = 0.0;
  for (int t = 0; t < k_; ++t) sum += instance_losses_[Index(g, i, t)];
  set_losses_[static_cast<std::size_t>(g * num_samples_ + i)] = sum;
}

void DiscreteWorld::RecomputeSetLosses() {
  set_losses_.assign(theta_grid_.size() * static_cast<std::size_t>(
                                              std::max(num_samples_, 0)),
                     0.0);
  if (instance_losses_.size() != set_losses_.size() *
                                     static_cast<std::size_t>(std::max(k_, 0))) {
    return;  // Validate() reports the mismatch.
  }
  for (int g = 0; g < grid_size(); ++g) {
    for (int i = 0; i < num_samples_; ++i) {
      double sum = 0.0;
      for (int j = 0; j < k_; ++j) sum += instance_losses_[Index(g, i, j)];
      set_losses_[static_cast<std::size_t>(g * num_samples_ + i)] = sum;
    }
  }
}

absl::Status DiscreteWorld::Validate() const {
  if (num_samples_ < 1 || num_samples_ > kMaxSamples) {
    return absl::InvalidArgumentError(
        absl::StrCat("world needs 1..", kMaxSamples, " samples"));
  }
  if (theta_grid_.empty() || grid_size() > kMaxGridSize) {
    return absl::InvalidArgumentError(
        absl::StrCat("grid size must lie in 1..", kMaxGridSize));
  }
  if (k_ < 1) return absl::InvalidArgumentError("world needs k >= 1");
  if (!(q_ >= 0.0 && q_ <= 1.0)) {
    return absl::InvalidArgumentError("q must lie in [0, 1]");
  }
  if (!(gamma_ > 0.0) || !std::isfinite(gamma_)) {
    return absl::InvalidArgumentError("gamma must be positive and finite");
  }
  if (instance_losses_.size() !=
      theta_grid_.size() * static_cast<std::size_t>(num_samples_ * k_)) {
    return absl::InvalidArgumentError("loss table has the wrong size");
  }
  for (double l : instance_losses_) {
    if (!std::isfinite(l) || l < 0.0) {
      return absl::InvalidArgumentError("losses must be finite and >= 0");
    }
  }
  return absl::OkStatus();
}

std::vector<std::vector<double>> TernaryGrid(int dims) {
  std::vector<std::vector<double>> grid = {{}};
  for (int d = 0; d < dims; ++d) {
    std::vector<std::vector<double>> next;
    for (const auto& point : grid) {
      for (double v : {-1.0, 0.0, 1.0}) {
        auto extended = point;
        extended.push_back(v);
        next.push_back(std::move(extended));
      }
    }
    grid = std::move(next);
  }
  return grid;
}

DiscreteWorld RandomWorld(const WorldOptions& options, RngStream& rng) {
  auto grid = TernaryGrid(options.grid_dims);
  std::vector<double> losses(grid.size() *
                             static_cast<std::size_t>(options.num_samples *
                                                      options.k));
  for (double& l : losses) l = rng.Uniform(0.0, options.max_loss);
  return DiscreteWorld(std::move(grid), options.num_samples, options.k,
                       options.q, options.gamma, std::move(losses));
}

}  // namespace miaug
