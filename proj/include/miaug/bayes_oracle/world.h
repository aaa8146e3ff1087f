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

#ifndef MIAUG_BAYES_ORACLE_WORLD_H_
#define MIAUG_BAYES_ORACLE_WORLD_H_

#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "miaug/core/rng.h"

namespace miaug {

// A fully enumerable learning problem: a finite parameter grid, n samples
// with fixed transform sets of size k, a membership prior q and a posterior
// temperature gamma. Sample 0 is the audited sample d_1.
//
// The grid stands in for the parameter space: posteriors are probability
// mass functions over grid points and integrals become grid sums.
class DiscreteWorld {
 public:
  static constexpr int kMaxSamples = 12;
  static constexpr int kMaxGridSize = 10000;

  DiscreteWorld(std::vector<std::vector<double>> theta_grid, int num_samples,
                int k, double q, double gamma,
                std::vector<double> instance_losses);

  int grid_size() const { return static_cast<int>(theta_grid_.size()); }
  int num_samples() const { return num_samples_; }
  int k() const { return k_; }
  double q() const { return q_; }
  double gamma() const { return gamma_; }
  const std::vector<std::vector<double>>& theta_grid() const {
    return theta_grid_;
  }

  // Loss of the j-th augmented instance of sample i at grid point g.
  double InstanceLoss(int g, int i, int j) const {
    return instance_losses_[Index(g, i, j)];
  }
  // sum over T(d_i) of the instance losses at grid point g.
  double SetLoss(int g, int i) const {
    return set_losses_[static_cast<std::size_t>(g * num_samples_ + i)];
  }

  void set_q(double q) { q_ = q; }
  void set_gamma(double gamma) { gamma_ = gamma; }
  void SetInstanceLoss(int g, int i, int j, double loss);

  absl::Status Validate() const;

 private:
  std::size_t Index(int g, int i, int j) const {
    return (static_cast<std::size_t>(g) * num_samples_ + i) * k_ + j;
  }
  void RecomputeSetLosses();

  std::vector<std::vector<double>> theta_grid_;
  int num_samples_;
  int k_;
  double q_;
  double gamma_;
  std::vector<double> instance_losses_;
  std::vector<double> set_losses_;
};

// The grid {-1, 0, 1}^dims.
std::vector<std::vector<double>> TernaryGrid(int dims);

struct WorldOptions {
  int num_samples = 4;
  int grid_dims = 3;  // grid size 3^grid_dims
  int k = 2;
  double q = 0.5;
  double gamma = 1.0;
  double max_loss = 5.0;
};

// Instance losses drawn uniformly from [0, max_loss].
DiscreteWorld RandomWorld(const WorldOptions& options, RngStream& rng);

}  // namespace miaug

#endif  // MIAUG_BAYES_ORACLE_WORLD_H_
