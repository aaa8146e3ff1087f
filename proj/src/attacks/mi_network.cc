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

#include "miaug/attacks/mi_network.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "miaug/core/numeric.h"
#include "miaug/core/rng.h"
#include "miaug/core/status_macros.h"

namespace miaug {
namespace {

nn::Network MiArchitecture(int input_size) {
  return nn::Network({
      nn::Dense{input_size, kMiHiddenUnits},
      nn::Elementwise{Activation::kTanh, kMiHiddenUnits},
      nn::Dense{kMiHiddenUnits, kMiHiddenUnits},
      nn::Elementwise{Activation::kTanh, kMiHiddenUnits},
      nn::Dense{kMiHiddenUnits, 1},
  });
}

absl::StatusOr<std::vector<double>> StandardizedFeatures(
    const MINetwork& net, const MembershipRecord& record) {
  MIAUG_ASSIGN_OR_RETURN(FeatureVector features,
                         BuildFeatures(net.builder, record.losses));
  if (static_cast<int>(features.size()) != net.input_size) {
    return absl::InvalidArgumentError(absl::StrCat(
        "record ", record.sample_id, " yields ", features.size(),
        " features; the MI network expects ", net.input_size));
  }
  for (std::size_t j = 0; j < features.size(); ++j) {
    features[j] = (features[j] - net.feature_mean[j]) / net.feature_scale[j];
  }
  return features;
}

}  // namespace

MINetwork MakeMiNetwork(const FeatureBuilder& builder, int input_size) {
  return MINetwork{builder, input_size,
                   std::vector<double>(static_cast<std::size_t>(input_size), 0.0),
                   std::vector<double>(static_cast<std::size_t>(input_size), 1.0),
                   MiArchitecture(input_size)};
}

absl::StatusOr<MINetwork> TrainMiNetwork(
    std::span<const MembershipRecord> train_records,
    const FeatureBuilder& builder, const MiNetworkHyperparams& hyperparams,
    std::uint64_t seed) {
  if (train_records.empty()) {
    return absl::InvalidArgumentError("MI network needs training records");
  }
  std::vector<FeatureVector> features;
  std::vector<double> targets;
  bool has_member = false, has_nonmember = false;
  for (const MembershipRecord& r : train_records) {
    MIAUG_ASSIGN_OR_RETURN(FeatureVector v, BuildFeatures(builder, r.losses));
    if (!features.empty() && v.size() != features.front().size()) {
      return absl::InvalidArgumentError(
          "records yield feature vectors of different lengths");
    }
    features.push_back(std::move(v));
    targets.push_back(r.member ? 1.0 : 0.0);
    (r.member ? has_member : has_nonmember) = true;
  }
  if (!has_member || !has_nonmember) {
    return absl::FailedPreconditionError(
        "MI network training needs members and non-members");
  }

  const int dim = static_cast<int>(features.front().size());
  MINetwork net = MakeMiNetwork(builder, dim);
  const double n = static_cast<double>(features.size());
  if (hyperparams.standardize) {
    for (int j = 0; j < dim; ++j) {
      double mean = 0.0;
      for (const auto& v : features) mean += v[j];
      mean /= n;
      double var = 0.0;
      for (const auto& v : features) var += (v[j] - mean) * (v[j] - mean);
      const double sd = std::sqrt(var / n);
      net.feature_mean[j] = mean;
      net.feature_scale[j] = sd > 0 ? sd : 1.0;
    }
  }
  for (auto& v : features) {
    for (int j = 0; j < dim; ++j) {
      v[j] = (v[j] - net.feature_mean[j]) / net.feature_scale[j];
    }
  }

  RngStream rng(seed, "mi-network-init");
  net.network.InitGlorotUniform(rng);
  std::vector<double> grad(net.network.num_params());
  nn::Workspace ws;
  for (int epoch = 0; epoch < hyperparams.epochs; ++epoch) {
    std::fill(grad.begin(), grad.end(), 0.0);
    double loss = 0.0;
    for (std::size_t i = 0; i < features.size(); ++i) {
      loss += nn::SigmoidCrossEntropy(net.network, features[i], targets[i], ws,
                                      grad);
    }
    if (!std::isfinite(loss)) {
      return absl::InternalError(
          absl::StrCat("MI network training diverged at epoch ", epoch));
    }
    auto params = net.network.params();
    const double step = hyperparams.learning_rate / n;
    for (std::size_t p = 0; p < params.size(); ++p) params[p] -= step * grad[p];
  }
  return net;
}

absl::StatusOr<double> MiNetworkOutput(const MINetwork& net,
                                       const MembershipRecord& record) {
  MIAUG_ASSIGN_OR_RETURN(const std::vector<double> features,
                         StandardizedFeatures(net, record));
  nn::Workspace ws;
  net.network.Forward(features, ws);
  return Sigmoid(ws.activations.back()[0]);
}

absl::StatusOr<bool> MiNetworkAttack(const MembershipRecord& record,
                                     const MINetwork& net) {
  MIAUG_ASSIGN_OR_RETURN(const double output, MiNetworkOutput(net, record));
  return output > 0.5;
}

}  // namespace miaug
