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

#include "miaug/target_model/trainer.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"
#include "miaug/core/loss.h"
#include "miaug/core/numeric.h"
#include "miaug/core/rng.h"
#include "miaug/core/status_macros.h"

namespace miaug {
namespace {

// Mixes the epoch into the per-sample stream index when resampling.
std::uint64_t TransformStreamIndex(std::int64_t sample_id, int epoch) {
  return static_cast<std::uint64_t>(sample_id) ^
         (static_cast<std::uint64_t>(epoch) << 40);
}

absl::StatusOr<std::vector<Sample>> InstancesFor(const Sample& sample, int k,
                                                 const PoolSpec& pool,
                                                 std::uint64_t master_seed,
                                                 int epoch) {
  if (k == 0) return std::vector<Sample>{sample};
  MIAUG_ASSIGN_OR_RETURN(
      TransformSet set,
      TrainingTransformSet(master_seed, sample.id, k, pool, epoch));
  return AugmentSample(sample, set);
}

}  // namespace

absl::StatusOr<TransformSet> TrainingTransformSet(std::uint64_t master_seed,
                                                  std::int64_t sample_id,
                                                  int k, const PoolSpec& pool,
                                                  int epoch) {
  RngStream rng(master_seed, "train-transforms",
                TransformStreamIndex(sample_id, epoch));
  return SampleTransformSet(rng, k, pool);
}

double MeanInstanceLoss(const TargetModel& model,
                        std::span<const Sample> instances,
                        std::span<double> grad) {
  nn::Workspace ws;
  if (!grad.empty()) std::fill(grad.begin(), grad.end(), 0.0);
  double total = 0.0;
  for (const Sample& s : instances) {
    total += nn::SoftmaxCrossEntropy(model.network, s.features, s.label, ws,
                                     grad);
  }
  const double scale = 1.0 / static_cast<double>(instances.size());
  for (double& g : grad) g *= scale;
  return total * scale;
}

absl::StatusOr<TrainReport> EvaluateTarget(
    const TargetModel& model, std::span<const Sample> dataset,
    std::span<const MembershipBit> membership) {
  if (dataset.size() != membership.size()) {
    return absl::InvalidArgumentError("dataset/membership size mismatch");
  }
  std::vector<double> train_losses, test_losses;
  int train_correct = 0, test_correct = 0;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    MIAUG_ASSIGN_OR_RETURN(const double loss, LossOracle(model, dataset[i]));
    MIAUG_ASSIGN_OR_RETURN(const int predicted, Predict(model, dataset[i]));
    const bool correct = predicted == dataset[i].label;
    if (membership[i].value) {
      train_losses.push_back(loss);
      train_correct += correct;
    } else {
      test_losses.push_back(loss);
      test_correct += correct;
    }
  }
  TrainReport report;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  report.train_loss = train_losses.empty() ? nan : Mean(train_losses);
  report.test_loss = test_losses.empty() ? nan : Mean(test_losses);
  report.train_accuracy =
      train_losses.empty() ? nan
                           : static_cast<double>(train_correct) /
                                 static_cast<double>(train_losses.size());
  report.test_accuracy =
      test_losses.empty() ? nan
                          : static_cast<double>(test_correct) /
                                static_cast<double>(test_losses.size());
  auto gap = GeneralizationGap(train_losses, test_losses);
  report.gap = gap.ok() ? *gap : nan;
  return report;
}

absl::StatusOr<TrainedTarget> TrainTarget(
    std::span<const Sample> dataset, std::span<const MembershipBit> membership,
    int num_classes, int k, const PoolSpec& pool, const ModelSpec& model_spec,
    const TrainSpec& train_spec, std::uint64_t master_seed) {
  if (dataset.size() != membership.size()) {
    return absl::InvalidArgumentError("dataset/membership size mismatch");
  }
  if (k < 0) return absl::InvalidArgumentError("k must be >= 0");
  std::vector<const Sample*> members;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (membership[i].value) members.push_back(&dataset[i]);
  }
  if (members.empty()) {
    return absl::InvalidArgumentError("training needs at least one member");
  }
  for (const Sample* s : members) {
    MIAUG_RETURN_IF_ERROR(ValidateSample(*s, num_classes));
  }

  MIAUG_ASSIGN_OR_RETURN(
      TargetModel model,
      BuildTargetModel(model_spec, members.front()->shape, num_classes));
  RngStream init_rng(master_seed, "target-init");
  model.network.InitGlorotUniform(init_rng);

  int epochs = train_spec.epochs;
  if (train_spec.scale_epochs_by_k && k > 1 && epochs > 0) {
    epochs = std::max(1, static_cast<int>(std::lround(
                             static_cast<double>(epochs) / k)));
  }
  const int decay_epoch =
      static_cast<int>(std::ceil(train_spec.lr_decay_at * epochs));

  std::vector<Sample> instances;
  auto build_instances = [&](int epoch) -> absl::Status {
    instances.clear();
    for (const Sample* s : members) {
      MIAUG_ASSIGN_OR_RETURN(std::vector<Sample> augmented,
                             InstancesFor(*s, k, pool, master_seed, epoch));
      for (Sample& a : augmented) instances.push_back(std::move(a));
    }
    return absl::OkStatus();
  };
  MIAUG_RETURN_IF_ERROR(build_instances(0));

  const std::size_t num_params = model.network.num_params();
  std::vector<double> grad(num_params), velocity(num_params, 0.0);
  std::vector<std::size_t> order(instances.size());
  nn::Workspace ws;
  const std::size_t batch = static_cast<std::size_t>(train_spec.batch_size);

  for (int epoch = 0; epoch < epochs; ++epoch) {
    if (train_spec.resample_each_epoch && epoch > 0 && k > 0) {
      MIAUG_RETURN_IF_ERROR(build_instances(epoch));
    }
    const double lr = epoch < decay_epoch
                          ? train_spec.learning_rate
                          : train_spec.learning_rate / train_spec.lr_decay_factor;
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    RngStream order_rng(master_seed, "train-order",
                        static_cast<std::uint64_t>(epoch));
    order_rng.Shuffle(std::span<std::size_t>(order));

    for (std::size_t start = 0; start < order.size(); start += batch) {
      const std::size_t end = std::min(order.size(), start + batch);
      std::fill(grad.begin(), grad.end(), 0.0);
      double loss = 0.0;
      for (std::size_t i = start; i < end; ++i) {
        const Sample& s = instances[order[i]];
        loss += nn::SoftmaxCrossEntropy(model.network, s.features, s.label, ws,
                                        grad);
      }
      if (!std::isfinite(loss)) {
        return absl::InternalError(
            absl::StrCat("training diverged at epoch ", epoch));
      }
      const double scale = 1.0 / static_cast<double>(end - start);
      auto params = model.network.params();
      if (train_spec.momentum > 0) {
        for (std::size_t p = 0; p < num_params; ++p) {
          velocity[p] = train_spec.momentum * velocity[p] + grad[p] * scale;
          params[p] -= lr * velocity[p];
        }
      } else {
        for (std::size_t p = 0; p < num_params; ++p) {
          params[p] -= lr * grad[p] * scale;
        }
      }
    }
  }

  for (double p : model.network.params()) {
    if (!std::isfinite(p)) {
      return absl::InternalError(
          absl::StrCat("training diverged at epoch ", epochs - 1));
    }
  }
  MIAUG_ASSIGN_OR_RETURN(TrainReport report,
                         EvaluateTarget(model, dataset, membership));
  report.epochs_run = epochs;
  report.instance_loss = MeanInstanceLoss(model, instances);
  return TrainedTarget{std::move(model), report};
}

}  // namespace miaug
