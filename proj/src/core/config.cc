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

#include "miaug/core/config.h"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "miaug/core/records_io.h"
#include "miaug/core/strings.h"

namespace miaug {
namespace {

struct Binding {
  std::string key;
  std::string help;
  std::function<std::string(const ExperimentConfig&)> get;
  std::function<absl::Status(ExperimentConfig&, std::string_view)> set;
};

absl::Status BadValue(std::string_view key, std::string_view value) {
  return absl::InvalidArgumentError(
      absl::StrCat("bad value '", Sv(value), "' for key '", Sv(key), "'"));
}

template <typename Field>
Binding IntKey(std::string key, std::string help, Field field) {
  return Binding{
      key, std::move(help),
      [field](const ExperimentConfig& c) { return absl::StrCat(field(c)); },
      [field, key](ExperimentConfig& c, std::string_view v) -> absl::Status {
        int parsed = 0;
        if (!absl::SimpleAtoi(Sv(v), &parsed)) return BadValue(key, v);
        field(c) = parsed;
        return absl::OkStatus();
      }};
}

template <typename Field>
Binding DoubleKey(std::string key, std::string help, Field field) {
  return Binding{
      key, std::move(help),
      [field](const ExperimentConfig& c) {
        char buf[32];
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), field(c));
        return ec == std::errc() ? std::string(buf, end)
                                 : FormatDouble(field(c));
      },
      [field, key](ExperimentConfig& c, std::string_view v) -> absl::Status {
        double parsed = 0;
        if (!absl::SimpleAtod(Sv(v), &parsed)) return BadValue(key, v);
        field(c) = parsed;
        return absl::OkStatus();
      }};
}

template <typename Field>
Binding BoolKey(std::string key, std::string help, Field field) {
  return Binding{
      key, std::move(help),
      [field](const ExperimentConfig& c) {
        return std::string(field(c) ? "true" : "false");
      },
      [field, key](ExperimentConfig& c, std::string_view v) -> absl::Status {
        bool parsed = false;
        if (!absl::SimpleAtob(Sv(v), &parsed)) return BadValue(key, v);
        field(c) = parsed;
        return absl::OkStatus();
      }};
}

template <typename Enum>
Binding EnumKey(std::string key, std::string help,
                std::vector<std::pair<std::string, Enum>> names,
                std::function<Enum&(ExperimentConfig&)> field) {
  std::vector<std::string> choices;
  for (const auto& [name, value] : names) choices.push_back(name);
  help = absl::StrCat(help, " (", absl::StrJoin(choices, "|"), ")");
  return Binding{
      key, std::move(help),
      [field, names](const ExperimentConfig& c) {
        const Enum value = field(const_cast<ExperimentConfig&>(c));
        for (const auto& [name, v] : names) {
          if (v == value) return name;
        }
        return std::string("?");
      },
      [field, names, key](ExperimentConfig& c,
                          std::string_view v) -> absl::Status {
        for (const auto& [name, value] : names) {
          if (name == v) {
            field(c) = value;
            return absl::OkStatus();
          }
        }
        return BadValue(key, v);
      }};
}

const std::vector<Binding>& Bindings() {
  using C = ExperimentConfig;
  static const std::vector<Binding>* const kBindings = new std::vector<
      Binding>{
      Binding{"seed", "master seed; every random stream derives from it",
              [](const C& c) { return absl::StrCat(c.master_seed); },
              [](C& c, std::string_view v) -> absl::Status {
                std::uint64_t parsed = 0;
                if (!absl::SimpleAtoi(Sv(v), &parsed)) return BadValue("seed", v);
                c.master_seed = parsed;
                return absl::OkStatus();
              }},
      IntKey("k", "augmented instances per member at training time (0 = none)",
             [](auto& c) -> auto& { return c.k; }),
      DoubleKey("q", "membership prior P(m_i = 1), in (0, 1)",
                [](auto& c) -> auto& { return c.q; }),
      EnumKey<DatasetKind>(
          "data.kind", "synthetic dataset",
          {{"shapes", DatasetKind::kShapes}, {"blobs", DatasetKind::kBlobs}},
          [](C& c) -> DatasetKind& { return c.data.kind; }),
      IntKey("data.num_candidates", "candidate samples drawn for the audit",
             [](auto& c) -> auto& { return c.data.num_candidates; }),
      IntKey("data.num_classes", "number of classes",
             [](auto& c) -> auto& { return c.data.num_classes; }),
      IntKey("data.grid_side", "side of the square grid (shapes)",
             [](auto& c) -> auto& { return c.data.grid_side; }),
      IntKey("data.feature_dim", "vector length (blobs)",
             [](auto& c) -> auto& { return c.data.feature_dim; }),
      DoubleKey("data.pixel_noise", "per-feature noise level",
                [](auto& c) -> auto& { return c.data.pixel_noise; }),
      DoubleKey("data.label_noise", "fraction of labels replaced at random",
                [](auto& c) -> auto& { return c.data.label_noise; }),
      BoolKey("data.random_labels", "ignore the generator's labels entirely",
              [](auto& c) -> auto& { return c.data.random_labels; }),
      Binding{"pool.kinds",
              "comma-separated primitives "
              "(flip,translate,rotate,crop_pad,shear,cutout,noise)",
              [](const C& c) {
                std::vector<std::string> names;
                for (TransformKind k : c.pool.kinds) {
                  names.emplace_back(TransformKindName(k));
                }
                return absl::StrJoin(names, ",");
              },
              [](C& c, std::string_view v) -> absl::Status {
                std::vector<TransformKind> kinds;
                for (absl::string_view part :
                     absl::StrSplit(Sv(v), ',', absl::SkipWhitespace())) {
                  auto kind = ParseTransformKind(StdSv(absl::StripAsciiWhitespace(part)));
                  if (!kind.ok()) return kind.status();
                  kinds.push_back(*kind);
                }
                c.pool.kinds = std::move(kinds);
                return absl::OkStatus();
              }},
      DoubleKey("pool.flip_probability", "probability a flip is active",
                [](auto& c) -> auto& { return c.pool.flip_probability; }),
      IntKey("pool.max_translate", "translation offsets drawn from [-n, n]",
             [](auto& c) -> auto& { return c.pool.max_translate; }),
      DoubleKey("pool.max_rotate_degrees", "rotation angle drawn from [-a, a]",
                [](auto& c) -> auto& { return c.pool.max_rotate_degrees; }),
      IntKey("pool.crop_padding", "zero padding before the random crop",
             [](auto& c) -> auto& { return c.pool.crop_padding; }),
      DoubleKey("pool.max_shear", "shear factor drawn from [-s, s]",
                [](auto& c) -> auto& { return c.pool.max_shear; }),
      IntKey("pool.max_cutout_side", "cutout side drawn from [1, n]",
             [](auto& c) -> auto& { return c.pool.max_cutout_side; }),
      DoubleKey("pool.noise_sigma", "additive-noise standard deviation",
                [](auto& c) -> auto& { return c.pool.noise_sigma; }),
      EnumKey<Architecture>(
          "model.arch", "target architecture",
          {{"softmax", Architecture::kSoftmaxRegression},
           {"mlp", Architecture::kMlp},
           {"convnet", Architecture::kTinyConvNet}},
          [](C& c) -> Architecture& { return c.model.architecture; }),
      Binding{"model.hidden", "comma-separated MLP hidden layer sizes",
              [](const C& c) { return absl::StrJoin(c.model.hidden_sizes, ","); },
              [](C& c, std::string_view v) -> absl::Status {
                std::vector<int> sizes;
                for (absl::string_view part :
                     absl::StrSplit(Sv(v), ',', absl::SkipWhitespace())) {
                  int n = 0;
                  if (!absl::SimpleAtoi(part, &n)) {
                    return BadValue("model.hidden", v);
                  }
                  sizes.push_back(n);
                }
                c.model.hidden_sizes = std::move(sizes);
                return absl::OkStatus();
              }},
      EnumKey<Activation>(
          "model.activation", "hidden activation",
          {{"tanh", Activation::kTanh}, {"relu", Activation::kRelu}},
          [](C& c) -> Activation& { return c.model.activation; }),
      IntKey("model.conv_channels", "kernels per convolution layer (convnet)",
             [](auto& c) -> auto& { return c.model.conv_channels; }),
      IntKey("model.dense_units", "dense layer width after pooling (convnet)",
             [](auto& c) -> auto& { return c.model.dense_units; }),
      IntKey("train.epochs", "passes over the augmented training set",
             [](auto& c) -> auto& { return c.train.epochs; }),
      DoubleKey("train.lr", "initial SGD learning rate",
                [](auto& c) -> auto& { return c.train.learning_rate; }),
      DoubleKey("train.lr_decay_at", "fraction of training before the decay",
                [](auto& c) -> auto& { return c.train.lr_decay_at; }),
      DoubleKey("train.lr_decay_factor", "learning-rate divisor at the decay",
                [](auto& c) -> auto& { return c.train.lr_decay_factor; }),
      IntKey("train.batch_size", "augmented instances per mini-batch",
             [](auto& c) -> auto& { return c.train.batch_size; }),
      DoubleKey("train.momentum", "SGD momentum (0 = plain SGD)",
                [](auto& c) -> auto& { return c.train.momentum; }),
      BoolKey("train.scale_epochs_by_k",
              "divide epochs by k (equal gradient visits per member)",
              [](auto& c) -> auto& { return c.train.scale_epochs_by_k; }),
      BoolKey("train.resample_each_epoch",
              "fresh transform sets every epoch instead of one per sample",
              [](auto& c) -> auto& { return c.train.resample_each_epoch; }),
      IntKey("attack.k", "augmented queries per audited sample (0 = auto)",
             [](auto& c) -> auto& { return c.attack.k; }),
      IntKey("attack.moment_order", "highest moment order m",
             [](auto& c) -> auto& { return c.attack.moment_order; }),
      IntKey("attack.mi_epochs", "full-batch epochs for the MI network",
             [](auto& c) -> auto& { return c.attack.mi_epochs; }),
      DoubleKey("attack.mi_lr", "MI network learning rate",
                [](auto& c) -> auto& { return c.attack.mi_learning_rate; }),
      BoolKey("attack.standardize", "standardize MI-network features",
              [](auto& c) -> auto& { return c.attack.standardize; }),
      IntKey("attack.train_members", "members in the attack-train split",
             [](auto& c) -> auto& { return c.attack.train_members; }),
      IntKey("attack.train_nonmembers", "non-members in the attack-train split",
             [](auto& c) -> auto& { return c.attack.train_nonmembers; }),
      BoolKey("attack.reuse_transforms",
              "query with the training-time transform sets; false draws fresh ones (ignored when k = 0)",
              [](auto& c) -> auto& { return c.attack.reuse_transforms; }),
  };
  return *kBindings;
}

}  // namespace

std::string_view TransformKindName(TransformKind kind) {
  switch (kind) {
    case TransformKind::kHorizontalFlip:
      return "flip";
    case TransformKind::kTranslate:
      return "translate";
    case TransformKind::kRotate:
      return "rotate";
    case TransformKind::kCropPad:
      return "crop_pad";
    case TransformKind::kShear:
      return "shear";
    case TransformKind::kCutout:
      return "cutout";
    case TransformKind::kAdditiveNoise:
      return "noise";
  }
  return "?";
}

absl::StatusOr<TransformKind> ParseTransformKind(std::string_view name) {
  for (TransformKind kind :
       {TransformKind::kHorizontalFlip, TransformKind::kTranslate,
        TransformKind::kRotate, TransformKind::kCropPad, TransformKind::kShear,
        TransformKind::kCutout, TransformKind::kAdditiveNoise}) {
    if (TransformKindName(kind) == name) return kind;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown transform kind '", Sv(name), "'"));
}

int ExperimentConfig::AttackK() const {
  if (attack.k > 0) return attack.k;
  return k > 0 ? k : 10;
}

absl::Status ExperimentConfig::Validate() const {
  auto fail = [](std::string_view what) {
    return absl::InvalidArgumentError(absl::StrCat("invalid config: ", Sv(what)));
  };
  if (k < 0) return fail("k must be >= 0");
  if (!(q > 0.0 && q < 1.0)) return fail("q must lie in (0, 1)");
  if (data.num_candidates < 4) return fail("data.num_candidates too small");
  if (data.num_classes < 2) return fail("data.num_classes must be >= 2");
  if (data.grid_side < 4) return fail("data.grid_side must be >= 4");
  if (data.feature_dim < 1) return fail("data.feature_dim must be >= 1");
  if (data.pixel_noise < 0) return fail("data.pixel_noise must be >= 0");
  if (data.label_noise < 0 || data.label_noise > 1) {
    return fail("data.label_noise must lie in [0, 1]");
  }
  if (k > 0 && pool.kinds.empty()) return fail("pool.kinds is empty");
  if (pool.flip_probability < 0 || pool.flip_probability > 1) {
    return fail("pool.flip_probability must lie in [0, 1]");
  }
  if (pool.max_translate < 0 || pool.crop_padding < 0 ||
      pool.max_cutout_side < 1 || pool.max_rotate_degrees < 0 ||
      pool.max_shear < 0 || pool.noise_sigma < 0) {
    return fail("pool ranges must be non-negative (cutout side >= 1)");
  }
  for (int h : model.hidden_sizes) {
    if (h < 1) return fail("model.hidden sizes must be >= 1");
  }
  if (model.conv_channels < 1 || model.dense_units < 1) {
    return fail("convnet widths must be >= 1");
  }
  if (train.epochs < 0) return fail("train.epochs must be >= 0");
  if (!(train.learning_rate > 0)) return fail("train.lr must be > 0");
  if (train.batch_size < 1) return fail("train.batch_size must be >= 1");
  if (train.lr_decay_factor <= 0) return fail("train.lr_decay_factor <= 0");
  if (train.momentum < 0 || train.momentum >= 1) {
    return fail("train.momentum must lie in [0, 1)");
  }
  if (attack.k < 0) return fail("attack.k must be >= 0");
  if (attack.moment_order < 1) return fail("attack.moment_order must be >= 1");
  if (attack.mi_epochs < 0 || !(attack.mi_learning_rate > 0)) {
    return fail("MI-network training parameters out of range");
  }
  if (attack.train_members < 1 || attack.train_nonmembers < 1) {
    return fail("attack-train split needs both classes");
  }
  if (ReuseTrainingTransforms() && k != AttackK()) {
    return fail("attack.reuse_transforms requires attack k == k");
  }
  return absl::OkStatus();
}

absl::StatusOr<FlatConfig> ParseFlatConfig(std::string_view text) {
  FlatConfig config;
  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(Sv(text), '\n')) {
    ++line_number;
    if (auto hash = line.find('#'); hash != absl::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == absl::string_view::npos) {
      return absl::InvalidArgumentError(
          absl::StrCat("config line ", line_number, ": expected key = value"));
    }
    std::string key(absl::StripAsciiWhitespace(line.substr(0, eq)));
    std::string value(absl::StripAsciiWhitespace(line.substr(eq + 1)));
    if (key.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("config line ", line_number, ": empty key"));
    }
    config[key] = value;
  }
  return config;
}

absl::StatusOr<FlatConfig> LoadFlatConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseFlatConfig(buffer.str());
}

std::vector<ConfigKey> ExperimentConfigKeys() {
  const ExperimentConfig defaults;
  std::vector<ConfigKey> keys;
  for (const Binding& b : Bindings()) {
    keys.push_back({b.key, b.get(defaults), b.help});
  }
  return keys;
}

absl::StatusOr<ExperimentConfig> ApplyFlatConfig(const ExperimentConfig& base,
                                                 const FlatConfig& overrides) {
  ExperimentConfig config = base;
  for (const auto& [key, value] : overrides) {
    const Binding* binding = nullptr;
    for (const Binding& b : Bindings()) {
      if (b.key == key) binding = &b;
    }
    if (binding == nullptr) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown config key '", key, "'"));
    }
    if (auto status = binding->set(config, value); !status.ok()) return status;
  }
  if (auto status = config.Validate(); !status.ok()) return status;
  return config;
}

std::vector<std::pair<std::string, std::string>> ToKeyValues(
    const ExperimentConfig& config) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Binding& b : Bindings()) out.emplace_back(b.key, b.get(config));
  return out;
}

std::string FormatFlatConfig(const ExperimentConfig& config) {
  std::string text;
  for (const auto& [key, value] : ToKeyValues(config)) {
    absl::StrAppend(&text, key, " = ", value, "\n");
  }
  return text;
}

}  // namespace miaug
