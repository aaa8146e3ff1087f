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

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "miaug/attacks/features.h"
#include "miaug/attacks/threshold.h"
#include "miaug/bayes_oracle/suite.h"
#include "miaug/core/config.h"
#include "miaug/core/loss.h"
#include "miaug/dp_bound/dp_bound.h"
#include "miaug/harness/experiment.h"
#include "miaug/harness/histogram.h"
#include "miaug/harness/results_io.h"
#include "pybind11/pybind11.h"
#include "pybind11/stl.h"

namespace py = pybind11;

namespace miaug {
namespace {

template <typename T>
T Unwrap(absl::StatusOr<T> value) {
  if (!value.ok()) throw std::runtime_error(value.status().ToString());
  return *std::move(value);
}

ExperimentConfig Resolve(const std::map<std::string, std::string>& overrides) {
  FlatConfig flat(overrides.begin(), overrides.end());
  return Unwrap(ApplyFlatConfig(ExperimentConfig(), flat));
}

py::dict ResultDict(const AttackResult& r) {
  py::dict d;
  d["attack"] = r.attack;
  d["k"] = r.k;
  d["success_rate"] = r.success_rate;
  d["tp"] = r.tp;
  d["tn"] = r.tn;
  d["fp"] = r.fp;
  d["fn"] = r.fn;
  d["gap"] = r.gap;
  d["seed"] = r.seed;
  return d;
}

py::dict RunDict(const ExperimentResult& run) {
  py::dict d;
  py::list attacks;
  for (const AttackResult& r : run.attacks) attacks.append(ResultDict(r));
  d["attacks"] = attacks;
  d["results_csv"] = FormatResultsCsv(run.attacks);
  d["train_gap"] = run.train.gap;
  d["train_loss"] = run.train.train_loss;
  d["test_loss"] = run.train.test_loss;
  d["single_loss_index"] = run.single_loss_index;
  std::vector<MembershipRecord> eval;
  for (const MembershipRecord& r : run.records) {
    if (r.split == Split::kAttackEval) eval.push_back(r);
  }
  d["overlap_single"] =
      Unwrap(EmitHistograms(eval, Statistic::kSingleLoss, run.single_loss_index))
          .overlap;
  d["overlap_mean"] = Unwrap(EmitHistograms(eval, Statistic::kMeanLoss)).overlap;
  return d;
}

}  // namespace
}  // namespace miaug

PYBIND11_MODULE(_miaug, m) {
  using namespace miaug;
  m.doc() = "Membership inference auditing under data augmentation";

  m.def("cross_entropy", [](const std::vector<double>& logits, int label) {
    return Unwrap(CrossEntropyLoss(logits, label));
  }, py::arg("logits"), py::arg("label"));
  m.def("generalization_gap", [](const std::vector<double>& train,
                                 const std::vector<double>& test) {
    return Unwrap(GeneralizationGap(train, test));
  }, py::arg("train_losses"), py::arg("test_losses"));

  m.def("mean_statistic", [](const std::vector<double>& losses) {
    return Unwrap(MeanStatistic(losses));
  }, py::arg("losses"));
  m.def("moment_features", [](const std::vector<double>& losses, int order) {
    return Unwrap(MomentFeatures(losses, order));
  }, py::arg("losses"), py::arg("order") = 10);
  m.def("calibrate_threshold", [](const std::vector<double>& values,
                                  const std::vector<bool>& is_member) {
    const Calibration c = Unwrap(CalibrateOnValues(values, is_member));
    return py::make_tuple(c.tau, c.balanced_accuracy);
  }, py::arg("values"), py::arg("is_member"),
     "threshold tau (member <=> value < tau) and its balanced accuracy");

  m.def("mi_upper_bound", [](double epsilon, double q, int k) {
    return Unwrap(MiUpperBound(DpParams{epsilon, k, q}));
  }, py::arg("epsilon"), py::arg("q"), py::arg("k") = 1);
  m.def("randomized_world_check", [](double epsilon, double q, int k,
                                     int trials, std::uint64_t seed) {
    const WorldCheckReport r =
        Unwrap(RandomizedWorldCheck(DpParams{epsilon, k, q}, trials, seed));
    py::dict d;
    d["trials"] = r.trials;
    d["evaluations"] = r.evaluations;
    d["violations"] = r.violations;
    d["max_posterior"] = r.max_posterior;
    d["max_ratio"] = r.max_ratio;
    return d;
  }, py::arg("epsilon"), py::arg("q"), py::arg("k") = 1,
     py::arg("trials") = 100, py::arg("seed") = 1);

  m.def("run_oracle_suite", [](int worlds, std::uint64_t seed) {
    OracleSuiteOptions opts;
    opts.num_worlds = worlds;
    opts.seed = seed;
    return FormatOracleReport(Unwrap(RunOracleSuite(opts)));
  }, py::arg("worlds") = 100, py::arg("seed") = 1,
     "key = value report of the exact-enumeration checks");

  m.def("config_keys", [] {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const ConfigKey& k : ExperimentConfigKeys()) {
      out.emplace_back(k.key, k.default_value, k.help);
    }
    return out;
  });
  m.def("resolve_config", [](const std::map<std::string, std::string>& o) {
    return FormatFlatConfig(Resolve(o));
  }, py::arg("overrides") = std::map<std::string, std::string>{});

  m.def("run_experiment", [](const std::map<std::string, std::string>& o) {
    const ExperimentConfig config = Resolve(o);
    ExperimentResult run;
    {
      py::gil_scoped_release release;
      run = Unwrap(RunExperiment(config));
    }
    return RunDict(run);
  }, py::arg("overrides") = std::map<std::string, std::string>{},
     "config keys as strings, e.g. {'k': '4', 'train.epochs': '10'}");
  m.def("sweep_k", [](const std::vector<int>& ks,
                      const std::map<std::string, std::string>& o) {
    const ExperimentConfig config = Resolve(o);
    std::vector<ExperimentResult> runs;
    {
      py::gil_scoped_release release;
      runs = Unwrap(SweepK(config, ks));
    }
    py::list out;
    for (const ExperimentResult& run : runs) out.append(RunDict(run));
    return out;
  }, py::arg("k_values"),
     py::arg("overrides") = std::map<std::string, std::string>{});
}
