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

// miaug: membership-inference auditing for models trained with data
// augmentation. See `miaug --help`.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "miaug/attacks/checkpoint.h"
#include "miaug/attacks/mi_network.h"
#include "miaug/attacks/threshold.h"
#include "miaug/bayes_oracle/suite.h"
#include "miaug/core/config.h"
#include "miaug/core/invariant.h"
#include "miaug/core/records_io.h"
#include "miaug/core/rng.h"
#include "miaug/core/status_macros.h"
#include "miaug/core/strings.h"
#include "miaug/dp_bound/dp_bound.h"
#include "miaug/harness/experiment.h"
#include "miaug/harness/histogram.h"
#include "miaug/harness/results_io.h"
#include "miaug/target_model/datasets.h"
#include "miaug/target_model/extract.h"
#include "miaug/target_model/target_model.h"
#include "miaug/target_model/trainer.h"

namespace miaug {
namespace {

enum ExitCode {
  kExitOk = 0,
  kExitConfig = 2,
  kExitStage = 3,
  kExitInvariant = 4,
};

// Carries which exit code a failure maps to.
struct CliError {
  ExitCode code;
  absl::Status status;
};

struct CommonOptions {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string seed;
  std::string out_dir = "miaug_out";
  bool verbose = false;
};

struct Options {
  CommonOptions common;
  // train / extract
  std::string model_path;
  // attack
  std::string records_path;
  std::string attack_name = kAttackMoments;
  std::string loss_index = "original";
  std::string attack_model_path;
  // sweep
  std::vector<int> k_values = {1, 2, 4, 8, 16};
  // oracle
  int worlds = 100;
  // bound
  double epsilon = 0.0;
  double q = 0.5;
  int bound_k = 1;
  int check_worlds = 0;
};

std::string ConfigKeyHelp() {
  std::string text =
      "Configuration keys (config file lines `key = value`, or --set "
      "key=value):\n";
  for (const ConfigKey& key : ExperimentConfigKeys()) {
    absl::StrAppend(&text, "  ", key.key, " (default ", key.default_value,
                    ")\n      ", key.help, "\n");
  }
  absl::StrAppend(&text,
                  "\nExit codes: 0 success, 2 configuration error, 3 stage "
                  "failure, 4 invariant violation.\n");
  return text;
}

void AddCommon(CLI::App* app, CommonOptions& common) {
  app->add_option("--config", common.config_path,
                  "config file (key = value lines) or a previous manifest.json");
  app->add_option("--set", common.overrides,
                  "override one config key, KEY=VALUE (repeatable)");
  app->add_option("--seed", common.seed, "master seed (overrides `seed`)");
  app->add_option("--out", common.out_dir, "output directory")
      ->capture_default_str();
  app->add_flag("-v,--verbose", common.verbose, "progress on stderr");
  app->footer(ConfigKeyHelp());
}

absl::StatusOr<FlatConfig> ReadConfigFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') {
    return ParseFlatConfig(text);
  }
  // a manifest: take its resolved config block
  const nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.contains("config") ||
      !doc["config"].is_object()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": JSON config must be a manifest with a "
                           "\"config\" object"));
  }
  FlatConfig flat;
  for (const auto& [key, value] : doc["config"].items()) {
    if (!value.is_string()) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ": manifest value for ", key, " is not a string"));
    }
    flat[key] = value.get<std::string>();
  }
  return flat;
}

absl::StatusOr<ExperimentConfig> ResolveConfig(const CommonOptions& common) {
  FlatConfig flat;
  if (!common.config_path.empty()) {
    MIAUG_ASSIGN_OR_RETURN(flat, ReadConfigFile(common.config_path));
  }
  for (const std::string& item : common.overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("--set expects KEY=VALUE, got '", item, "'"));
    }
    std::string key = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    flat[key] = value;
  }
  if (!common.seed.empty()) flat["seed"] = common.seed;
  return ApplyFlatConfig(ExperimentConfig{}, flat);
}

absl::Status EnsureDir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return absl::UnavailableError(
        absl::StrCat("cannot create ", dir, ": ", ec.message()));
  }
  return absl::OkStatus();
}

std::string OutPath(const CommonOptions& common, const std::string& name) {
  return (std::filesystem::path(common.out_dir) / name).string();
}

absl::Status WriteManifest(const CommonOptions& common,
                           const std::string& subcommand,
                           const ExperimentConfig& config,
                           const nlohmann::ordered_json& arguments) {
  nlohmann::ordered_json doc;
  doc["tool"] = "miaug";
  doc["version"] = MIAUG_VERSION;
  doc["subcommand"] = subcommand;
  doc["seed"] = config.master_seed;
  doc["fingerprint"] = ConfigFingerprint(config);
  nlohmann::ordered_json resolved = nlohmann::ordered_json::object();
  for (const auto& [key, value] : ToKeyValues(config)) resolved[key] = value;
  doc["config"] = resolved;
  doc["arguments"] = arguments;
  return WriteTextFile(OutPath(common, "manifest.json"), doc.dump(2) + "\n");
}

void Log(const CommonOptions& common, const std::string& message) {
  if (common.verbose) std::cerr << "[miaug] " << message << "\n";
}

// Dataset and membership bits are functions of the config alone, so every
// stage can rebuild them.
struct Population {
  std::vector<Sample> dataset;
  std::vector<MembershipBit> membership;
};

absl::StatusOr<Population> BuildPopulation(const ExperimentConfig& config) {
  Population p;
  MIAUG_ASSIGN_OR_RETURN(p.dataset,
                         GenerateDataset(config.data, config.master_seed));
  p.membership = DrawMembership(p.dataset.size(), config.q, config.master_seed);
  return p;
}

nlohmann::ordered_json ReportJson(const TrainReport& r) {
  auto real = [](double v) -> nlohmann::ordered_json {
    return std::isfinite(v) ? nlohmann::ordered_json(v) : nullptr;
  };
  return {{"train_loss", real(r.train_loss)},
          {"test_loss", real(r.test_loss)},
          {"gap", real(r.gap)},
          {"train_accuracy", real(r.train_accuracy)},
          {"test_accuracy", real(r.test_accuracy)},
          {"epochs_run", r.epochs_run},
          {"instance_loss", real(r.instance_loss)}};
}

CliError Stage(absl::Status status) {
  if (IsInvariantViolation(status)) return {kExitInvariant, status};
  return {kExitStage, std::move(status)};
}

// Every subcommand: resolve config, create the output dir, write the
// manifest, then run. Config problems never reach the stage code.
template <typename Body>
CliError RunWithConfig(const Options& opt, const std::string& name,
                       const nlohmann::ordered_json& arguments, Body body) {
  auto config = ResolveConfig(opt.common);
  if (!config.ok()) return {kExitConfig, config.status()};
  if (absl::Status s = EnsureDir(opt.common.out_dir); !s.ok()) {
    return {kExitStage, s};
  }
  if (absl::Status s = WriteManifest(opt.common, name, *config, arguments);
      !s.ok()) {
    return {kExitStage, s};
  }
  return body(*config);
}

CliError CmdTrain(const Options& opt) {
  return RunWithConfig(opt, "train", {}, [&](const ExperimentConfig& config)
                                             -> CliError {
    auto pop = BuildPopulation(config);
    if (!pop.ok()) return Stage(AnnotateStage("data", pop.status()));
    Log(opt.common, "training target");
    auto trained = TrainTarget(pop->dataset, pop->membership,
                               config.data.num_classes, config.k, config.pool,
                               config.model, config.train, config.master_seed);
    if (!trained.ok()) return Stage(AnnotateStage("train", trained.status()));
    const std::string model_path = OutPath(opt.common, "target_model.json");
    if (auto s = SaveTargetModel(trained->model, model_path); !s.ok()) {
      return Stage(s);
    }
    const std::string report = ReportJson(trained->report).dump(2) + "\n";
    if (auto s = WriteTextFile(OutPath(opt.common, "train_report.json"), report);
        !s.ok()) {
      return Stage(s);
    }
    std::cout << report;
    return {kExitOk, absl::OkStatus()};
  });
}

CliError CmdExtract(const Options& opt) {
  const std::string model_path = opt.model_path.empty()
                                     ? OutPath(opt.common, "target_model.json")
                                     : opt.model_path;
  return RunWithConfig(
      opt, "extract", {{"model", model_path}},
      [&](const ExperimentConfig& config) -> CliError {
        auto model = LoadTargetModel(model_path);
        if (!model.ok()) return Stage(AnnotateStage("load", model.status()));
        auto pop = BuildPopulation(config);
        if (!pop.ok()) return Stage(AnnotateStage("data", pop.status()));
        ExtractOptions eo;
        eo.k = config.AttackK();
        eo.reuse_training_transforms = config.ReuseTrainingTransforms();
        eo.train_k = config.k;
        Log(opt.common, "extracting loss sets");
        auto raw = ExtractLossSets(*model, pop->dataset, pop->membership,
                                   config.pool, eo, config.master_seed);
        if (!raw.ok()) return Stage(AnnotateStage("extract", raw.status()));
        auto records = AssignSplits(*raw, config.attack, config.master_seed);
        if (!records.ok()) {
          return Stage(AnnotateStage("split", records.status()));
        }
        if (auto s = CheckSplitsDisjoint(*records); !s.ok()) {
          return {kExitInvariant, InvariantViolation(s.message())};
        }
        const std::string path = OutPath(opt.common, "records.jsonl");
        if (auto s = WriteRecords(*records, path); !s.ok()) return Stage(s);
        std::cout << "wrote " << records->size() << " records to " << path
                  << "\n";
        return {kExitOk, absl::OkStatus()};
      });
}

absl::StatusOr<std::vector<MembershipRecord>> RecordsOf(
    const std::string& path, Split split) {
  MIAUG_ASSIGN_OR_RETURN(std::vector<MembershipRecord> all, ReadRecords(path));
  std::vector<MembershipRecord> out;
  for (MembershipRecord& r : all) {
    if (r.split == split) out.push_back(std::move(r));
  }
  if (out.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(
        path, " has no ", Sv(SplitName(split)), " records"));
  }
  return out;
}

CliError CmdAttackTrain(const Options& opt) {
  const std::string records_path = opt.records_path.empty()
                                       ? OutPath(opt.common, "records.jsonl")
                                       : opt.records_path;
  return RunWithConfig(
      opt, "attack train",
      {{"records", records_path},
       {"attack", opt.attack_name},
       {"loss_index", opt.loss_index}},
      [&](const ExperimentConfig& config) -> CliError {
        auto train = RecordsOf(records_path, Split::kAttackTrain);
        if (!train.ok()) return Stage(AnnotateStage("load", train.status()));
        absl::StatusOr<AttackModel> model = absl::UnknownError("unset");
        if (opt.attack_name == kAttackLoss) {
          int index = kOriginalLoss;
          if (opt.loss_index != "original") {
            try {
              index = std::stoi(opt.loss_index);
            } catch (...) {
              return {kExitConfig,
                      absl::InvalidArgumentError(
                          "--loss-index must be 'original' or an integer")};
            }
          }
          auto t = CalibrateThreshold(*train, Statistic::kSingleLoss, index);
          model = t.ok() ? absl::StatusOr<AttackModel>(*t) : t.status();
        } else if (opt.attack_name == kAttackMean) {
          auto t = CalibrateThreshold(*train, Statistic::kMeanLoss);
          model = t.ok() ? absl::StatusOr<AttackModel>(*t) : t.status();
        } else {
          const FeatureBuilder builder{
              opt.attack_name == kAttackNnLoss ? FeatureBuilderKind::kRawLoss
                                               : FeatureBuilderKind::kMoments,
              config.attack.moment_order};
          const MiNetworkHyperparams hp{config.attack.mi_epochs,
                                        config.attack.mi_learning_rate,
                                        config.attack.standardize};
          Log(opt.common, "training MI network");
          auto net = TrainMiNetwork(
              *train, builder, hp,
              DeriveSeed(config.master_seed, opt.attack_name));
          model = net.ok() ? absl::StatusOr<AttackModel>(*std::move(net))
                           : net.status();
        }
        if (!model.ok()) {
          return Stage(AnnotateStage(
              absl::StrCat("attack ", opt.attack_name), model.status()));
        }
        const std::string path =
            OutPath(opt.common, absl::StrCat("attack_", opt.attack_name, ".json"));
        if (auto s = SaveAttackModel(*model, path); !s.ok()) return Stage(s);
        std::cout << "wrote " << path << "\n";
        return {kExitOk, absl::OkStatus()};
      });
}

CliError CmdAttackApply(const Options& opt) {
  const std::string records_path = opt.records_path.empty()
                                       ? OutPath(opt.common, "records.jsonl")
                                       : opt.records_path;
  return RunWithConfig(
      opt, "attack apply",
      {{"records", records_path}, {"attack_model", opt.attack_model_path}},
      [&](const ExperimentConfig& config) -> CliError {
        auto model = LoadAttackModel(opt.attack_model_path);
        if (!model.ok()) return Stage(AnnotateStage("load", model.status()));
        auto eval = RecordsOf(records_path, Split::kAttackEval);
        if (!eval.ok()) return Stage(AnnotateStage("load", eval.status()));
        std::string csv = "id,member,decision\n";
        for (const MembershipRecord& r : *eval) {
          auto guess = ApplyAttack(*model, r);
          if (!guess.ok()) return Stage(AnnotateStage("apply", guess.status()));
          absl::StrAppend(&csv, r.sample_id, ",", r.member ? 1 : 0, ",",
                          *guess ? 1 : 0, "\n");
        }
        auto scored = ScoreAttack("attack", *model, *eval);
        if (!scored.ok()) return Stage(scored.status());
        scored->k = config.k;
        scored->seed = config.master_seed;
        if (auto s = CheckResultInvariants(*scored); !s.ok()) {
          return {kExitInvariant, s};
        }
        if (auto s = WriteTextFile(OutPath(opt.common, "decisions.csv"), csv);
            !s.ok()) {
          return Stage(s);
        }
        std::cout << "success_rate = " << FormatDouble(scored->success_rate)
                  << "\n";
        return {kExitOk, absl::OkStatus()};
      });
}

absl::Status WriteRunOutputs(const CommonOptions& common,
                             const ExperimentConfig& config,
                             std::span<const ExperimentResult> runs,
                             bool histograms) {
  std::vector<AttackResult> rows;
  for (const ExperimentResult& run : runs) {
    rows.insert(rows.end(), run.attacks.begin(), run.attacks.end());
  }
  MIAUG_RETURN_IF_ERROR(
      WriteTextFile(OutPath(common, "results.csv"), FormatResultsCsv(rows)));
  std::vector<Histogram> hists;
  if (histograms) {
    for (const ExperimentResult& run : runs) {
      std::vector<MembershipRecord> eval;
      for (const MembershipRecord& r : run.records) {
        if (r.split == Split::kAttackEval) eval.push_back(r);
      }
      MIAUG_ASSIGN_OR_RETURN(
          Histogram single,
          EmitHistograms(eval, Statistic::kSingleLoss, run.single_loss_index));
      MIAUG_ASSIGN_OR_RETURN(Histogram mean,
                             EmitHistograms(eval, Statistic::kMeanLoss));
      hists.push_back(std::move(single));
      hists.push_back(std::move(mean));
    }
    MIAUG_RETURN_IF_ERROR(WriteTextFile(OutPath(common, "histograms.csv"),
                                        FormatHistogramCsv(hists)));
  }
  MIAUG_RETURN_IF_ERROR(WriteTextFile(OutPath(common, "summary.json"),
                                      FormatSummaryJson(config, runs, hists)));
  std::cout << FormatResultsCsv(rows);
  for (const Histogram& h : hists) {
    std::cout << "overlap " << h.statistic << " = " << FormatDouble(h.overlap)
              << "\n";
  }
  return absl::OkStatus();
}

CliError CmdEvaluate(const Options& opt) {
  return RunWithConfig(opt, "evaluate", {}, [&](const ExperimentConfig& config)
                                                -> CliError {
    Log(opt.common, "running experiment");
    auto run = RunExperiment(config);
    if (!run.ok()) return Stage(run.status());
    const std::vector<ExperimentResult> runs = {*std::move(run)};
    if (auto s = WriteRunOutputs(opt.common, config, runs, true); !s.ok()) {
      return Stage(s);
    }
    return {kExitOk, absl::OkStatus()};
  });
}

CliError CmdSweep(const Options& opt) {
  return RunWithConfig(
      opt, "sweep", {{"k_values", opt.k_values}},
      [&](const ExperimentConfig& config) -> CliError {
        for (int k : opt.k_values) {
          if (k < 0) {
            return {kExitConfig,
                    absl::InvalidArgumentError("--k-values must be >= 0")};
          }
        }
        Log(opt.common, "sweeping k");
        auto runs = SweepK(config, opt.k_values);
        if (!runs.ok()) return Stage(runs.status());
        if (auto s = WriteRunOutputs(opt.common, config, *runs, false);
            !s.ok()) {
          return Stage(s);
        }
        return {kExitOk, absl::OkStatus()};
      });
}

CliError CmdOracle(const Options& opt) {
  return RunWithConfig(
      opt, "oracle", {{"worlds", opt.worlds}},
      [&](const ExperimentConfig& config) -> CliError {
        OracleSuiteOptions so;
        so.num_worlds = opt.worlds;
        so.seed = config.master_seed;
        auto report = RunOracleSuite(so);
        if (!report.ok()) {
          return report.status().code() == absl::StatusCode::kInvalidArgument
                     ? CliError{kExitConfig, report.status()}
                     : Stage(report.status());
        }
        const std::string text = FormatOracleReport(*report);
        std::cout << text;
        if (auto s = WriteTextFile(OutPath(opt.common, "oracle_report.txt"),
                                   text);
            !s.ok()) {
          return Stage(s);
        }
        if (!report->passed) {
          return {kExitInvariant,
                  InvariantViolation("oracle routes disagree; see report")};
        }
        return {kExitOk, absl::OkStatus()};
      });
}

CliError CmdBound(const Options& opt) {
  return RunWithConfig(
      opt, "bound",
      {{"epsilon", opt.epsilon},
       {"q", opt.q},
       {"k", opt.bound_k},
       {"check_worlds", opt.check_worlds}},
      [&](const ExperimentConfig& config) -> CliError {
        const DpParams params{opt.epsilon, opt.bound_k, opt.q};
        auto bound = MiUpperBound(params);
        if (!bound.ok()) return {kExitConfig, bound.status()};
        // shortest text that reads back to the same double
        char buf[64];
        const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), *bound);
        std::cout << (ec == std::errc() ? std::string(buf, end)
                                        : FormatDouble(*bound))
                  << "\n";
        if (opt.check_worlds > 0) {
          auto check = RandomizedWorldCheck(params, opt.check_worlds,
                                            config.master_seed);
          if (!check.ok()) {
            return IsInvariantViolation(check.status())
                       ? CliError{kExitInvariant, check.status()}
                       : Stage(check.status());
          }
          std::cout << "worlds = " << check->trials
                    << "\nevaluations = " << check->evaluations
                    << "\nviolations = " << check->violations
                    << "\nmax_posterior = " << FormatDouble(check->max_posterior)
                    << "\nmax_posterior_over_bound = "
                    << FormatDouble(check->max_ratio) << "\n";
        }
        return {kExitOk, absl::OkStatus()};
      });
}

int Main(int argc, char** argv) {
  CLI::App app{
      "miaug: audit membership inference on models trained with data "
      "augmentation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", MIAUG_VERSION);
  app.footer(ConfigKeyHelp());
  Options opt;

  CLI::App* train = app.add_subcommand("train", "train a target model");
  AddCommon(train, opt.common);

  CLI::App* extract =
      app.add_subcommand("extract", "query loss sets and assign attack splits");
  AddCommon(extract, opt.common);
  extract->add_option("--model", opt.model_path,
                      "target checkpoint (default OUT/target_model.json)");

  CLI::App* attack = app.add_subcommand("attack", "calibrate or apply attacks");
  attack->require_subcommand(1);
  CLI::App* attack_train =
      attack->add_subcommand("train", "fit an attack on the attack-train split");
  AddCommon(attack_train, opt.common);
  attack_train->add_option("--records", opt.records_path,
                           "records file (default OUT/records.jsonl)");
  attack_train
      ->add_option("--attack", opt.attack_name, "attack to fit")
      ->check(CLI::IsMember(
          {kAttackLoss, kAttackMean, kAttackNnLoss, kAttackMoments}))
      ->capture_default_str();
  attack_train
      ->add_option("--loss-index", opt.loss_index,
                   "M_loss: 'original' or an element index")
      ->capture_default_str();
  CLI::App* attack_apply = attack->add_subcommand(
      "apply", "score a fitted attack on the attack-eval split");
  AddCommon(attack_apply, opt.common);
  attack_apply->add_option("--records", opt.records_path,
                           "records file (default OUT/records.jsonl)");
  attack_apply->add_option("--attack-model", opt.attack_model_path,
                           "attack checkpoint")->required();

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "full pipeline: results.csv, histograms.csv, summary.json");
  AddCommon(evaluate, opt.common);

  CLI::App* sweep = app.add_subcommand("sweep", "run the pipeline for each k");
  AddCommon(sweep, opt.common);
  sweep->add_option("--k-values", opt.k_values, "k values")
      ->delimiter(',')
      ->capture_default_str();

  CLI::App* oracle = app.add_subcommand(
      "oracle", "check the posterior formulas against exact enumeration");
  AddCommon(oracle, opt.common);
  oracle->add_option("--worlds", opt.worlds, "number of random worlds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* bound = app.add_subcommand(
      "bound", "membership bound for an epsilon-DP posterior");
  AddCommon(bound, opt.common);
  bound->add_option("--epsilon", opt.epsilon, "privacy loss (>= 0)")
      ->capture_default_str();
  bound->add_option("--q", opt.q, "membership prior in [0, 1]")
      ->capture_default_str();
  bound->add_option("--k", opt.bound_k, "augmentations per sample")
      ->capture_default_str();
  bound->add_option("--check-worlds", opt.check_worlds,
                    "also verify on this many random constrained worlds")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  CliError result{kExitOk, absl::OkStatus()};
  if (train->parsed()) {
    result = CmdTrain(opt);
  } else if (extract->parsed()) {
    result = CmdExtract(opt);
  } else if (attack_train->parsed()) {
    result = CmdAttackTrain(opt);
  } else if (attack_apply->parsed()) {
    result = CmdAttackApply(opt);
  } else if (evaluate->parsed()) {
    result = CmdEvaluate(opt);
  } else if (sweep->parsed()) {
    result = CmdSweep(opt);
  } else if (oracle->parsed()) {
    result = CmdOracle(opt);
  } else if (bound->parsed()) {
    result = CmdBound(opt);
  }
  if (result.code != kExitOk) {
    const char* kind = result.code == kExitConfig  ? "configuration error"
                       : result.code == kExitStage ? "stage failure"
                                                   : "invariant violation";
    std::cerr << "miaug: " << kind << ": " << result.status.message() << "\n";
  }
  return result.code;
}

}  // namespace
}  // namespace miaug

int main(int argc, char** argv) { return miaug::Main(argc, argv); }
