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

#include "miaug/bayes_oracle/suite.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "miaug/bayes_oracle/entropy.h"
#include "miaug/bayes_oracle/oracle.h"
#include "miaug/bayes_oracle/world.h"
#include "miaug/core/records_io.h"
#include "miaug/core/rng.h"
#include "miaug/core/status_macros.h"

namespace miaug {
namespace {

constexpr int kGridDims[] = {3, 5, 6};
constexpr double kPriors[] = {0.3, 0.5, 0.7};
constexpr double kGammas[] = {0.1, 1.0, 10.0};

}  // namespace

absl::StatusOr<OracleSuiteReport> RunOracleSuite(
    const OracleSuiteOptions& options) {
  if (options.num_worlds < 1 || options.points_per_world < 1) {
    return absl::InvalidArgumentError("suite needs worlds and points");
  }
  OracleSuiteReport report;
  for (int w = 0; w < options.num_worlds; ++w) {
    RngStream rng(options.seed, "oracle-world", static_cast<std::uint64_t>(w));
    WorldOptions wo;
    wo.num_samples = static_cast<int>(rng.UniformInt(3, 6));
    wo.grid_dims = kGridDims[rng.UniformInt(0, 2)];
    wo.k = static_cast<int>(rng.UniformInt(1, 3));
    wo.q = kPriors[rng.UniformInt(0, 2)];
    DiscreteWorld world = RandomWorld(wo, rng);
    ++report.worlds;

    for (double gamma : kGammas) {
      world.set_gamma(gamma);
      for (int p = 0; p < options.points_per_world; ++p) {
        const int g = static_cast<int>(rng.UniformInt(0, world.grid_size() - 1));
        MIAUG_ASSIGN_OR_RETURN(const double direct, DirectPosteriorMi(world, g));
        MIAUG_ASSIGN_OR_RETURN(const double t1, OptimalMiTheorem1(world, g));
        MIAUG_ASSIGN_OR_RETURN(const double t2, OptimalMiTheorem2(world, g));
        ++report.evaluations;
        report.max_error_theorem1 =
            std::max(report.max_error_theorem1, std::abs(t1 - direct));
        report.max_error_theorem2 =
            std::max(report.max_error_theorem2, std::abs(t2 - direct));
        for (double v : {direct, t1, t2}) {
          if (!(v >= 0.0 && v <= 1.0)) ++report.out_of_range;
        }
        if (p == 0) {
          // lowering the audited set's loss at theta must not lower the score
          DiscreteWorld lowered = world;
          for (int j = 0; j < world.k(); ++j) {
            lowered.SetInstanceLoss(g, 0, j, 0.5 * world.InstanceLoss(g, 0, j));
          }
          MIAUG_ASSIGN_OR_RETURN(const double t2_lowered,
                                 OptimalMiTheorem2(lowered, g));
          if (t2_lowered < t2 - 1e-12) ++report.monotonicity_violations;
        }
      }
      const MembershipConfig config =
          static_cast<MembershipConfig>(rng.UniformInt(0, (1 << wo.num_samples) - 1));
      MIAUG_ASSIGN_OR_RETURN(const std::vector<double> post,
                             Posterior(world, config));
      double total = 0.0;
      for (double v : post) total += v;
      report.max_normalization_error =
          std::max(report.max_normalization_error, std::abs(total - 1.0));
    }

    // entropy comparison on a smaller companion world
    EntropyWorldOptions eo;
    eo.base = wo;
    eo.base.grid_dims = 3;
    eo.base.gamma = kGammas[w % 3];
    eo.num_variants = static_cast<int>(rng.UniformInt(2, 3));
    eo.num_sets = static_cast<int>(rng.UniformInt(2, 4));
    const EntropyWorld ew = RandomEntropyWorld(eo, rng);
    MIAUG_ASSIGN_OR_RETURN(const EntropyCheck check, EntropyInequalityCheck(ew));
    const double diff = check.h_given_set - check.h_given_variant;
    if (std::abs(diff) <= 1e-12) {
      ++report.entropy_equal;
    } else if (diff < 0) {
      ++report.entropy_aug_lower;
    } else {
      ++report.entropy_aug_higher;
    }
    eo.deterministic = true;
    const EntropyWorld identity = RandomEntropyWorld(eo, rng);
    MIAUG_ASSIGN_OR_RETURN(const EntropyCheck same,
                           EntropyInequalityCheck(identity));
    if (std::abs(same.h_given_set - same.h_given_variant) > 1e-12) {
      ++report.entropy_identity_mismatches;
    }
  }
  report.passed = report.max_error_theorem1 <= options.tolerance &&
                  report.max_error_theorem2 <= options.tolerance &&
                  report.max_normalization_error <= 1e-12 &&
                  report.out_of_range == 0 &&
                  report.monotonicity_violations == 0 &&
                  report.entropy_identity_mismatches == 0;
  return report;
}

std::string FormatOracleReport(const OracleSuiteReport& r) {
  return absl::StrCat(
      "worlds = ", r.worlds, "\n",
      "evaluations = ", r.evaluations, "\n",
      "max_abs_error_theorem1 = ", FormatDouble(r.max_error_theorem1), "\n",
      "max_abs_error_theorem2 = ", FormatDouble(r.max_error_theorem2), "\n",
      "max_posterior_normalization_error = ",
      FormatDouble(r.max_normalization_error), "\n",
      "out_of_range = ", r.out_of_range, "\n",
      "monotonicity_violations = ", r.monotonicity_violations, "\n",
      "entropy_aug_lower = ", r.entropy_aug_lower, "\n",
      "entropy_equal = ", r.entropy_equal, "\n",
      "entropy_aug_higher = ", r.entropy_aug_higher, "\n",
      "entropy_identity_mismatches = ", r.entropy_identity_mismatches, "\n",
      "passed = ", r.passed ? "true" : "false", "\n");
}

}  // namespace miaug
