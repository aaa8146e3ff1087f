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

#include "miaug/dp_bound/dp_bound.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "miaug/bayes_oracle/oracle.h"
#include "miaug/bayes_oracle/world.h"
#include "miaug/core/invariant.h"
#include "miaug/core/rng.h"
#include "miaug/core/status_macros.h"

namespace miaug {

absl::StatusOr<double> MiUpperBound(const DpParams& params) {
  if (!(params.epsilon >= 0.0) || !std::isfinite(params.epsilon)) {
    return absl::InvalidArgumentError("epsilon must be finite and >= 0");
  }
  if (!(params.q >= 0.0 && params.q <= 1.0)) {
    return absl::InvalidArgumentError("q must lie in [0, 1]");
  }
  if (params.k < 1) return absl::InvalidArgumentError("k must be >= 1");
  if (params.epsilon == 0.0) return params.q;
  // q e^eps / (q e^eps + 1 - q), i.e. sigmoid(eps + logit q)
  const double scaled = params.q * std::exp(params.epsilon);
  return scaled / (scaled + (1.0 - params.q));
}

absl::StatusOr<WorldCheckReport> RandomizedWorldCheck(const DpParams& params,
                                                      int trials,
                                                      std::uint64_t seed) {
  MIAUG_ASSIGN_OR_RETURN(const double bound, MiUpperBound(params));
  if (trials < 1) return absl::InvalidArgumentError("trials must be >= 1");
  WorldCheckReport report;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t world_seed =
        DeriveSeed(seed, "dp-world", static_cast<std::uint64_t>(t));
    RngStream rng(world_seed);
    WorldOptions wo;
    wo.num_samples = static_cast<int>(rng.UniformInt(2, 5));
    wo.grid_dims = static_cast<int>(rng.UniformInt(2, 4));
    wo.k = params.k;
    wo.q = params.q;
    wo.gamma = rng.Uniform(0.1, 10.0);
    DiscreteWorld world = RandomWorld(wo, rng);
    // Band the audited sample: a base loss per instance plus at most
    // gamma * eps / k, mostly at the band edges so the bound is nearly tight.
    const double width = wo.gamma * params.epsilon / params.k;
    for (int j = 0; j < params.k; ++j) {
      const double base = rng.Uniform(0.0, 5.0);
      for (int g = 0; g < world.grid_size(); ++g) {
        const double u = rng.Uniform();
        const double offset = u < 0.4 ? 0.0 : (u < 0.8 ? 1.0 : rng.Uniform());
        world.SetInstanceLoss(g, 0, j, base + width * offset);
      }
    }
    ++report.trials;
    for (int g = 0; g < world.grid_size(); ++g) {
      MIAUG_ASSIGN_OR_RETURN(const double posterior,
                             DirectPosteriorMi(world, g));
      ++report.evaluations;
      report.max_posterior = std::max(report.max_posterior, posterior);
      if (bound > 0.0) {
        report.max_ratio = std::max(report.max_ratio, posterior / bound);
      }
      // 1e-12 absorbs rounding in the enumeration
      if (posterior > bound + 1e-12) {
        ++report.violations;
        report.offending_seed = world_seed;
        return InvariantViolation(absl::StrCat(
            "posterior ", posterior, " exceeds bound ", bound,
            " in world seed ", world_seed, " at grid point ", g));
      }
    }
  }
  return report;
}

}  // namespace miaug
