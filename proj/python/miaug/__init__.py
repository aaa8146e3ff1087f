# Copyright 2026 The miaug Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Membership inference auditing for models trained with data augmentation."""

from miaug._miaug import (
    calibrate_threshold,
    config_keys,
    cross_entropy,
    generalization_gap,
    mean_statistic,
    mi_upper_bound,
    moment_features,
    randomized_world_check,
    resolve_config,
    run_experiment,
    run_oracle_suite,
    sweep_k,
)

__all__ = [
    "calibrate_threshold",
    "config_keys",
    "cross_entropy",
    "generalization_gap",
    "mean_statistic",
    "mi_upper_bound",
    "moment_features",
    "randomized_world_check",
    "resolve_config",
    "run_experiment",
    "run_oracle_suite",
    "sweep_k",
]
