// SPDX-License-Identifier: Apache-2.0
//
// me-ris: rate optimization toolkit for movable-element RIS links
// Copyright (C) 2026 The me-ris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "meris/harness.hpp"

namespace meris
{

/// Parse a JSON experiment document. Top-level keys: kind, grid, trials,
/// methods, seed, mn_pairs, scenario; scenario keys are the snake_case
/// ScenarioConfig field names. Unknown keys and invalid values raise
/// ConfigError carrying the dotted key path. When `expected` is set, a
/// missing kind defaults to it and a different kind is rejected.
ExperimentSpec parse_experiment_spec(const std::string &json_text,
                                     std::optional<ExperimentKind> expected = std::nullopt);

ExperimentSpec load_experiment_spec(const std::filesystem::path &path,
                                    std::optional<ExperimentKind> expected = std::nullopt);

/// Defaults used when a kind is requested without a config file.
ExperimentSpec default_experiment_spec(ExperimentKind kind);

} // namespace meris
