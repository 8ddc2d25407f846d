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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meris/ao_engine.hpp"

namespace meris
{

enum class ExperimentKind
{
    convergence,
    sweep_region, // grid is A / lambda
    sweep_power,  // grid is P_max in dBm
    single_run
};

std::string_view to_string(ExperimentKind kind);
std::optional<ExperimentKind> parse_kind(std::string_view name);

struct ExperimentSpec
{
    ExperimentKind kind = ExperimentKind::single_run;
    std::vector<double> grid;
    int trials = 1;
    std::vector<Method> methods{Method::proposed};
    ScenarioConfig scenario;
    std::uint64_t seed = 1;
    std::vector<std::pair<int, int>> mn_pairs; // (M, N) series for convergence runs

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// Deterministic in (config, seed).
ChannelRealization sample_realization(const ScenarioConfig &config, std::uint64_t seed);

struct TrialRecord
{
    double grid_value = 0.0;
    Method method = Method::proposed;
    int m = 0;
    int n = 0;
    int trial = 0;
    double rate = 0.0;
    int iterations = 0;
    bool failed = false;
    std::string error;
    std::vector<double> trace; // per-round rates
};

struct SweepRow
{
    double grid_value = 0.0;
    Method method = Method::proposed;
    double mean_rate = 0.0;
    double stderr_rate = 0.0;
    int trials = 0;
    double mean_iters = 0.0;
    int failures = 0;
};

struct ConvergenceRow
{
    Method method = Method::proposed;
    int m = 0;
    int n = 0;
    int iter = 0;
    double rate = 0.0;
};

struct ExperimentResult
{
    ExperimentKind kind = ExperimentKind::single_run;
    std::vector<SweepRow> rows;
    std::vector<ConvergenceRow> convergence;
    std::vector<TracePoint> single_trace;
    std::vector<TrialRecord> trials; // sorted by (grid point, series, trial)
    int failures = 0;
};

/// Seed of trial i.
inline std::uint64_t trial_seed(std::uint64_t seed, int trial)
{
    return seed ^ static_cast<std::uint64_t>(trial);
}

/// Runs every (grid point, method, trial) combination. All methods at one grid
/// point and all grid points share the realization of a given trial. Output is
/// independent of the thread count.
ExperimentResult run_experiment(const ExperimentSpec &spec, unsigned threads = 1);

/// CSV with header. Sweeps: grid_value,method,mean_rate,stderr,trials,mean_iters.
/// single_run: iter,rate_bps_hz. convergence: iter,method,m,n,rate_bps_hz.
std::string to_csv(const ExperimentResult &result);

/// Scenario for one point of a sweep grid.
ScenarioConfig scenario_at(const ExperimentSpec &spec, double grid_value);

} // namespace meris
