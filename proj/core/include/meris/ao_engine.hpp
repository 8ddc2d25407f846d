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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "meris/beamforming.hpp"
#include "meris/position_opt.hpp"

namespace meris
{

enum class Method
{
    proposed, // element-wise SCA positions
    gda,      // joint projected gradient ascent on positions
    fpe       // fixed-position elements
};

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

struct TracePoint
{
    int iteration = 0;
    double rate = 0.0;
};

struct OptimizerState
{
    ElementPositions positions;
    PhaseVector phases;
    BeamVector beam;
    double rate = 0.0;
    std::vector<TracePoint> trace;        // one entry per AO round, round 0 is the initial point
    std::vector<double> inner_trace;      // rate after each accepted SCA/GDA iterate
    std::vector<double> substep_rates;    // MRT-implied rate after every sub-step
    int rounds = 0;
    bool degenerate = false;
};

/// Alternating optimization: positions (per method), then phases, then MRT,
/// until the per-round rate increment drops below config.ao_epsilon.
///
/// All methods start from initial_positions(config) with phases aligned by
/// optimize_phases, so on a shared realization their starting points match.
OptimizerState run_ao(const ChannelRealization &chan, const ScenarioConfig &config, Method method);

/// Projected gradient ascent on all N positions jointly using the stacked
/// per-element gradients. The direction is first stripped of components that
/// would close a pair already at D0 or leave the box; the step length then
/// starts at gda_initial_step * lambda along the normalized direction and
/// halves until the candidate is feasible and the objective does not decrease.
ElementPositions gda_positions(const ElementPositions &U, const PhaseVector &phases,
                               const ChannelRealization &chan, const ScenarioConfig &config,
                               std::vector<double> *rate_trace = nullptr);

} // namespace meris
