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

#include <vector>

#include "meris/calculus.hpp"

namespace meris
{

/// Halfplane { u : normal . (u - offset) >= rhs } obtained by linearizing
/// ||u - offset|| >= rhs at a feasible anchor. Always contained in the true
/// distance-feasible set.
struct LinearizedConstraint
{
    Vec2 normal = Vec2::UnitX();
    Vec2 offset = Vec2::Zero();
    double rhs = 0.0;

    double slack(const Vec2 &u) const { return normal.dot(u - offset) - rhs; }
};

LinearizedConstraint linearize_distance(const Vec2 &anchor, const Vec2 &other, double min_distance);

/// max  grad.(u - anchor) - xi/2 ||u - anchor||^2
/// s.t. u in [-half_edge, half_edge]^2, every halfspace.
struct QpProblem
{
    Vec2 anchor = Vec2::Zero();
    Vec2 grad = Vec2::Zero();
    double xi = 0.0;
    double half_edge = 0.0;
    std::vector<LinearizedConstraint> halfspaces;

    double objective(const Vec2 &u) const;
    bool feasible(const Vec2 &u, double tol = 1e-12) const;
};

/// Exact maximizer of the surrogate QP. With xi > 0 this is the Euclidean
/// projection of anchor + grad / xi onto the polygon, found by enumerating
/// the interior, every edge and every vertex candidate. With xi == 0 the
/// best vertex of the linear program is returned.
Vec2 solve_surrogate_qp(const QpProblem &problem);

/// Centered square grid with pitch max(D0, lambda/2), row-major; falls back
/// to seeded rejection sampling if the grid does not fit.
ElementPositions initial_positions(const ScenarioConfig &config);

struct PositionStepResult
{
    ElementPositions positions;
    std::vector<double> rate_trace; // rate after every accepted inner iterate, first entry is the start
    int inner_iterations = 0;
    int rejected_steps = 0;
};

/// One element-wise SCA pass (or config.position_passes passes) over all
/// elements with q fixed. The returned objective never falls below the input.
PositionStepResult optimize_positions(const ElementPositions &U, const PhaseVector &phases,
                                      const ChannelRealization &chan, const ScenarioConfig &config);

} // namespace meris
