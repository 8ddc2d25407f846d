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

#include "meris/cascade.hpp"

namespace meris
{

struct BeamVector
{
    CVector w;
    bool degenerate = false; // set when the effective channel was zero

    double power() const { return w.squaredNorm(); }
};

/// w = sqrt(P) h^H / ||h||.
BeamVector mrt(const CRowVector &effective_channel, double p_max);

struct PhaseResult
{
    PhaseVector phases;
    std::vector<double> objective_trace; // ||q^H V||^2 after each sweep, first entry is the start
    int sweeps = 0;
};

/// Cyclic coordinate ascent on ||q^H V||^2 with the exact single-phase update
/// theta_n = arg(r v_n^H), r = sum_{n' != n} exp(i theta_n') v_n'.
PhaseResult optimize_phases(const CMatrix &V, const PhaseVector &init, int max_sweeps = 100,
                            double tolerance = 1e-8);

/// log2(1 + gain / sigma2).
double rate_from_gain(double received_gain, double sigma2);

/// log2(1 + |g Theta H w|^2 / sigma2).
double rate(const ElementPositions &U, const PhaseVector &phases, const BeamVector &w,
            const ChannelRealization &chan, double sigma2);

} // namespace meris
