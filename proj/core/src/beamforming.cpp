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
#include "meris/beamforming.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace meris
{

BeamVector mrt(const CRowVector &effective_channel, double p_max)
{
    BeamVector out;
    const double norm = effective_channel.norm();
    if (norm == 0.0)
    {
        out.w = CVector::Zero(effective_channel.size());
        out.degenerate = true;
        return out;
    }
    out.w = (std::sqrt(p_max) / norm) * effective_channel.adjoint();
    return out;
}

PhaseResult optimize_phases(const CMatrix &V, const PhaseVector &init, int max_sweeps, double tolerance)
{
    if (V.rows() != init.size())
        throw std::invalid_argument("optimize_phases: phase count does not match V rows");

    PhaseResult res{init, {}, 0};
    CRowVector total = effective_channel(V, res.phases);
    double objective = total.squaredNorm();
    res.objective_trace.push_back(objective);

    for (int sweep = 0; sweep < max_sweeps; ++sweep)
    {
        const double start = objective;
        for (Eigen::Index n = 0; n < V.rows(); ++n)
        {
            const CRowVector rest = total - res.phases.coefficient(n) * V.row(n);
            // |e^{i t} v_n + r|^2 = |v_n|^2 + |r|^2 + 2 Re(e^{i t} v_n r^H),
            // maximized at t = -arg(v_n r^H) = arg(r v_n^H).
            const cdouble z = V.row(n).dot(rest); // sum_m conj(v_n^m) r^m = r v_n^H
            if (z == cdouble(0.0))
                continue;
            const double theta = std::arg(z);
            const CRowVector candidate = rest + std::polar(1.0, theta) * V.row(n);
            const double value = candidate.squaredNorm();
            if (value > objective)
            {
                res.phases.set(n, theta);
                total = candidate;
                objective = value;
            }
        }
        ++res.sweeps;
        res.objective_trace.push_back(objective);
        if (objective - start <= tolerance * std::max(start, std::numeric_limits<double>::min()))
            break;
    }
    return res;
}

double rate_from_gain(double received_gain, double sigma2)
{
    return std::log2(1.0 + received_gain / sigma2);
}

double rate(const ElementPositions &U, const PhaseVector &phases, const BeamVector &w,
            const ChannelRealization &chan, double sigma2)
{
    const CRowVector g = channel_ris_user(U, chan);
    const CMatrix H = channel_bs_ris(U, chan);
    CRowVector gtheta(g.size());
    for (Eigen::Index n = 0; n < g.size(); ++n)
        gtheta[n] = g[n] * phases.coefficient(n);
    const cdouble received = (gtheta * H * w.w)(0);
    return rate_from_gain(std::norm(received), sigma2);
}

} // namespace meris
