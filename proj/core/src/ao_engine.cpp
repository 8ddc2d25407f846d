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
#include "meris/ao_engine.hpp"

#include <algorithm>
#include <cmath>

namespace meris
{

std::string_view to_string(Method method)
{
    switch (method)
    {
    case Method::proposed:
        return "proposed";
    case Method::gda:
        return "gda";
    case Method::fpe:
        return "fpe";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name)
{
    for (Method m : {Method::proposed, Method::gda, Method::fpe})
        if (to_string(m) == name)
            return m;
    return std::nullopt;
}

namespace
{

// Remove the components of the stacked direction that would shrink a pair
// already at the minimum distance or push an element out of the box. Cyclic
// halfspace projections; the result is feasible to first order, the
// backtracking check below still enforces exact feasibility.
void project_to_tangent_cone(std::vector<Vec2> &dir, const ElementPositions &U, const ScenarioConfig &config)
{
    const double h = 0.5 * config.region_edge;
    const double active = config.min_distance * (1.0 + 1e-6);
    for (int sweep = 0; sweep < 100; ++sweep)
    {
        bool changed = false;
        for (std::size_t a = 0; a < U.size(); ++a)
            for (std::size_t b = a + 1; b < U.size(); ++b)
            {
                Vec2 e = U[a] - U[b];
                const double d = e.norm();
                if (d > active)
                    continue;
                e /= d;
                const double closing = (dir[a] - dir[b]).dot(e);
                if (closing < 0.0)
                {
                    dir[a] -= 0.5 * closing * e;
                    dir[b] += 0.5 * closing * e;
                    changed = true;
                }
            }
        for (std::size_t n = 0; n < U.size(); ++n)
            for (int c = 0; c < 2; ++c)
                if ((U[n][c] >= h && dir[n][c] > 0.0) || (U[n][c] <= -h && dir[n][c] < 0.0))
                    dir[n][c] = 0.0;
        if (!changed)
            break;
    }
}

} // namespace

ElementPositions gda_positions(const ElementPositions &U, const PhaseVector &phases,
                               const ChannelRealization &chan, const ScenarioConfig &config,
                               std::vector<double> *rate_trace)
{
    ElementPositions current_pos = U;
    const auto decomp = phase_decomposition(chan.angles);
    const double half_edge = 0.5 * config.region_edge;
    const auto count = U.size();
    auto gain_of = [&](const ElementPositions &P) { return passive_gain(cascaded_matrix(P, chan), phases); };

    double current = gain_of(current_pos);
    std::vector<Vec2> dir(count);
    for (int it = 0; it < config.gda_max_iters; ++it)
    {
        for (std::size_t n = 0; n < count; ++n)
        {
            const auto terms = elementwise_terms(current_pos, phases, chan, static_cast<Eigen::Index>(n));
            dir[n] = gradient(current_pos[n], terms, decomp);
        }
        project_to_tangent_cone(dir, current_pos, config);
        double norm2 = 0.0;
        for (const auto &d : dir)
            norm2 += d.squaredNorm();
        if (norm2 == 0.0)
            break;
        const double inv_norm = 1.0 / std::sqrt(norm2);

        bool accepted = false;
        for (double step = config.gda_initial_step * config.wavelength;
             step >= config.gda_min_step * config.wavelength; step *= 0.5)
        {
            ElementPositions candidate = current_pos;
            bool moved = false;
            for (std::size_t n = 0; n < count; ++n)
            {
                const Vec2 u = current_pos[n] + (step * inv_norm) * dir[n];
                candidate[n] = Vec2(std::clamp(u.x(), -half_edge, half_edge), std::clamp(u.y(), -half_edge, half_edge));
                moved = moved || candidate[n] != current_pos[n];
            }
            if (!moved)
                break;
            if (!candidate.feasible(config.region_edge, config.min_distance))
                continue;
            const double value = gain_of(candidate);
            if (value >= current)
            {
                current_pos = std::move(candidate);
                current = value;
                accepted = true;
                break;
            }
        }
        if (!accepted)
            break;
        if (rate_trace)
            rate_trace->push_back(rate_from_gain(config.p_max * current, config.sigma2));
    }
    return current_pos;
}

OptimizerState run_ao(const ChannelRealization &chan, const ScenarioConfig &config, Method method)
{
    OptimizerState st;
    auto implied_rate = [&](const CMatrix &V, const PhaseVector &phases) {
        return rate_from_gain(config.p_max * passive_gain(V, phases), config.sigma2);
    };

    st.positions = initial_positions(config);
    CMatrix V = cascaded_matrix(st.positions, chan);
    st.phases = optimize_phases(V, PhaseVector(V.rows()), config.max_phase_sweeps, config.phase_tolerance).phases;
    st.beam = mrt(effective_channel(V, st.phases), config.p_max);
    if (st.beam.degenerate)
    {
        st.degenerate = true;
        st.rate = 0.0;
        st.trace.push_back({0, 0.0});
        return st;
    }
    st.rate = rate(st.positions, st.phases, st.beam, chan, config.sigma2);
    st.trace.push_back({0, st.rate});
    st.substep_rates.push_back(implied_rate(V, st.phases));
    st.inner_trace.push_back(st.rate);

    for (int round = 1; round <= config.max_outer_iters; ++round)
    {
        ElementPositions positions = st.positions;
        if (method == Method::proposed)
        {
            auto step = optimize_positions(positions, st.phases, chan, config);
            positions = std::move(step.positions);
            st.inner_trace.insert(st.inner_trace.end(), step.rate_trace.begin() + 1, step.rate_trace.end());
        }
        else if (method == Method::gda)
        {
            positions = gda_positions(positions, st.phases, chan, config, &st.inner_trace);
        }

        V = cascaded_matrix(positions, chan);
        st.substep_rates.push_back(implied_rate(V, st.phases));
        PhaseVector phases =
            optimize_phases(V, st.phases, config.max_phase_sweeps, config.phase_tolerance).phases;
        st.substep_rates.push_back(implied_rate(V, phases));
        BeamVector beam = mrt(effective_channel(V, phases), config.p_max);
        const double new_rate = rate(positions, phases, beam, chan, config.sigma2);
        st.substep_rates.push_back(new_rate);

        // Each sub-step is non-decreasing in exact arithmetic; a round that
        // comes out lower can only be rounding noise, so it is discarded.
        if (beam.degenerate || new_rate < st.rate)
            break;

        const double increment = new_rate - st.rate;
        st.positions = std::move(positions);
        st.phases = std::move(phases);
        st.beam = std::move(beam);
        st.rate = new_rate;
        st.rounds = round;
        st.trace.push_back({round, st.rate});
        if (increment < config.ao_epsilon)
            break;
    }
    return st;
}

} // namespace meris
