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

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "meris/ao_engine.hpp"
#include "meris/harness.hpp"
#include "meris/position_opt.hpp"

using namespace meris;

namespace
{

ScenarioConfig small_config()
{
    auto cfg = ScenarioConfig::with_wavelength(0.1);
    cfg.region_edge = 5.0 * cfg.wavelength;
    return cfg;
}

bool non_decreasing(const std::vector<TracePoint> &trace)
{
    for (std::size_t i = 1; i < trace.size(); ++i)
        if (trace[i].rate < trace[i - 1].rate)
            return false;
    return true;
}

} // namespace

TEST_CASE("AO - method names")
{
    for (Method m : {Method::proposed, Method::gda, Method::fpe})
        CHECK(parse_method(to_string(m)) == m);
    CHECK_FALSE(parse_method("sgd").has_value());
}

TEST_CASE("AO - fixed elements keep the initial grid")
{
    const auto cfg = small_config();
    const auto chan = sample_realization(cfg, 3);
    const auto st = run_ao(chan, cfg, Method::fpe);
    const auto U0 = initial_positions(cfg);
    for (std::size_t n = 0; n < U0.size(); ++n)
        CHECK(st.positions[n] == U0[n]);
    CHECK(st.rate > 0.0);
    CHECK(non_decreasing(st.trace));
}

TEST_CASE("AO - proposed dominates fixed elements on the same realization")
{
    const auto cfg = small_config();
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
    {
        const auto chan = sample_realization(cfg, seed);
        const auto prop = run_ao(chan, cfg, Method::proposed);
        const auto fpe = run_ao(chan, cfg, Method::fpe);
        CHECK(prop.rate >= fpe.rate);
        CHECK(non_decreasing(prop.trace));
        for (std::size_t i = 1; i < prop.substep_rates.size(); ++i)
            CHECK(prop.substep_rates[i] >= prop.substep_rates[i - 1] - 1e-12);
        CHECK(prop.positions.feasible(cfg.region_edge, cfg.min_distance));
        CHECK_FALSE(prop.degenerate);
        CHECK(prop.trace.back().rate == prop.rate);
    }
}

TEST_CASE("AO - gradient ascent baseline")
{
    const auto cfg = small_config();
    double gda_sum = 0.0, prop_sum = 0.0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t)
    {
        const auto chan = sample_realization(cfg, trial_seed(99, t));
        const auto gda = run_ao(chan, cfg, Method::gda);
        CHECK(gda.positions.feasible(cfg.region_edge, cfg.min_distance));
        CHECK(non_decreasing(gda.trace));
        gda_sum += gda.rate;
        prop_sum += run_ao(chan, cfg, Method::proposed).rate;
    }
    CHECK(gda_sum / trials <= prop_sum / trials);
}

TEST_CASE("AO - gradient ascent leaves a lone element in place")
{
    auto cfg = small_config();
    cfg.num_elements = 1;
    const auto chan = sample_realization(cfg, 5);
    const ElementPositions U({Vec2(0.05, 0.1)});
    const auto out = gda_positions(U, PhaseVector(1), chan, cfg);
    CHECK(out[0] == U[0]);
}

TEST_CASE("AO - degenerate channel returns zero rate")
{
    auto cfg = small_config();
    auto chan = sample_realization(cfg, 1);
    chan.sigma_s.setZero();
    for (Method m : {Method::proposed, Method::gda, Method::fpe})
    {
        const auto st = run_ao(chan, cfg, m);
        CHECK(st.degenerate);
        CHECK(st.rate == 0.0);
    }
}
