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

#include "meris/ao_engine.hpp"
#include "meris/harness.hpp"

#include <sstream>

using namespace meris;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

bool identical(const CVector &a, const CVector &b) { return a.size() == b.size() && (a.array() == b.array()).all(); }
bool identical(const RVector &a, const RVector &b) { return a.size() == b.size() && (a.array() == b.array()).all(); }

ExperimentSpec sweep(ExperimentKind kind, std::vector<double> grid, int trials)
{
    ExperimentSpec spec;
    spec.kind = kind;
    spec.grid = std::move(grid);
    spec.trials = trials;
    spec.methods = {Method::proposed, Method::gda, Method::fpe};
    spec.seed = 2026;
    return spec;
}

} // namespace

TEST_CASE("Harness - realization is a pure function of the seed")
{
    ScenarioConfig cfg;
    const auto a = sample_realization(cfg, 42);
    const auto b = sample_realization(cfg, 42);
    CHECK(identical(a.angles.theta_bs_b, b.angles.theta_bs_b));
    CHECK(identical(a.angles.phi_bs_b, b.angles.phi_bs_b));
    CHECK(identical(a.angles.theta_bs_s, b.angles.theta_bs_s));
    CHECK(identical(a.angles.phi_bs_s, b.angles.phi_bs_s));
    CHECK(identical(a.angles.theta_su, b.angles.theta_su));
    CHECK(identical(a.angles.phi_su, b.angles.phi_su));
    CHECK(identical(a.sigma_bs, b.sigma_bs));
    CHECK((a.sigma_s.array() == b.sigma_s.array()).all());
    CHECK((a.bs_frm.array() == b.bs_frm.array()).all());
    CHECK(a.user_position == b.user_position);
    CHECK(a.d_s == b.d_s);

    const auto c = sample_realization(cfg, 43);
    CHECK_FALSE(identical(a.sigma_bs, c.sigma_bs));
}

TEST_CASE("Harness - default geometry")
{
    ScenarioConfig cfg;
    const auto chan = sample_realization(cfg, 1);
    CHECK_THAT(chan.d_bs, WithinAbs(15.0, 1e-12));
    CHECK(chan.angles.valid());
    CHECK(chan.bs_frm.rows() == cfg.paths_bs);
    CHECK(chan.bs_frm.cols() == cfg.num_bs_antennas);
    CHECK(std::abs(chan.user_position.z() - 20.0) < 1e-12);
    CHECK(std::abs(chan.user_position.x() - 20.0) <= 20.0);
    CHECK(std::abs(chan.user_position.y() + 10.0) <= 20.0);
    CHECK_THAT(chan.d_s, WithinRel(chan.user_position.norm(), 1e-15));
}

TEST_CASE("Harness - random generator moments")
{
    ScenarioConfig cfg;
    const int draws = 100000;
    const double beta_bs = cfg.beta0 * std::pow(15.0, -cfg.alpha0);
    double bs_power = 0.0, s_power = 0.0, angle_mean = 0.0, angle_sq = 0.0, phase_mean = 0.0;
    for (int i = 0; i < draws; ++i)
    {
        const auto chan = sample_realization(cfg, static_cast<std::uint64_t>(i) * 7919u + 1u);
        bs_power += std::norm(chan.sigma_bs[0]);
        const double beta_s = cfg.beta0 * std::pow(chan.d_s, -cfg.alpha0);
        s_power += std::norm(chan.sigma_s[0]) / (beta_s / cfg.paths_su);
        angle_mean += chan.angles.phi_su[0];
        angle_sq += chan.angles.theta_bs_b[0] * chan.angles.theta_bs_b[0];
        phase_mean += std::cos(std::arg(chan.sigma_bs[1]));
    }
    CHECK_THAT(bs_power / draws, WithinRel(beta_bs / cfg.paths_bs, 0.02));
    CHECK_THAT(s_power / draws, WithinRel(1.0, 0.02));
    CHECK_THAT(angle_mean / draws, WithinAbs(0.0, 0.02));
    CHECK_THAT(angle_sq / draws, WithinRel(pi * pi / 12.0, 0.02));
    CHECK_THAT(phase_mean / draws, WithinAbs(0.0, 0.02));
}

TEST_CASE("Harness - kind names")
{
    for (auto k : {ExperimentKind::convergence, ExperimentKind::sweep_region, ExperimentKind::sweep_power,
                   ExperimentKind::single_run})
        CHECK(parse_kind(to_string(k)) == k);
    CHECK_FALSE(parse_kind("sweep").has_value());
}

TEST_CASE("Harness - single run is a passthrough")
{
    ExperimentSpec spec;
    spec.kind = ExperimentKind::single_run;
    spec.seed = 77;
    const auto result = run_experiment(spec);
    const auto direct = run_ao(sample_realization(spec.scenario, trial_seed(77, 0)), spec.scenario, Method::proposed);
    REQUIRE(result.single_trace.size() == direct.trace.size());
    for (std::size_t i = 0; i < direct.trace.size(); ++i)
        CHECK(result.single_trace[i].rate == direct.trace[i].rate);
    REQUIRE(result.trials.size() == 1);
    CHECK(result.trials[0].rate == direct.rate);
    CHECK(to_csv(result).rfind("iter,rate_bps_hz\n", 0) == 0);
}

TEST_CASE("Harness - power sweep is increasing for every method")
{
    const auto result = run_experiment(sweep(ExperimentKind::sweep_power, {20.0, 30.0, 40.0}, 20));
    REQUIRE(result.rows.size() == 9);
    CHECK(result.failures == 0);
    for (Method m : {Method::proposed, Method::gda, Method::fpe})
    {
        std::vector<double> means;
        for (const auto &row : result.rows)
            if (row.method == m)
                means.push_back(row.mean_rate);
        REQUIRE(means.size() == 3);
        CHECK(means[1] > means[0]);
        CHECK(means[2] > means[1]);
    }
}

TEST_CASE("Harness - region sweep gap and paired seeds")
{
    const auto result = run_experiment(sweep(ExperimentKind::sweep_region, {1.0, 2.0}, 20));
    for (double a : {1.0, 2.0})
    {
        double prop = 0.0, fpe = 0.0;
        for (const auto &row : result.rows)
            if (row.grid_value == a)
            {
                if (row.method == Method::proposed)
                    prop = row.mean_rate;
                if (row.method == Method::fpe)
                    fpe = row.mean_rate;
                CHECK(row.trials == 20);
                CHECK(row.stderr_rate > 0.0);
            }
        CHECK(prop >= fpe);
    }
    // Region size does not enter the channel draw, so fpe is identical on the grid.
    std::vector<double> fpe_rates;
    for (const auto &t : result.trials)
        if (t.method == Method::fpe && t.trial == 4)
            fpe_rates.push_back(t.rate);
    REQUIRE(fpe_rates.size() == 2);
    CHECK(fpe_rates[0] == fpe_rates[1]);
}

TEST_CASE("Harness - CSV is deterministic and thread independent")
{
    auto spec = sweep(ExperimentKind::sweep_region, {1.0, 3.0}, 6);
    const auto one = to_csv(run_experiment(spec, 1));
    const auto again = to_csv(run_experiment(spec, 1));
    const auto threaded = to_csv(run_experiment(spec, 3));
    CHECK(one == again);
    CHECK(one == threaded);
    CHECK(one.rfind("grid_value,method,mean_rate,stderr,trials,mean_iters\n", 0) == 0);
    std::istringstream lines(one);
    std::string line;
    int count = 0;
    while (std::getline(lines, line))
        ++count;
    CHECK(count == 1 + 2 * 3);
}

TEST_CASE("Harness - convergence rows")
{
    ExperimentSpec spec;
    spec.kind = ExperimentKind::convergence;
    spec.trials = 3;
    spec.mn_pairs = {{4, 4}, {4, 8}};
    const auto result = run_experiment(spec);
    CHECK(to_csv(result).rfind("iter,method,m,n,rate_bps_hz\n", 0) == 0);
    for (int n : {4, 8})
    {
        std::vector<double> rates;
        for (const auto &row : result.convergence)
            if (row.n == n)
                rates.push_back(row.rate);
        REQUIRE(rates.size() >= 2);
        for (std::size_t i = 1; i < rates.size(); ++i)
            CHECK(rates[i] >= rates[i - 1]);
    }
}

TEST_CASE("Harness - scenario at grid point")
{
    auto spec = sweep(ExperimentKind::sweep_region, {3.0}, 1);
    CHECK_THAT(scenario_at(spec, 3.0).region_edge, WithinRel(3.0 * spec.scenario.wavelength, 1e-15));
    spec.kind = ExperimentKind::sweep_power;
    CHECK_THAT(scenario_at(spec, 30.0).p_max, WithinRel(1.0, 1e-12));
    CHECK_THAT(dbm_to_watts(-80.0), WithinRel(1e-11, 1e-12));
    CHECK_THAT(watts_to_dbm(10.0), WithinAbs(40.0, 1e-12));
}

TEST_CASE("Harness - spec validation")
{
    auto spec = sweep(ExperimentKind::sweep_power, {}, 5);
    CHECK_THROWS_AS(spec.validate(), ConfigError);
    spec.grid = {30.0};
    spec.trials = 0;
    CHECK_THROWS_AS(spec.validate(), ConfigError);
    spec.trials = 2;
    spec.methods.clear();
    CHECK_THROWS_AS(spec.validate(), ConfigError);
}
