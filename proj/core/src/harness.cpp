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
#include "meris/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <thread>

namespace meris
{

std::string_view to_string(ExperimentKind kind)
{
    switch (kind)
    {
    case ExperimentKind::convergence:
        return "convergence";
    case ExperimentKind::sweep_region:
        return "sweep_region";
    case ExperimentKind::sweep_power:
        return "sweep_power";
    case ExperimentKind::single_run:
        return "single_run";
    }
    return "unknown";
}

std::optional<ExperimentKind> parse_kind(std::string_view name)
{
    for (auto k : {ExperimentKind::convergence, ExperimentKind::sweep_region, ExperimentKind::sweep_power,
                   ExperimentKind::single_run})
        if (to_string(k) == name)
            return k;
    return std::nullopt;
}

void ExperimentSpec::validate() const
{
    if (trials < 1)
        throw ConfigError("trials", "must be >= 1");
    if (methods.empty())
        throw ConfigError("methods", "must name at least one method");
    const bool sweep = kind == ExperimentKind::sweep_region || kind == ExperimentKind::sweep_power;
    if (sweep && grid.empty())
        throw ConfigError("grid", "sweeps need at least one grid value");
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        if (!std::isfinite(grid[i]))
            throw ConfigError("grid", "values must be finite");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw ConfigError("grid", "values must be strictly increasing");
    }
    if (kind == ExperimentKind::sweep_region)
        for (double g : grid)
            if (!(g > 0.0))
                throw ConfigError("grid", "region sizes must be > 0");
    for (const auto &[m, n] : mn_pairs)
        if (m < 1 || n < 1)
            throw ConfigError("mn_pairs", "entries must be >= 1");
    scenario.validate();
    if (kind == ExperimentKind::sweep_region)
        for (double g : grid)
            scenario_at(*this, g).validate();
    if (kind == ExperimentKind::convergence)
        for (const auto &[m, n] : mn_pairs)
        {
            ScenarioConfig c = scenario;
            c.num_bs_antennas = m;
            c.num_elements = n;
            if (!c.bs_antenna_positions.empty() && c.bs_antenna_positions.size() != static_cast<std::size_t>(m))
                throw ConfigError("mn_pairs", "bs_antenna_positions length does not match every m");
            c.validate();
        }
}

ScenarioConfig scenario_at(const ExperimentSpec &spec, double grid_value)
{
    ScenarioConfig c = spec.scenario;
    if (spec.kind == ExperimentKind::sweep_region)
        c.region_edge = grid_value * c.wavelength;
    else if (spec.kind == ExperimentKind::sweep_power)
        c.p_max = dbm_to_watts(grid_value);
    return c;
}

ChannelRealization sample_realization(const ScenarioConfig &config, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-0.5 * pi, 0.5 * pi);
    auto draw_angles = [&](Eigen::Index count) {
        RVector v(count);
        for (Eigen::Index i = 0; i < count; ++i)
            v[i] = angle(rng);
        return v;
    };

    ChannelRealization chan;
    chan.wavelength = config.wavelength;
    auto &a = chan.angles;
    a.theta_bs_b = draw_angles(config.paths_bs);
    a.phi_bs_b = draw_angles(config.paths_bs);
    a.theta_bs_s = draw_angles(config.paths_bs);
    a.phi_bs_s = draw_angles(config.paths_bs);
    a.theta_su = draw_angles(config.paths_su);
    a.phi_su = draw_angles(config.paths_su);

    // User uniform on a horizontal square; positions closer than 1 m to the
    // RIS fall outside the far-field path-loss model and are redrawn.
    std::uniform_real_distribution<double> offset(-0.5 * config.user_region_edge, 0.5 * config.user_region_edge);
    Vec3 user;
    int attempts = 0;
    do
    {
        if (++attempts > 10000)
            throw std::runtime_error("sample_realization: user region lies inside the RIS near field");
        user = config.user_region_center + Vec3(offset(rng), offset(rng), 0.0);
    } while (user.norm() < 1.0);
    chan.user_position = user;

    chan.d_bs = config.bs_position.norm();
    chan.d_s = user.norm();
    const double beta_bs = config.beta0 * std::pow(chan.d_bs, -config.alpha0);
    const double beta_s = config.beta0 * std::pow(chan.d_s, -config.alpha0);

    auto cscg = [&](double variance) {
        std::normal_distribution<double> part(0.0, std::sqrt(0.5 * variance));
        const double re = part(rng);
        const double im = part(rng);
        return cdouble(re, im);
    };
    chan.sigma_bs.resize(config.paths_bs);
    for (Eigen::Index j = 0; j < config.paths_bs; ++j)
        chan.sigma_bs[j] = cscg(beta_bs / config.paths_bs);
    chan.sigma_s.resize(config.paths_su);
    for (Eigen::Index k = 0; k < config.paths_su; ++k)
        chan.sigma_s[k] = cscg(beta_s / config.paths_su);

    chan.bs_frm = build_bs_frm(config, a);
    return chan;
}

namespace
{

struct Series
{
    double grid_value = 0.0;
    Method method = Method::proposed;
    ScenarioConfig config;
};

std::vector<Series> expand_series(const ExperimentSpec &spec)
{
    std::vector<Series> out;
    switch (spec.kind)
    {
    case ExperimentKind::single_run:
        out.push_back({0.0, spec.methods.front(), spec.scenario});
        break;
    case ExperimentKind::convergence:
    {
        auto pairs = spec.mn_pairs;
        if (pairs.empty())
            pairs.emplace_back(spec.scenario.num_bs_antennas, spec.scenario.num_elements);
        for (const auto &[m, n] : pairs)
            for (Method method : spec.methods)
            {
                ScenarioConfig c = spec.scenario;
                c.num_bs_antennas = m;
                c.num_elements = n;
                out.push_back({0.0, method, c});
            }
        break;
    }
    case ExperimentKind::sweep_region:
    case ExperimentKind::sweep_power:
        for (double g : spec.grid)
            for (Method method : spec.methods)
                out.push_back({g, method, scenario_at(spec, g)});
        break;
    }
    return out;
}

TrialRecord run_trial(const Series &s, int trial, std::uint64_t seed)
{
    TrialRecord rec;
    rec.grid_value = s.grid_value;
    rec.method = s.method;
    rec.m = s.config.num_bs_antennas;
    rec.n = s.config.num_elements;
    rec.trial = trial;
    try
    {
        const auto chan = sample_realization(s.config, trial_seed(seed, trial));
        const auto st = run_ao(chan, s.config, s.method);
        rec.rate = st.rate;
        rec.iterations = st.rounds;
        for (const auto &p : st.trace)
            rec.trace.push_back(p.rate);
    }
    catch (const std::exception &e)
    {
        rec.failed = true;
        rec.error = e.what();
    }
    return rec;
}

std::string fmt9(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

} // namespace

ExperimentResult run_experiment(const ExperimentSpec &spec, unsigned threads)
{
    spec.validate();
    const auto series = expand_series(spec);
    const int trials = spec.kind == ExperimentKind::single_run ? 1 : spec.trials;

    // records[trial][series]
    std::vector<std::vector<TrialRecord>> records(static_cast<std::size_t>(trials));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int t = next++; t < trials; t = next++)
        {
            auto &row = records[static_cast<std::size_t>(t)];
            row.reserve(series.size());
            for (const auto &s : series)
                row.push_back(run_trial(s, t, spec.seed));
        }
    };
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(trials));
    if (threads <= 1)
        worker();
    else
    {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(worker);
    }

    ExperimentResult result;
    result.kind = spec.kind;
    for (std::size_t s = 0; s < series.size(); ++s)
    {
        std::vector<const TrialRecord *> ok;
        int failures = 0;
        for (int t = 0; t < trials; ++t)
        {
            const auto &rec = records[static_cast<std::size_t>(t)][s];
            result.trials.push_back(rec);
            if (rec.failed)
                ++failures;
            else
                ok.push_back(&rec);
        }
        result.failures += failures;

        SweepRow row;
        row.grid_value = series[s].grid_value;
        row.method = series[s].method;
        row.trials = static_cast<int>(ok.size());
        row.failures = failures;
        if (!ok.empty())
        {
            double sum = 0.0, iters = 0.0;
            for (const auto *r : ok)
            {
                sum += r->rate;
                iters += r->iterations;
            }
            const double count = static_cast<double>(ok.size());
            row.mean_rate = sum / count;
            row.mean_iters = iters / count;
            if (ok.size() > 1)
            {
                double ss = 0.0;
                for (const auto *r : ok)
                    ss += (r->rate - row.mean_rate) * (r->rate - row.mean_rate);
                row.stderr_rate = std::sqrt(ss / (count - 1.0)) / std::sqrt(count);
            }
        }
        if (spec.kind != ExperimentKind::convergence)
            result.rows.push_back(row);

        if (spec.kind == ExperimentKind::convergence && !ok.empty())
        {
            std::size_t longest = 0;
            for (const auto *r : ok)
                longest = std::max(longest, r->trace.size());
            for (std::size_t it = 0; it < longest; ++it)
            {
                double sum = 0.0;
                for (const auto *r : ok)
                    sum += r->trace.empty() ? 0.0 : r->trace[std::min(it, r->trace.size() - 1)];
                result.convergence.push_back({series[s].method, series[s].config.num_bs_antennas,
                                              series[s].config.num_elements, static_cast<int>(it),
                                              sum / static_cast<double>(ok.size())});
            }
        }
        if (spec.kind == ExperimentKind::single_run && !ok.empty())
            for (std::size_t it = 0; it < ok.front()->trace.size(); ++it)
                result.single_trace.push_back({static_cast<int>(it), ok.front()->trace[it]});
    }
    return result;
}

std::string to_csv(const ExperimentResult &result)
{
    std::ostringstream out;
    switch (result.kind)
    {
    case ExperimentKind::single_run:
        out << "iter,rate_bps_hz\n";
        for (const auto &p : result.single_trace)
            out << p.iteration << ',' << fmt9(p.rate) << '\n';
        break;
    case ExperimentKind::convergence:
        out << "iter,method,m,n,rate_bps_hz\n";
        for (const auto &r : result.convergence)
            out << r.iter << ',' << to_string(r.method) << ',' << r.m << ',' << r.n << ',' << fmt9(r.rate) << '\n';
        break;
    case ExperimentKind::sweep_region:
    case ExperimentKind::sweep_power:
        out << "grid_value,method,mean_rate,stderr,trials,mean_iters\n";
        for (const auto &r : result.rows)
            out << fmt9(r.grid_value) << ',' << to_string(r.method) << ',' << fmt9(r.mean_rate) << ','
                << fmt9(r.stderr_rate) << ',' << r.trials << ',' << fmt9(r.mean_iters) << '\n';
        break;
    }
    return out.str();
}

} // namespace meris
