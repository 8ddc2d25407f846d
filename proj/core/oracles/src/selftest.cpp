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
#include <cmath>
#include <cstdio>
#include <ostream>

#include "meris/oracles.hpp"

namespace meris::oracle
{

namespace
{

struct Instance
{
    ChannelRealization chan;
    ElementPositions positions;
    PhaseVector phases;
    double region_edge = 0.0;
    std::size_t element = 0;
};

Instance random_instance(std::mt19937_64 &rng, double wavelength, int max_n = 6, int max_dim = 6)
{
    std::uniform_int_distribution<int> n_dist(2, max_n);
    std::uniform_int_distribution<int> dim(1, max_dim);
    Dims d;
    d.n = n_dist(rng);
    d.m = dim(rng);
    d.l_bs = dim(rng);
    d.l_su = dim(rng);
    d.wavelength = wavelength;
    Instance inst;
    inst.chan = random_channel(rng, d);
    inst.region_edge = 5.0 * wavelength;
    inst.positions = random_positions(rng, d.n, inst.region_edge, 0.5 * wavelength);
    inst.phases = random_phases(rng, d.n);
    inst.element = std::uniform_int_distribution<std::size_t>(0, static_cast<std::size_t>(d.n - 1))(rng);
    return inst;
}

Vec2 random_point(std::mt19937_64 &rng, double region_edge)
{
    std::uniform_real_distribution<double> coord(-0.5 * region_edge, 0.5 * region_edge);
    const double x = coord(rng);
    return Vec2(x, coord(rng));
}

void record(CheckStats &s, double error, bool violated)
{
    ++s.samples;
    s.worst = std::max(s.worst, error);
    if (violated)
        ++s.violations;
}

} // namespace

CheckStats check_gradient(std::uint64_t seed, int samples, double wavelength, double tol)
{
    std::mt19937_64 rng(seed);
    CheckStats stats;
    for (int s = 0; s < samples; ++s)
    {
        const auto inst = random_instance(rng, wavelength);
        const auto terms = elementwise_terms(inst.positions, inst.phases, inst.chan,
                                             static_cast<Eigen::Index>(inst.element));
        const auto decomp = phase_decomposition(inst.chan.angles);
        const Vec2 u = random_point(rng, inst.region_edge);
        const Vec2 fd = fd_gradient(
            [&](const Vec2 &x) { return naive_coupling(x, inst.element, inst.positions, inst.phases, inst.chan); },
            u, 1e-6 * wavelength);
        const Vec2 g = gradient(u, terms, decomp);
        const double err = (g - fd).norm() / fd.norm();
        record(stats, err, !(err < tol));
    }
    return stats;
}

CheckStats check_hessian(std::uint64_t seed, int samples, double wavelength, double tol)
{
    std::mt19937_64 rng(seed);
    CheckStats stats;
    for (int s = 0; s < samples; ++s)
    {
        const auto inst = random_instance(rng, wavelength);
        const auto terms = elementwise_terms(inst.positions, inst.phases, inst.chan,
                                             static_cast<Eigen::Index>(inst.element));
        const auto decomp = phase_decomposition(inst.chan.angles);
        const Vec2 u = random_point(rng, inst.region_edge);
        const Mat2 fd = fd_jacobian([&](const Vec2 &x) { return gradient(x, terms, decomp); }, u, 1e-6 * wavelength);
        const Mat2 h = hessian(u, terms, decomp);
        const double err = (h - fd).norm() / fd.norm();
        record(stats, err, !(err < tol));
    }
    return stats;
}

CheckStats check_xi_bound(std::uint64_t seed, int instances, int points, double wavelength)
{
    std::mt19937_64 rng(seed);
    CheckStats stats;
    for (int i = 0; i < instances; ++i)
    {
        const auto inst = random_instance(rng, wavelength);
        const auto terms = elementwise_terms(inst.positions, inst.phases, inst.chan,
                                             static_cast<Eigen::Index>(inst.element));
        const auto decomp = phase_decomposition(inst.chan.angles);
        const double xi = xi_bound(terms, decomp);
        for (int p = 0; p < points; ++p)
        {
            const double frob = hessian(random_point(rng, inst.region_edge), terms, decomp).norm();
            record(stats, frob / xi, frob > xi * (1.0 + 1e-12));
        }
    }
    return stats;
}

CheckStats check_surrogate(std::uint64_t seed, int anchors, int points, double wavelength)
{
    std::mt19937_64 rng(seed);
    CheckStats stats;
    for (int a = 0; a < anchors; ++a)
    {
        const auto inst = random_instance(rng, wavelength);
        const auto terms = elementwise_terms(inst.positions, inst.phases, inst.chan,
                                             static_cast<Eigen::Index>(inst.element));
        const auto decomp = phase_decomposition(inst.chan.angles);
        auto g = [&](const Vec2 &x) { return naive_coupling(x, inst.element, inst.positions, inst.phases, inst.chan); };
        const Vec2 anchor = random_point(rng, inst.region_edge);
        const auto bundle = make_bundle(anchor, g(anchor), terms, decomp);
        const double scale = std::max(1.0, std::abs(bundle.anchor_value));

        const double tangency = std::abs(surrogate(anchor, bundle) - bundle.anchor_value);
        record(stats, tangency, tangency > 1e-12);
        for (int p = 0; p < points; ++p)
        {
            const Vec2 u = random_point(rng, inst.region_edge);
            const double gap = surrogate(u, bundle) - g(u); // must be <= 0
            record(stats, std::max(0.0, gap) / scale, gap > 1e-10 * scale);
        }
    }
    return stats;
}

CheckStats check_qp(std::uint64_t seed, int instances, int resolution, double wavelength)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> n_dist(2, 6);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    CheckStats stats;
    for (int i = 0; i < instances; ++i)
    {
        const double edge = 5.0 * wavelength;
        const double d0 = 0.5 * wavelength;
        const int n = n_dist(rng);
        const auto pos = random_positions(rng, n, edge, d0);

        QpProblem qp;
        qp.anchor = pos[0];
        qp.half_edge = 0.5 * edge;
        qp.xi = 0.5 + unit(rng);
        const double angle = 2.0 * std::numbers::pi * unit(rng);
        // Unconstrained step of up to one region edge.
        qp.grad = qp.xi * edge * unit(rng) * Vec2(std::cos(angle), std::sin(angle));
        for (int other = 1; other < n; ++other)
            qp.halfspaces.push_back(linearize_distance(pos[0], pos[static_cast<std::size_t>(other)], d0));

        const Vec2 u = solve_surrogate_qp(qp);
        const auto grid = qp_grid_search(qp, resolution);

        bool feasible = std::abs(u.x()) <= qp.half_edge + 1e-12 && std::abs(u.y()) <= qp.half_edge + 1e-12;
        for (const auto &c : qp.halfspaces)
            feasible = feasible && c.normal.dot(u - c.offset) >= c.rhs - 1e-12;
        const double value = qp.objective(u);
        const double scale = std::max(1.0, std::abs(grid.best_value));
        const bool never_beaten = value >= grid.best_value - 1e-12 * scale;
        const bool within_cell = value - grid.best_value <= grid.cell_gap;
        record(stats, (value - grid.best_value) / std::max(grid.cell_gap, 1e-300),
               !(feasible && never_beaten && within_cell && grid.feasible_points > 0));
    }
    return stats;
}

CheckStats check_mrt(std::uint64_t seed, int channels, int draws)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> m_dist(1, 8);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> power(0.1, 20.0);
    CheckStats stats;
    for (int c = 0; c < channels; ++c)
    {
        CRowVector h(m_dist(rng));
        for (Eigen::Index i = 0; i < h.size(); ++i)
            h[i] = {gauss(rng), gauss(rng)};
        const double p = power(rng);
        const auto w = mrt(h, p);
        const double value = std::norm((h * w.w)(0));
        for (int d = 0; d < draws; ++d)
        {
            const double other = random_beam_best(rng, h, p, 1);
            record(stats, other / value, other > value * (1.0 + 1e-12));
        }
    }
    return stats;
}

CheckStats check_passive_rank_one(std::uint64_t seed, int instances)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> n_dist(1, 16);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CheckStats stats;
    for (int i = 0; i < instances; ++i)
    {
        const int n = n_dist(rng);
        CMatrix V(n, 1);
        double sum_abs = 0.0;
        for (int r = 0; r < n; ++r)
        {
            V(r, 0) = {gauss(rng), gauss(rng)};
            sum_abs += std::abs(V(r, 0));
        }
        const auto res = optimize_phases(V, random_phases(rng, n));
        const double optimum = sum_abs * sum_abs;
        const double err = std::abs(passive_gain(V, res.phases) - optimum) / optimum;
        record(stats, err, !(err <= 1e-6));
    }
    return stats;
}

CheckStats check_channel_loops(std::uint64_t seed, int instances, double wavelength)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, 8);
    CheckStats stats;
    for (int i = 0; i < instances; ++i)
    {
        Dims d{dim(rng), dim(rng), dim(rng), dim(rng), wavelength};
        const auto chan = random_channel(rng, d);
        const auto U = random_positions(rng, d.n, 5.0 * wavelength, 0.5 * wavelength);
        const CMatrix H = channel_bs_ris(U, chan), Hn = naive_channel_bs_ris(U, chan);
        const CRowVector g = channel_ris_user(U, chan), gn = naive_channel_ris_user(U, chan);
        const CMatrix V = cascaded_matrix(U, chan), Vn = naive_cascaded(U, chan);
        const double err = std::max({(H - Hn).norm() / Hn.norm(), (g - gn).norm() / gn.norm(),
                                     (V - Vn).norm() / Vn.norm()});
        record(stats, err, !(err <= 1e-10));
    }
    return stats;
}

SelftestReport run_selftest(const ScenarioConfig &config, std::uint64_t seed, std::ostream &log)
{
    SelftestReport report;
    const double lambda = config.wavelength;
    auto add = [&](const std::string &name, const CheckStats &s) {
        const bool ok = s.ok();
        (ok ? report.passed : report.failed) += 1;
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%s %-32s samples=%ld violations=%ld worst=%.3e", ok ? "PASS" : "FAIL",
                      name.c_str(), s.samples, s.violations, s.worst);
        std::string line(buf);
        log << line << '\n';
        report.lines.push_back(std::move(line));
    };
    add("channel_loop_oracle", check_channel_loops(seed, 50, lambda));
    add("gradient_vs_finite_difference", check_gradient(seed + 1, 200, lambda, 1e-5));
    add("hessian_vs_finite_difference", check_hessian(seed + 2, 200, lambda, 1e-4));
    add("xi_dominates_hessian", check_xi_bound(seed + 3, 20, 200, lambda));
    add("surrogate_minorizes_coupling", check_surrogate(seed + 4, 20, 200, lambda));
    add("qp_vs_grid_oracle", check_qp(seed + 5, 10, 200, lambda));
    add("mrt_dominance", check_mrt(seed + 6, 20, 100));
    add("passive_rank_one_optimum", check_passive_rank_one(seed + 7, 20));
    log << "selftest: " << report.passed << " passed, " << report.failed << " failed\n";
    return report;
}

} // namespace meris::oracle
