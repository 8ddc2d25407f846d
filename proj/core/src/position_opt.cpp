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
#include "meris/position_opt.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>

#include "meris/beamforming.hpp"

namespace meris
{

namespace
{

constexpr double feas_tol = 1e-12;

// { u : normal . u >= level }, normal of unit length.
struct Halfplane
{
    Vec2 normal;
    double level;
};

std::vector<Halfplane> halfplanes_of(const QpProblem &p)
{
    std::vector<Halfplane> out;
    out.reserve(p.halfspaces.size() + 4);
    out.push_back({Vec2(1.0, 0.0), -p.half_edge});
    out.push_back({Vec2(-1.0, 0.0), -p.half_edge});
    out.push_back({Vec2(0.0, 1.0), -p.half_edge});
    out.push_back({Vec2(0.0, -1.0), -p.half_edge});
    for (const auto &c : p.halfspaces)
        out.push_back({c.normal, c.rhs + c.normal.dot(c.offset)});
    return out;
}

bool inside(const std::vector<Halfplane> &planes, const Vec2 &u, double tol)
{
    for (const auto &h : planes)
        if (h.normal.dot(u) - h.level < -tol)
            return false;
    return true;
}

Vec2 clamp_box(const Vec2 &u, double half_edge)
{
    return Vec2(std::clamp(u.x(), -half_edge, half_edge), std::clamp(u.y(), -half_edge, half_edge));
}

template <typename Fn>
void for_each_vertex(const std::vector<Halfplane> &planes, Fn &&fn)
{
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (std::size_t l = i + 1; l < planes.size(); ++l)
        {
            const Vec2 &a = planes[i].normal;
            const Vec2 &b = planes[l].normal;
            const double det = a.x() * b.y() - a.y() * b.x();
            if (std::abs(det) < 1e-14)
                continue;
            const Vec2 v((planes[i].level * b.y() - a.y() * planes[l].level) / det,
                         (a.x() * planes[l].level - planes[i].level * b.x()) / det);
            fn(v);
        }
}

bool distances_ok(const ElementPositions &U, std::size_t n, const Vec2 &u, double d0)
{
    for (std::size_t other = 0; other < U.size(); ++other)
        if (other != n && (u - U[other]).norm() < d0 - feas_tol)
            return false;
    return true;
}

} // namespace

LinearizedConstraint linearize_distance(const Vec2 &anchor, const Vec2 &other, double min_distance)
{
    const Vec2 diff = anchor - other;
    const double dist = diff.norm();
    if (!(dist >= min_distance - feas_tol) || dist == 0.0)
        throw std::domain_error("linearize_distance: anchor violates the minimum distance");
    return {diff / dist, other, min_distance};
}

double QpProblem::objective(const Vec2 &u) const
{
    const Vec2 d = u - anchor;
    return grad.dot(d) - 0.5 * xi * d.squaredNorm();
}

bool QpProblem::feasible(const Vec2 &u, double tol) const
{
    return inside(halfplanes_of(*this), u, tol);
}

Vec2 solve_surrogate_qp(const QpProblem &problem)
{
    if (!(problem.xi >= 0.0))
        throw std::invalid_argument("solve_surrogate_qp: xi must be non-negative");
    const auto planes = halfplanes_of(problem);
    if (!inside(planes, problem.anchor, feas_tol))
        throw std::logic_error("solve_surrogate_qp: anchor is infeasible");

    Vec2 best = problem.anchor;

    if (problem.xi > 0.0)
    {
        // Projection of the unconstrained maximizer onto the polygon.
        const Vec2 target = problem.anchor + problem.grad / problem.xi;
        if (inside(planes, target, 0.0))
            return target;
        double best_dist = (best - target).squaredNorm();
        auto offer = [&](const Vec2 &v) {
            if (!inside(planes, v, feas_tol))
                return;
            const double d = (v - target).squaredNorm();
            if (d < best_dist)
            {
                best_dist = d;
                best = v;
            }
        };
        for (const auto &h : planes)
            offer(target + (h.level - h.normal.dot(target)) * h.normal);
        for_each_vertex(planes, offer);
    }
    else
    {
        if (problem.grad.squaredNorm() == 0.0)
            return problem.anchor;
        double best_val = problem.grad.dot(best);
        for_each_vertex(planes, [&](const Vec2 &v) {
            if (!inside(planes, v, feas_tol))
                return;
            const double val = problem.grad.dot(v);
            if (val > best_val)
            {
                best_val = val;
                best = v;
            }
        });
    }
    return clamp_box(best, problem.half_edge);
}

ElementPositions initial_positions(const ScenarioConfig &config)
{
    const auto n = static_cast<std::size_t>(config.num_elements);
    const double edge = config.region_edge;
    const double slack = 1e-12 * edge;

    auto grid = [&](double pitch, std::size_t cols) -> std::optional<ElementPositions> {
        const std::size_t rows = (n + cols - 1) / cols;
        if ((cols - 1) * pitch > edge + slack || (rows - 1) * pitch > edge + slack)
            return std::nullopt;
        std::vector<Vec2> pts;
        pts.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            const double c = static_cast<double>(i % cols);
            const double r = static_cast<double>(i / cols);
            pts.emplace_back((c - 0.5 * static_cast<double>(cols - 1)) * pitch,
                             (r - 0.5 * static_cast<double>(rows - 1)) * pitch);
        }
        return ElementPositions(std::move(pts));
    };

    const double pitch = std::max(config.min_distance, 0.5 * config.wavelength);
    const auto square_cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    if (auto g = grid(pitch, square_cols))
        return *g;
    const auto per_side = static_cast<std::size_t>(std::floor(edge / config.min_distance * (1.0 + 1e-12))) + 1;
    if (auto g = grid(config.min_distance, std::min(per_side, n)))
        return *g;

    std::mt19937_64 rng(config.rng_seed);
    std::uniform_real_distribution<double> coord(-0.5 * edge, 0.5 * edge);
    for (int attempt = 0; attempt < 1000; ++attempt)
    {
        std::vector<Vec2> pts;
        for (int tries = 0; pts.size() < n && tries < 100000; ++tries)
        {
            const Vec2 u(coord(rng), coord(rng));
            bool ok = true;
            for (const auto &p : pts)
                ok = ok && (u - p).norm() >= config.min_distance;
            if (ok)
                pts.push_back(u);
        }
        if (pts.size() == n)
            return ElementPositions(std::move(pts));
    }
    throw std::runtime_error("initial_positions: could not place elements in the moving region");
}

PositionStepResult optimize_positions(const ElementPositions &U, const PhaseVector &phases,
                                      const ChannelRealization &chan, const ScenarioConfig &config)
{
    PositionStepResult res;
    res.positions = U;
    const auto decomp = phase_decomposition(chan.angles);
    const double half_edge = 0.5 * config.region_edge;
    auto to_rate = [&](double gain) { return rate_from_gain(config.p_max * gain, config.sigma2); };

    double current = passive_gain(cascaded_matrix(U, chan), phases);
    res.rate_trace.push_back(to_rate(current));

    const auto count = static_cast<Eigen::Index>(U.size());
    for (int pass = 0; pass < config.position_passes; ++pass)
        for (Eigen::Index n = 0; n < count; ++n)
        {
            const auto idx = static_cast<std::size_t>(n);
            const auto terms = elementwise_terms(res.positions, phases, chan, n);
            const double xi = xi_bound(terms, decomp);
            if (!(xi > 0.0))
                continue; // c_n = 0: no coupling, gradient vanishes

            double element_rate = to_rate(current);
            for (int it = 0; it < config.max_inner_iters; ++it)
            {
                const Vec2 anchor = res.positions[idx];
                QpProblem qp;
                qp.anchor = anchor;
                qp.grad = gradient(anchor, terms, decomp);
                qp.xi = xi;
                qp.half_edge = half_edge;
                for (std::size_t other = 0; other < U.size(); ++other)
                    if (other != idx)
                        qp.halfspaces.push_back(linearize_distance(anchor, res.positions[other], config.min_distance));

                const Vec2 candidate = solve_surrogate_qp(qp);
                if (!distances_ok(res.positions, idx, candidate, config.min_distance))
                {
                    ++res.rejected_steps;
                    break;
                }
                const double value = upsilon(candidate, terms, decomp);
                if (value < current)
                {
                    ++res.rejected_steps;
                    break;
                }
                res.positions[idx] = candidate;
                current = value;
                ++res.inner_iterations;
                const double r = to_rate(current);
                res.rate_trace.push_back(r);
                const double increment = r - element_rate;
                element_rate = r;
                if (increment < config.sca_epsilon)
                    break;
            }
        }
    return res;
}

} // namespace meris
