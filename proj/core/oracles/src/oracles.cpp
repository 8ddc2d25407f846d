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
#include "meris/oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace meris::oracle
{

namespace
{

cdouble steer(double wavelength, const Vec2 &u, double theta, double phi)
{
    const double delta = u.x() * std::cos(theta) * std::sin(phi) + u.y() * std::sin(theta);
    const double arg = 2.0 * std::numbers::pi / wavelength * delta;
    return {std::cos(arg), std::sin(arg)};
}

} // namespace

ChannelRealization random_channel(std::mt19937_64 &rng, const Dims &dims)
{
    std::uniform_real_distribution<double> angle(-0.5 * std::numbers::pi, 0.5 * std::numbers::pi);
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    auto angles = [&](int count) {
        RVector v(count);
        for (int i = 0; i < count; ++i)
            v[i] = angle(rng);
        return v;
    };
    ChannelRealization chan;
    chan.wavelength = dims.wavelength;
    chan.angles.theta_bs_b = angles(dims.l_bs);
    chan.angles.phi_bs_b = angles(dims.l_bs);
    chan.angles.theta_bs_s = angles(dims.l_bs);
    chan.angles.phi_bs_s = angles(dims.l_bs);
    chan.angles.theta_su = angles(dims.l_su);
    chan.angles.phi_su = angles(dims.l_su);
    chan.sigma_bs.resize(dims.l_bs);
    for (int j = 0; j < dims.l_bs; ++j)
        chan.sigma_bs[j] = {gauss(rng), gauss(rng)};
    chan.sigma_s.resize(dims.l_su);
    for (int k = 0; k < dims.l_su; ++k)
        chan.sigma_s[k] = {gauss(rng), gauss(rng)};
    chan.bs_frm.resize(dims.l_bs, dims.m);
    for (int j = 0; j < dims.l_bs; ++j)
        for (int m = 0; m < dims.m; ++m)
            chan.bs_frm(j, m) = steer(dims.wavelength, Vec2(0.5 * dims.wavelength * m, 0.0),
                                      chan.angles.theta_bs_b[j], chan.angles.phi_bs_b[j]);
    chan.d_bs = 15.0;
    chan.d_s = 30.0;
    return chan;
}

ElementPositions random_positions(std::mt19937_64 &rng, int n, double region_edge, double min_distance)
{
    std::uniform_real_distribution<double> coord(-0.5 * region_edge, 0.5 * region_edge);
    for (int attempt = 0; attempt < 10000; ++attempt)
    {
        std::vector<Vec2> pts;
        for (int tries = 0; static_cast<int>(pts.size()) < n && tries < 10000; ++tries)
        {
            const Vec2 u(coord(rng), coord(rng));
            bool ok = true;
            for (const auto &p : pts)
                if ((u - p).norm() < min_distance)
                    ok = false;
            if (ok)
                pts.push_back(u);
        }
        if (static_cast<int>(pts.size()) == n)
            return ElementPositions(std::move(pts));
    }
    throw std::runtime_error("random_positions: region too small");
}

PhaseVector random_phases(std::mt19937_64 &rng, int n)
{
    std::uniform_real_distribution<double> t(0.0, 2.0 * std::numbers::pi);
    RVector theta(n);
    for (int i = 0; i < n; ++i)
        theta[i] = t(rng);
    return PhaseVector(theta);
}

CMatrix naive_channel_bs_ris(const ElementPositions &U, const ChannelRealization &chan)
{
    const auto &a = chan.angles;
    const auto lbs = chan.sigma_bs.size();
    CMatrix H = CMatrix::Zero(static_cast<Eigen::Index>(U.size()), chan.bs_frm.cols());
    for (std::size_t n = 0; n < U.size(); ++n)
        for (Eigen::Index j = 0; j < lbs; ++j)
            for (Eigen::Index m = 0; m < chan.bs_frm.cols(); ++m)
                H(static_cast<Eigen::Index>(n), m) +=
                    std::conj(steer(chan.wavelength, U[n], a.theta_bs_s[j], a.phi_bs_s[j])) * chan.sigma_bs[j] *
                    chan.bs_frm(j, m);
    return H;
}

CRowVector naive_channel_ris_user(const ElementPositions &U, const ChannelRealization &chan)
{
    const auto &a = chan.angles;
    CRowVector g = CRowVector::Zero(static_cast<Eigen::Index>(U.size()));
    for (std::size_t n = 0; n < U.size(); ++n)
        for (Eigen::Index k = 0; k < chan.sigma_s.size(); ++k)
            g[static_cast<Eigen::Index>(n)] += chan.sigma_s[k] * steer(chan.wavelength, U[n], a.theta_su[k], a.phi_su[k]);
    return g;
}

CMatrix naive_cascaded(const ElementPositions &U, const ChannelRealization &chan)
{
    const CMatrix H = naive_channel_bs_ris(U, chan);
    const CRowVector g = naive_channel_ris_user(U, chan);
    CMatrix V(H.rows(), H.cols());
    for (Eigen::Index n = 0; n < H.rows(); ++n)
        for (Eigen::Index m = 0; m < H.cols(); ++m)
            V(n, m) = g[n] * H(n, m);
    return V;
}

double naive_gain(const ElementPositions &U, const PhaseVector &phases, const ChannelRealization &chan)
{
    const CMatrix V = naive_cascaded(U, chan);
    double total = 0.0;
    for (Eigen::Index m = 0; m < V.cols(); ++m)
    {
        cdouble s = 0.0;
        for (Eigen::Index n = 0; n < V.rows(); ++n)
            s += std::polar(1.0, phases.theta(n)) * V(n, m);
        total += std::norm(s);
    }
    return total;
}

double naive_coupling(const Vec2 &u, std::size_t n, const ElementPositions &U, const PhaseVector &phases,
                      const ChannelRealization &chan)
{
    const CMatrix V = naive_cascaded(U, chan);
    const CMatrix own = naive_cascaded(ElementPositions({u}), chan);
    double total = 0.0;
    for (Eigen::Index m = 0; m < V.cols(); ++m)
    {
        cdouble c = 0.0;
        for (Eigen::Index other = 0; other < V.rows(); ++other)
            if (static_cast<std::size_t>(other) != n)
                c += std::polar(1.0, phases.theta(other)) * V(other, m);
        const cdouble s = std::polar(1.0, phases.theta(static_cast<Eigen::Index>(n))) * own(0, m);
        total += std::norm(c) + 2.0 * (s * std::conj(c)).real();
    }
    return total;
}

Vec2 fd_gradient(const std::function<double(const Vec2 &)> &f, const Vec2 &u, double h)
{
    const Vec2 ex(h, 0.0), ey(0.0, h);
    return Vec2((f(u + ex) - f(u - ex)) / (2.0 * h), (f(u + ey) - f(u - ey)) / (2.0 * h));
}

Mat2 fd_jacobian(const std::function<Vec2(const Vec2 &)> &f, const Vec2 &u, double h)
{
    const Vec2 ex(h, 0.0), ey(0.0, h);
    Mat2 J;
    J.col(0) = (f(u + ex) - f(u - ex)) / (2.0 * h);
    J.col(1) = (f(u + ey) - f(u - ey)) / (2.0 * h);
    return J;
}

GridResult qp_grid_search(const QpProblem &problem, int resolution)
{
    GridResult out;
    out.best_value = -std::numeric_limits<double>::infinity();
    const double h = problem.half_edge;
    const double pitch = 2.0 * h / (resolution - 1);
    for (int ix = 0; ix < resolution; ++ix)
        for (int iy = 0; iy < resolution; ++iy)
        {
            const Vec2 u(-h + pitch * ix, -h + pitch * iy);
            bool ok = true;
            for (const auto &c : problem.halfspaces)
            {
                const Vec2 d = u - c.offset;
                if (c.normal.x() * d.x() + c.normal.y() * d.y() < c.rhs)
                {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            ++out.feasible_points;
            const Vec2 d = u - problem.anchor;
            const double value = problem.grad.x() * d.x() + problem.grad.y() * d.y() -
                                 0.5 * problem.xi * (d.x() * d.x() + d.y() * d.y());
            if (value > out.best_value)
            {
                out.best_value = value;
                out.best_point = u;
            }
        }
    // Over a cell of diagonal delta the objective moves by at most
    // (|grad| + xi R) delta + xi delta^2 / 2, R the largest |u - anchor| in the box.
    const double delta = std::sqrt(2.0) * pitch;
    const double reach = (Vec2(h, h).cwiseAbs() + problem.anchor.cwiseAbs()).norm();
    out.cell_gap = (problem.grad.norm() + problem.xi * reach) * delta + 0.5 * problem.xi * delta * delta;
    return out;
}

double phase_scan(const CRowVector &v, const CRowVector &r, int steps, double *best_theta)
{
    double best = -1.0;
    for (int s = 0; s < steps; ++s)
    {
        const double t = 2.0 * std::numbers::pi * s / steps;
        double val = 0.0;
        for (Eigen::Index m = 0; m < v.size(); ++m)
            val += std::norm(std::polar(1.0, t) * v[m] + r[m]);
        if (val > best)
        {
            best = val;
            if (best_theta)
                *best_theta = t;
        }
    }
    return best;
}

double random_beam_best(std::mt19937_64 &rng, const CRowVector &h, double p, int draws)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double best = 0.0;
    for (int d = 0; d < draws; ++d)
    {
        CVector w(h.size());
        for (Eigen::Index i = 0; i < w.size(); ++i)
            w[i] = {gauss(rng), gauss(rng)};
        const double norm = w.norm();
        if (norm == 0.0)
            continue;
        w *= std::sqrt(p * unit(rng)) / norm; // ||w||^2 <= p
        cdouble s = 0.0;
        for (Eigen::Index i = 0; i < w.size(); ++i)
            s += h[i] * w[i];
        best = std::max(best, std::norm(s));
    }
    return best;
}

} // namespace meris::oracle
