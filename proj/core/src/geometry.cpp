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
#include "meris/geometry.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>

namespace meris
{

namespace
{

bool in_half_pi(const RVector &v)
{
    return (v.array().abs() <= 0.5 * pi + 1e-15).all();
}

CVector frv(const Vec2 &u, const RVector &theta, const RVector &phi, double wavelength)
{
    const double k = two_pi / wavelength;
    CVector out(theta.size());
    for (Eigen::Index l = 0; l < theta.size(); ++l)
        out[l] = std::polar(1.0, k * propagation_delta(u, theta[l], phi[l]));
    return out;
}

} // namespace

bool PathAngles::valid() const
{
    const auto lbs = theta_bs_b.size();
    const auto lsu = theta_su.size();
    if (lbs < 1 || lsu < 1 || phi_bs_b.size() != lbs || theta_bs_s.size() != lbs ||
        phi_bs_s.size() != lbs || phi_su.size() != lsu)
        return false;
    return in_half_pi(theta_bs_b) && in_half_pi(phi_bs_b) && in_half_pi(theta_bs_s) &&
           in_half_pi(phi_bs_s) && in_half_pi(theta_su) && in_half_pi(phi_su);
}

double ElementPositions::min_pairwise_distance() const
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pos_.size(); ++i)
        for (std::size_t j = i + 1; j < pos_.size(); ++j)
            best = std::min(best, (pos_[i] - pos_[j]).norm());
    return best;
}

bool ElementPositions::feasible(double region_edge, double min_distance, double tol) const
{
    const double h = 0.5 * region_edge + tol;
    for (const auto &u : pos_)
        if (!(std::abs(u.x()) <= h && std::abs(u.y()) <= h))
            return false;
    return min_pairwise_distance() >= min_distance - tol;
}

double propagation_delta_bs(const Vec2 &r, Eigen::Index path, const PathAngles &angles)
{
    return propagation_delta(r, angles.theta_bs_b[path], angles.phi_bs_b[path]);
}

CMatrix build_bs_frm(const ScenarioConfig &config, const PathAngles &angles)
{
    const auto antennas = config.antenna_positions();
    const double k = two_pi / config.wavelength;
    CMatrix E(angles.paths_bs(), static_cast<Eigen::Index>(antennas.size()));
    for (Eigen::Index j = 0; j < E.rows(); ++j)
        for (Eigen::Index m = 0; m < E.cols(); ++m)
            E(j, m) = std::polar(1.0, k * propagation_delta_bs(antennas[static_cast<std::size_t>(m)], j, angles));
    return E;
}

CVector frv_incident(const Vec2 &u, const PathAngles &angles, double wavelength)
{
    return frv(u, angles.theta_bs_s, angles.phi_bs_s, wavelength);
}

CVector frv_reflect(const Vec2 &u, const PathAngles &angles, double wavelength)
{
    return frv(u, angles.theta_su, angles.phi_su, wavelength);
}

CMatrix channel_bs_ris(const ElementPositions &U, const ChannelRealization &chan)
{
    if (chan.sigma_bs.size() != chan.bs_frm.rows() || chan.angles.paths_bs() != chan.bs_frm.rows())
        throw std::invalid_argument("channel_bs_ris: path count mismatch");
    const CMatrix b = chan.sigma_bs.asDiagonal() * chan.bs_frm;
    CMatrix H(static_cast<Eigen::Index>(U.size()), chan.bs_frm.cols());
    for (std::size_t n = 0; n < U.size(); ++n)
        H.row(static_cast<Eigen::Index>(n)) = frv_incident(U[n], chan.angles, chan.wavelength).adjoint() * b;
    return H;
}

CRowVector channel_ris_user(const ElementPositions &U, const ChannelRealization &chan)
{
    if (chan.sigma_s.size() != chan.angles.paths_su())
        throw std::invalid_argument("channel_ris_user: path count mismatch");
    CRowVector g(static_cast<Eigen::Index>(U.size()));
    for (std::size_t n = 0; n < U.size(); ++n)
        g[static_cast<Eigen::Index>(n)] = (chan.sigma_s * frv_reflect(U[n], chan.angles, chan.wavelength))(0);
    return g;
}

} // namespace meris
