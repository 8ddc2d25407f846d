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

#include "meris/scenario.hpp"
#include "meris/types.hpp"

namespace meris
{

/// Elevation/azimuth angles of every propagation path, in radians.
struct PathAngles
{
    RVector theta_bs_b; // AoD elevation at the BS, L_BS
    RVector phi_bs_b;   // AoD azimuth at the BS, L_BS
    RVector theta_bs_s; // AoA elevation at the RIS, L_BS
    RVector phi_bs_s;   // AoA azimuth at the RIS, L_BS
    RVector theta_su;   // AoD elevation at the RIS toward the user, L_SU
    RVector phi_su;     // AoD azimuth at the RIS toward the user, L_SU

    Eigen::Index paths_bs() const { return theta_bs_b.size(); }
    Eigen::Index paths_su() const { return theta_su.size(); }

    /// True when sizes are consistent and every angle is in [-pi/2, pi/2].
    bool valid() const;
};

/// Everything random about one Monte Carlo trial.
struct ChannelRealization
{
    PathAngles angles;
    CVector sigma_bs; // diagonal of the L_BS x L_BS path-response matrix
    CRowVector sigma_s; // 1 x L_SU path responses RIS -> user
    CMatrix bs_frm;     // E, L_BS x M
    double wavelength = 0.1;
    double d_bs = 0.0;
    double d_s = 0.0;
    Vec3 user_position = Vec3::Zero();

    CMatrix sigma_bs_matrix() const { return sigma_bs.asDiagonal(); }
    Eigen::Index num_bs_antennas() const { return bs_frm.cols(); }
};

/// Positions of the N movable elements in the local RIS frame.
class ElementPositions
{
public:
    ElementPositions() = default;
    explicit ElementPositions(std::vector<Vec2> positions) : pos_(std::move(positions)) {}

    std::size_t size() const { return pos_.size(); }
    const Vec2 &operator[](std::size_t n) const { return pos_[n]; }
    Vec2 &operator[](std::size_t n) { return pos_[n]; }
    const std::vector<Vec2> &points() const { return pos_; }

    /// Smallest pairwise distance; +inf for fewer than two elements.
    double min_pairwise_distance() const;

    /// Box and minimum-distance constraints, each relaxed by `tol`.
    bool feasible(double region_edge, double min_distance, double tol = 1e-12) const;

private:
    std::vector<Vec2> pos_;
};

/// Path-length difference of position r relative to the local origin for a
/// path with the given elevation/azimuth.
inline double propagation_delta(const Vec2 &r, double theta, double phi)
{
    return r.x() * std::cos(theta) * std::sin(phi) + r.y() * std::sin(theta);
}

double propagation_delta_bs(const Vec2 &r, Eigen::Index path, const PathAngles &angles);

/// E[j][m] = exp(i 2pi/lambda rho_B^j(r_m)).
CMatrix build_bs_frm(const ScenarioConfig &config, const PathAngles &angles);

/// Incident field-response vector of an element at u (length L_BS).
CVector frv_incident(const Vec2 &u, const PathAngles &angles, double wavelength);

/// Reflected field-response vector of an element at u (length L_SU).
CVector frv_reflect(const Vec2 &u, const PathAngles &angles, double wavelength);

/// H(U) = F_in(U)^H Sigma_BS E, N x M.
CMatrix channel_bs_ris(const ElementPositions &U, const ChannelRealization &chan);

/// g(U) = sigma_S F(U), 1 x N.
CRowVector channel_ris_user(const ElementPositions &U, const ChannelRealization &chan);

} // namespace meris
