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

#include "meris/geometry.hpp"

namespace meris
{

/// RIS phase shifts theta_n in [0, 2pi).
///
/// The vector q used in the objective ||q^H V||^2 has q[n] = exp(-i theta_n),
/// so conj(q[n]) = exp(i theta_n) is the coefficient applied to row n of V.
class PhaseVector
{
public:
    PhaseVector() = default;
    explicit PhaseVector(Eigen::Index n) : theta_(RVector::Zero(n)) {}
    explicit PhaseVector(RVector theta);

    Eigen::Index size() const { return theta_.size(); }
    const RVector &theta() const { return theta_; }
    double theta(Eigen::Index n) const { return theta_[n]; }
    void set(Eigen::Index n, double theta);

    /// exp(i theta_n), the weight of element n.
    cdouble coefficient(Eigen::Index n) const { return std::polar(1.0, theta_[n]); }

    /// q with q[n] = exp(-i theta_n).
    CVector q() const;

private:
    RVector theta_;
};

/// Wrap an angle into [0, 2pi).
double wrap_phase(double theta);

/// zeta[k][j] and mu[k][j]: direction-cosine differences between reflected
/// path k and incident path j. Rows index k (L_SU), columns index j (L_BS).
struct PhaseDecomposition
{
    RMatrix zeta;
    RMatrix mu;
};

PhaseDecomposition phase_decomposition(const PathAngles &angles);

/// Per-element constants of the element-wise objective
/// ||a_n F(u_n) b + c_n||^2 for one element n, plus amplitude/phase caches.
struct ElementWiseTerms
{
    Eigen::Index element = 0;
    double wavelength = 0.1;
    CRowVector a; // 1 x L_SU
    CMatrix b;    // L_BS x M
    CRowVector c; // 1 x M

    RVector a_abs, a_arg; // L_SU
    RMatrix b_abs, b_arg; // L_BS x M
    RVector c_abs, c_arg; // M
};

/// sigma_S F(u) Sigma_BS E for one element (the unweighted row of V).
CRowVector cascaded_row(const Vec2 &u, const ChannelRealization &chan);

/// V(U), N x M. Built row by row from the rank-one F(u_n) form.
CMatrix cascaded_matrix(const ElementPositions &U, const ChannelRealization &chan);

/// q^H V as a row vector, i.e. sum_n exp(i theta_n) v_n.
CRowVector effective_channel(const CMatrix &V, const PhaseVector &phases);

/// ||q^H V||^2.
double passive_gain(const CMatrix &V, const PhaseVector &phases);

ElementWiseTerms elementwise_terms(const ElementPositions &U, const PhaseVector &phases,
                                   const ChannelRealization &chan, Eigen::Index n);

/// Phase of the (k, j, m) term at position u:
/// (2pi/lambda)(zeta x + mu y) + arg b[j][m] + arg a[k].
double term_phase(const Vec2 &u, Eigen::Index k, Eigen::Index j, Eigen::Index m,
                  const ElementWiseTerms &terms, const PhaseDecomposition &decomp);

/// ||a_n F(u) b + c_n||^2 evaluated through the trigonometric expansion.
double upsilon(const Vec2 &u, const ElementWiseTerms &terms, const PhaseDecomposition &decomp);

/// Same quantity through complex matrix arithmetic on the FRVs.
double upsilon_direct(const Vec2 &u, const ElementWiseTerms &terms, const ChannelRealization &chan);

} // namespace meris
