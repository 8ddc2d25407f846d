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
#include "meris/cascade.hpp"

#include <cmath>
#include <stdexcept>

namespace meris
{

double wrap_phase(double theta)
{
    double t = std::fmod(theta, two_pi);
    if (t < 0.0)
        t += two_pi;
    // fmod of a tiny negative number can round up to exactly 2pi.
    return t >= two_pi ? 0.0 : t;
}

PhaseVector::PhaseVector(RVector theta) : theta_(std::move(theta))
{
    for (Eigen::Index n = 0; n < theta_.size(); ++n)
        theta_[n] = wrap_phase(theta_[n]);
}

void PhaseVector::set(Eigen::Index n, double theta) { theta_[n] = wrap_phase(theta); }

CVector PhaseVector::q() const
{
    CVector out(theta_.size());
    for (Eigen::Index n = 0; n < theta_.size(); ++n)
        out[n] = std::polar(1.0, -theta_[n]);
    return out;
}

PhaseDecomposition phase_decomposition(const PathAngles &angles)
{
    const auto lsu = angles.paths_su();
    const auto lbs = angles.paths_bs();
    PhaseDecomposition d{RMatrix(lsu, lbs), RMatrix(lsu, lbs)};
    for (Eigen::Index k = 0; k < lsu; ++k)
        for (Eigen::Index j = 0; j < lbs; ++j)
        {
            d.zeta(k, j) = std::cos(angles.theta_su[k]) * std::sin(angles.phi_su[k]) -
                           std::cos(angles.theta_bs_s[j]) * std::sin(angles.phi_bs_s[j]);
            d.mu(k, j) = std::sin(angles.theta_su[k]) - std::sin(angles.theta_bs_s[j]);
        }
    return d;
}

CRowVector cascaded_row(const Vec2 &u, const ChannelRealization &chan)
{
    // sigma_S f(u) f_in(u)^H Sigma_BS E, evaluated as (sigma_S f)(f_in^H b).
    const cdouble user_side = (chan.sigma_s * frv_reflect(u, chan.angles, chan.wavelength))(0);
    const CVector fin = frv_incident(u, chan.angles, chan.wavelength);
    return user_side * (fin.adjoint() * (chan.sigma_bs.asDiagonal() * chan.bs_frm));
}

CMatrix cascaded_matrix(const ElementPositions &U, const ChannelRealization &chan)
{
    CMatrix V(static_cast<Eigen::Index>(U.size()), chan.bs_frm.cols());
    for (std::size_t n = 0; n < U.size(); ++n)
        V.row(static_cast<Eigen::Index>(n)) = cascaded_row(U[n], chan);
    return V;
}

CRowVector effective_channel(const CMatrix &V, const PhaseVector &phases)
{
    if (V.rows() != phases.size())
        throw std::invalid_argument("effective_channel: phase count does not match V rows");
    CRowVector h = CRowVector::Zero(V.cols());
    for (Eigen::Index n = 0; n < V.rows(); ++n)
        h += phases.coefficient(n) * V.row(n);
    return h;
}

double passive_gain(const CMatrix &V, const PhaseVector &phases)
{
    return effective_channel(V, phases).squaredNorm();
}

ElementWiseTerms elementwise_terms(const ElementPositions &U, const PhaseVector &phases,
                                   const ChannelRealization &chan, Eigen::Index n)
{
    if (n < 0 || n >= static_cast<Eigen::Index>(U.size()) || phases.size() != static_cast<Eigen::Index>(U.size()))
        throw std::invalid_argument("elementwise_terms: element index or phase count out of range");

    ElementWiseTerms t;
    t.element = n;
    t.wavelength = chan.wavelength;
    t.a = phases.coefficient(n) * chan.sigma_s;
    t.b = chan.sigma_bs.asDiagonal() * chan.bs_frm;
    t.c = CRowVector::Zero(chan.bs_frm.cols());
    for (Eigen::Index other = 0; other < static_cast<Eigen::Index>(U.size()); ++other)
        if (other != n)
            t.c += phases.coefficient(other) * cascaded_row(U[static_cast<std::size_t>(other)], chan);

    t.a_abs = t.a.cwiseAbs().transpose();
    t.a_arg = t.a.unaryExpr([](cdouble z) { return std::arg(z); }).real().transpose();
    t.b_abs = t.b.cwiseAbs();
    t.b_arg = t.b.unaryExpr([](cdouble z) { return std::arg(z); }).real();
    t.c_abs = t.c.cwiseAbs().transpose();
    t.c_arg = t.c.unaryExpr([](cdouble z) { return std::arg(z); }).real().transpose();
    return t;
}

double term_phase(const Vec2 &u, Eigen::Index k, Eigen::Index j, Eigen::Index m,
                  const ElementWiseTerms &terms, const PhaseDecomposition &decomp)
{
    return two_pi / terms.wavelength * (decomp.zeta(k, j) * u.x() + decomp.mu(k, j) * u.y()) +
           terms.b_arg(j, m) + terms.a_arg[k];
}

double upsilon(const Vec2 &u, const ElementWiseTerms &terms, const PhaseDecomposition &decomp)
{
    const auto lsu = decomp.zeta.rows();
    const auto lbs = decomp.zeta.cols();
    double total = 0.0;
    for (Eigen::Index m = 0; m < terms.b.cols(); ++m)
    {
        cdouble s = terms.c[m];
        for (Eigen::Index j = 0; j < lbs; ++j)
            for (Eigen::Index k = 0; k < lsu; ++k)
                s += std::polar(terms.a_abs[k] * terms.b_abs(j, m), term_phase(u, k, j, m, terms, decomp));
        total += std::norm(s);
    }
    return total;
}

double upsilon_direct(const Vec2 &u, const ElementWiseTerms &terms, const ChannelRealization &chan)
{
    const CMatrix F = frv_reflect(u, chan.angles, chan.wavelength) *
                      frv_incident(u, chan.angles, chan.wavelength).adjoint();
    return (terms.a * F * terms.b + terms.c).squaredNorm();
}

} // namespace meris
