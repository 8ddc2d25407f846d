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
#include "meris/calculus.hpp"

#include <cmath>

namespace meris
{

// Every quantity below is a sum over BS antenna columns m of the scalar
// expression for one column: ||x||^2 over M columns splits into M independent
// squared magnitudes, each with its own c^m and b^{., m}.

double coupling_value(const Vec2 &u, const ElementWiseTerms &terms, const PhaseDecomposition &decomp)
{
    double total = 0.0;
    for (Eigen::Index m = 0; m < terms.b.cols(); ++m)
    {
        const double c = terms.c_abs[m];
        double cross = 0.0;
        for (Eigen::Index j = 0; j < decomp.zeta.cols(); ++j)
            for (Eigen::Index k = 0; k < decomp.zeta.rows(); ++k)
                cross += terms.a_abs[k] * terms.b_abs(j, m) *
                         std::cos(term_phase(u, k, j, m, terms, decomp) - terms.c_arg[m]);
        total += c * c + 2.0 * c * cross;
    }
    return total;
}

Vec2 gradient(const Vec2 &u, const ElementWiseTerms &terms, const PhaseDecomposition &decomp)
{
    const double scale = 4.0 * pi / terms.wavelength;
    Vec2 g = Vec2::Zero();
    for (Eigen::Index m = 0; m < terms.b.cols(); ++m)
    {
        const double c = terms.c_abs[m];
        if (c == 0.0)
            continue;
        double gx = 0.0, gy = 0.0;
        for (Eigen::Index j = 0; j < decomp.zeta.cols(); ++j)
            for (Eigen::Index k = 0; k < decomp.zeta.rows(); ++k)
            {
                const double w = terms.a_abs[k] * terms.b_abs(j, m);
                const double s = std::sin(terms.c_arg[m] - term_phase(u, k, j, m, terms, decomp));
                gx += decomp.zeta(k, j) * w * s;
                gy += decomp.mu(k, j) * w * s;
            }
        g += scale * c * Vec2(gx, gy);
    }
    return g;
}

Mat2 hessian(const Vec2 &u, const ElementWiseTerms &terms, const PhaseDecomposition &decomp)
{
    const double scale = 8.0 * pi * pi / (terms.wavelength * terms.wavelength);
    Mat2 h = Mat2::Zero();
    for (Eigen::Index m = 0; m < terms.b.cols(); ++m)
    {
        const double c = terms.c_abs[m];
        if (c == 0.0)
            continue;
        double hxx = 0.0, hxy = 0.0, hyy = 0.0;
        for (Eigen::Index j = 0; j < decomp.zeta.cols(); ++j)
            for (Eigen::Index k = 0; k < decomp.zeta.rows(); ++k)
            {
                const double w = terms.a_abs[k] * terms.b_abs(j, m);
                const double cs = std::cos(terms.c_arg[m] - term_phase(u, k, j, m, terms, decomp));
                const double z = decomp.zeta(k, j);
                const double mu = decomp.mu(k, j);
                hxx += z * z * w * cs;
                hxy += z * mu * w * cs;
                hyy += mu * mu * w * cs;
            }
        // All three entries carry the same negative sign: each is the
        // derivative of sin(arg c - phi) times -dphi.
        h(0, 0) -= scale * c * hxx;
        h(0, 1) -= scale * c * hxy;
        h(1, 1) -= scale * c * hyy;
    }
    h(1, 0) = h(0, 1);
    return h;
}

double xi_bound(const ElementWiseTerms &terms, const PhaseDecomposition &decomp)
{
    const double scale = 8.0 * pi * pi / (terms.wavelength * terms.wavelength);
    double xi = 0.0;
    for (Eigen::Index m = 0; m < terms.b.cols(); ++m)
    {
        const double c = terms.c_abs[m];
        if (c == 0.0)
            continue;
        double sxx = 0.0, sxy = 0.0, syy = 0.0;
        for (Eigen::Index j = 0; j < decomp.zeta.cols(); ++j)
            for (Eigen::Index k = 0; k < decomp.zeta.rows(); ++k)
            {
                const double w = terms.a_abs[k] * terms.b_abs(j, m);
                const double z = decomp.zeta(k, j);
                const double mu = decomp.mu(k, j);
                sxx += z * z * w;
                sxy += z * mu * w;
                syy += mu * mu * w;
            }
        xi += scale * c * std::sqrt(sxx * sxx + 2.0 * sxy * sxy + syy * syy);
    }
    return xi;
}

CalculusBundle make_bundle(const Vec2 &anchor, double anchor_value,
                           const ElementWiseTerms &terms, const PhaseDecomposition &decomp)
{
    CalculusBundle b;
    b.anchor = anchor;
    b.anchor_value = anchor_value;
    b.grad = gradient(anchor, terms, decomp);
    b.hess = hessian(anchor, terms, decomp);
    b.xi = xi_bound(terms, decomp);
    return b;
}

double surrogate(const Vec2 &u, const CalculusBundle &bundle)
{
    const Vec2 d = u - bundle.anchor;
    return bundle.anchor_value + bundle.grad.dot(d) - 0.5 * bundle.xi * d.squaredNorm();
}

} // namespace meris
