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

#include "meris/cascade.hpp"

namespace meris
{

/// Snapshot of first/second order information at an anchor point.
struct CalculusBundle
{
    Vec2 anchor = Vec2::Zero();
    double anchor_value = 0.0;
    Vec2 grad = Vec2::Zero();
    Mat2 hess = Mat2::Zero();
    double xi = 0.0;
};

/// Coupling part of upsilon:
///   g_n(u) = sum_m |c^m|^2 + 2 |c^m| sum_{k,j} |a^k| |b^{j,m}| cos(phi^{k,j,m}(u) - arg c^m).
/// gradient() and hessian() are its exact derivatives.
double coupling_value(const Vec2 &u, const ElementWiseTerms &terms, const PhaseDecomposition &decomp);

Vec2 gradient(const Vec2 &u, const ElementWiseTerms &terms, const PhaseDecomposition &decomp);

Mat2 hessian(const Vec2 &u, const ElementWiseTerms &terms, const PhaseDecomposition &decomp);

/// Position-independent curvature bound, summed over BS antenna columns.
/// Dominates the Frobenius norm of hessian(u) for every u.
double xi_bound(const ElementWiseTerms &terms, const PhaseDecomposition &decomp);

CalculusBundle make_bundle(const Vec2 &anchor, double anchor_value,
                           const ElementWiseTerms &terms, const PhaseDecomposition &decomp);

/// Concave quadratic minorant anchored at bundle.anchor:
///   v0 + grad.(u - u0) - xi/2 ||u - u0||^2.
double surrogate(const Vec2 &u, const CalculusBundle &bundle);

} // namespace meris
