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

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "meris/calculus.hpp"
#include "meris/oracles.hpp"

#include <Eigen/Eigenvalues>
#include <random>

using namespace meris;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

struct Setup
{
    ChannelRealization chan;
    ElementPositions U;
    PhaseVector q;
    ElementWiseTerms terms;
    PhaseDecomposition decomp;
};

Setup two_element_single_path()
{
    Setup s;
    s.chan = fixtures::single_path_channel(0.1);
    s.U = ElementPositions({Vec2(0.0, 0.0), Vec2(0.07, -0.02)});
    s.q = PhaseVector(RVector::Constant(2, 0.9));
    s.terms = elementwise_terms(s.U, s.q, s.chan, 0);
    s.decomp = phase_decomposition(s.chan.angles);
    return s;
}

} // namespace

TEST_CASE("Calculus - lone element has no coupling")
{
    std::mt19937_64 rng(1);
    const auto chan = oracle::random_channel(rng, {1, 3, 4, 2, 0.1});
    const auto t = elementwise_terms(ElementPositions({Vec2(0.1, 0.1)}), PhaseVector(1), chan, 0);
    const auto d = phase_decomposition(chan.angles);
    CHECK(gradient(Vec2(0.02, -0.3), t, d) == Vec2::Zero());
    CHECK(hessian(Vec2(0.02, -0.3), t, d) == Mat2::Zero());
    CHECK(xi_bound(t, d) == 0.0);
}

TEST_CASE("Calculus - direction-independent phases give zero gradient")
{
    std::mt19937_64 rng(2);
    auto chan = oracle::random_channel(rng, {3, 2, 2, 2, 0.1});
    chan.angles.theta_su = RVector::Constant(2, 0.4);
    chan.angles.phi_su = RVector::Constant(2, -0.6);
    chan.angles.theta_bs_s = chan.angles.theta_su;
    chan.angles.phi_bs_s = chan.angles.phi_su;
    const auto U = oracle::random_positions(rng, 3, 0.5, 0.05);
    const auto q = oracle::random_phases(rng, 3);
    const auto t = elementwise_terms(U, q, chan, 1);
    const auto d = phase_decomposition(chan.angles);
    CHECK(gradient(Vec2(0.11, 0.05), t, d).norm() == 0.0);
    CHECK(hessian(Vec2(0.11, 0.05), t, d).norm() == 0.0);
}

TEST_CASE("Calculus - gradient and Hessian match finite differences")
{
    const auto grad = oracle::check_gradient(101, 100, 0.1, 1e-5);
    INFO("worst relative error " << grad.worst);
    CHECK(grad.ok());
    const auto hess = oracle::check_hessian(102, 100, 0.1, 1e-4);
    INFO("worst relative error " << hess.worst);
    CHECK(hess.ok());
}

TEST_CASE("Calculus - coupling function matches the loop oracle")
{
    std::mt19937_64 rng(4);
    const auto chan = oracle::random_channel(rng, {4, 2, 3, 3, 0.1});
    const auto U = oracle::random_positions(rng, 4, 0.5, 0.05);
    const auto q = oracle::random_phases(rng, 4);
    const auto t = elementwise_terms(U, q, chan, 2);
    const auto d = phase_decomposition(chan.angles);
    for (double x : {-0.2, 0.0, 0.13})
    {
        const Vec2 u(x, 0.5 * x + 0.01);
        CHECK_THAT(coupling_value(u, t, d), WithinRel(oracle::naive_coupling(u, 2, U, q, chan), 1e-10));
    }
}

TEST_CASE("Calculus - single path Hessian is rank one")
{
    const auto s = two_element_single_path();
    const double scale = 8.0 * pi * pi * s.terms.c_abs[0] * s.terms.a_abs[0] * s.terms.b_abs(0, 0) / (0.1 * 0.1);
    const double z = s.decomp.zeta(0, 0), mu = s.decomp.mu(0, 0);
    for (const Vec2 &u : {Vec2(0.0, 0.0), Vec2(0.12, -0.03), Vec2(-0.2, 0.2)})
    {
        const double cs = std::cos(s.terms.c_arg[0] - term_phase(u, 0, 0, 0, s.terms, s.decomp));
        Eigen::SelfAdjointEigenSolver<Mat2> eig(hessian(u, s.terms, s.decomp));
        const double expected = -scale * (z * z + mu * mu) * cs;
        const double lo = std::min(0.0, expected), hi = std::max(0.0, expected);
        CHECK_THAT(eig.eigenvalues()[0], WithinAbs(lo, 1e-9 * scale));
        CHECK_THAT(eig.eigenvalues()[1], WithinAbs(hi, 1e-9 * scale));
    }
    CHECK_THAT(xi_bound(s.terms, s.decomp), WithinRel(scale * (z * z + mu * mu), 1e-12));
}

TEST_CASE("Calculus - xi bounds the Hessian Frobenius norm")
{
    const auto stats = oracle::check_xi_bound(103, 20, 200, 0.1);
    INFO("largest ratio " << stats.worst);
    CHECK(stats.ok());
}

TEST_CASE("Calculus - surrogate is tangent and minorizes")
{
    const auto s = two_element_single_path();
    const Vec2 anchor(0.05, 0.1);
    const auto b = make_bundle(anchor, coupling_value(anchor, s.terms, s.decomp), s.terms, s.decomp);
    CHECK(surrogate(anchor, b) == b.anchor_value);

    CalculusBundle flat = b;
    flat.grad = Vec2::Zero();
    double prev = surrogate(anchor, flat);
    for (int i = 1; i <= 10; ++i)
    {
        const double v = surrogate(anchor + 0.01 * i * Vec2(0.6, 0.8), flat);
        CHECK(v < prev);
        prev = v;
    }

    const auto stats = oracle::check_surrogate(104, 20, 200, 0.1);
    CHECK(stats.ok());
}
