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
#include "meris/geometry.hpp"
#include "meris/oracles.hpp"

#include <random>

using namespace meris;
using Catch::Matchers::WithinAbs;

TEST_CASE("Geometry - propagation delta")
{
    const PathAngles angles = fixtures::unit_channel(1, 1, 1, 0.1, 0.4).angles;
    CHECK(propagation_delta_bs(Vec2::Zero(), 0, angles) == 0.0);
    CHECK(propagation_delta(Vec2::Zero(), -1.2, 0.9) == 0.0);
    CHECK_THAT(propagation_delta(Vec2(0.5, 0.0), 0.0, pi / 2), WithinAbs(0.5, 1e-15));
    CHECK_THAT(propagation_delta(Vec2(0.3, 0.4), pi / 2, 0.1), WithinAbs(0.4, 1e-15));
    CHECK_THAT(propagation_delta(Vec2(0.3, 0.4), pi / 2, -1.4), WithinAbs(0.4, 1e-15));
}

TEST_CASE("Geometry - BS field-response matrix")
{
    auto chan = fixtures::unit_channel(3, 2, 1, 0.1, 0.3);
    chan.angles.phi_bs_b << 0.2, -1.0;

    ScenarioConfig cfg;
    cfg.num_bs_antennas = 3;
    cfg.bs_antenna_positions = {Vec2::Zero(), Vec2::Zero(), Vec2::Zero()};
    const CMatrix ones = build_bs_frm(cfg, chan.angles);
    REQUIRE(ones.rows() == 2);
    REQUIRE(ones.cols() == 3);
    CHECK((ones - CMatrix::Ones(2, 3)).norm() < 1e-15);

    ScenarioConfig one;
    one.num_bs_antennas = 1;
    one.bs_antenna_positions = {Vec2(0.5 * one.wavelength, 0.0)};
    auto single = fixtures::unit_channel(1, 1, 1, one.wavelength);
    single.angles.theta_bs_b[0] = 0.0;
    single.angles.phi_bs_b[0] = pi / 2;
    const CMatrix e = build_bs_frm(one, single.angles);
    CHECK_THAT(e(0, 0).real(), WithinAbs(-1.0, 1e-12));
    CHECK_THAT(e(0, 0).imag(), WithinAbs(0.0, 1e-12));

    // Default geometry is a half-wavelength ULA.
    const auto ula = ScenarioConfig().antenna_positions();
    REQUIRE(ula.size() == 4);
    CHECK_THAT((ula[1] - ula[0]).norm(), WithinAbs(0.05, 1e-15));
}

TEST_CASE("Geometry - field-response vectors")
{
    auto chan = fixtures::unit_channel(1, 3, 2, 1.0, 0.7);
    CHECK((frv_incident(Vec2::Zero(), chan.angles, 1.0) - CVector::Ones(3)).norm() == 0.0);
    CHECK((frv_reflect(Vec2::Zero(), chan.angles, 1.0) - CVector::Ones(2)).norm() == 0.0);

    auto one = fixtures::unit_channel(1, 1, 1, 1.0);
    one.angles.theta_bs_s[0] = 0.0;
    one.angles.phi_bs_s[0] = pi / 2;
    const CVector f_in = frv_incident(Vec2(0.25, 0.0), one.angles, 1.0);
    CHECK_THAT(f_in[0].real(), WithinAbs(0.0, 1e-12));
    CHECK_THAT(f_in[0].imag(), WithinAbs(1.0, 1e-12));

    one.angles.theta_su[0] = pi / 2;
    const CVector f = frv_reflect(Vec2(0.0, 0.5), one.angles, 1.0);
    CHECK_THAT(f[0].real(), WithinAbs(-1.0, 1e-12));
    CHECK_THAT(f[0].imag(), WithinAbs(0.0, 1e-12));

    std::mt19937_64 rng(3);
    const auto rnd = oracle::random_channel(rng, {3, 2, 5, 4, 0.1});
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (int i = 0; i < 50; ++i)
    {
        const Vec2 u(coord(rng), coord(rng));
        CHECK((frv_incident(u, rnd.angles, 0.1).cwiseAbs().array() - 1.0).abs().maxCoeff() < 1e-14);
        CHECK((frv_reflect(u, rnd.angles, 0.1).cwiseAbs().array() - 1.0).abs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("Geometry - channel counting examples")
{
    const auto chan = fixtures::unit_channel(3, 4, 5, 0.1);
    const ElementPositions one({Vec2::Zero()});
    const CMatrix H = channel_bs_ris(one, chan);
    REQUIRE(H.rows() == 1);
    REQUIRE(H.cols() == 3);
    CHECK((H - CMatrix::Constant(1, 3, 4.0)).norm() < 1e-12);

    const CRowVector g = channel_ris_user(one, chan);
    REQUIRE(g.size() == 1);
    CHECK(std::abs(g[0] - cdouble(5.0)) < 1e-12);
}

TEST_CASE("Geometry - user channel with selector path response")
{
    std::mt19937_64 rng(11);
    auto chan = oracle::random_channel(rng, {3, 2, 2, 4, 0.1});
    chan.sigma_s = CRowVector::Zero(4);
    chan.sigma_s[0] = 1.0;
    const ElementPositions U({Vec2(0.03, -0.1), Vec2(-0.12, 0.07), Vec2(0.2, 0.2)});
    const CRowVector g = channel_ris_user(U, chan);
    for (std::size_t n = 0; n < U.size(); ++n)
        CHECK(std::abs(g[static_cast<Eigen::Index>(n)] - frv_reflect(U[n], chan.angles, 0.1)[0]) < 1e-14);
}

TEST_CASE("Geometry - matrix channels agree with loop oracle")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i)
    {
        const oracle::Dims d{1 + i % 6, 1 + i % 4, 1 + (i * 7) % 5, 1 + (i * 3) % 6, 0.1};
        const auto chan = oracle::random_channel(rng, d);
        const auto U = oracle::random_positions(rng, d.n, 0.5, 0.05);
        const CMatrix H = channel_bs_ris(U, chan), Hn = oracle::naive_channel_bs_ris(U, chan);
        const CRowVector g = channel_ris_user(U, chan), gn = oracle::naive_channel_ris_user(U, chan);
        CHECK((H - Hn).norm() <= 1e-10 * Hn.norm());
        CHECK((g - gn).norm() <= 1e-10 * gn.norm());
    }
}

TEST_CASE("Geometry - element position feasibility")
{
    ElementPositions U({Vec2(-0.25, 0.0), Vec2(-0.2, 0.0), Vec2(0.25, 0.25)});
    CHECK_THAT(U.min_pairwise_distance(), WithinAbs(0.05, 1e-15));
    CHECK(U.feasible(0.5, 0.05));
    CHECK_FALSE(U.feasible(0.5, 0.06));
    U[2] = Vec2(0.26, 0.0);
    CHECK_FALSE(U.feasible(0.5, 0.05));
    CHECK(ElementPositions({Vec2::Zero()}).feasible(0.0, 1.0));
}

TEST_CASE("Geometry - path angle validation")
{
    auto angles = fixtures::unit_channel(1, 2, 3, 0.1, 0.5).angles;
    CHECK(angles.valid());
    angles.phi_su[1] = 2.0;
    CHECK_FALSE(angles.valid());
    angles = fixtures::unit_channel(1, 2, 3, 0.1).angles;
    angles.theta_bs_s.resize(1);
    CHECK_FALSE(angles.valid());
}
