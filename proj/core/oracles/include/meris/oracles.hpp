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

// Reference computations that check the library from an independent route:
// explicit index loops, finite differences, dense grid search and exhaustive
// phase scans. Nothing here calls the routine it is meant to verify.

#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "meris/ao_engine.hpp"

namespace meris::oracle
{

struct Dims
{
    int n = 4;
    int m = 4;
    int l_bs = 4;
    int l_su = 4;
    double wavelength = 0.1;
};

/// Random angles in [-pi/2, pi/2], CN(0, 1) path gains, ULA at the BS.
ChannelRealization random_channel(std::mt19937_64 &rng, const Dims &dims);

/// N positions in [-A/2, A/2]^2 with pairwise distance >= d0 (rejection sampling).
ElementPositions random_positions(std::mt19937_64 &rng, int n, double region_edge, double min_distance);

PhaseVector random_phases(std::mt19937_64 &rng, int n);

/// H[n][m] = sum_j conj(exp(i k rho_in^j(u_n))) sigma_j E[j][m] by explicit loops.
CMatrix naive_channel_bs_ris(const ElementPositions &U, const ChannelRealization &chan);

/// g[n] = sum_k sigma_S[k] exp(i k rho_S^k(u_n)) by explicit loops.
CRowVector naive_channel_ris_user(const ElementPositions &U, const ChannelRealization &chan);

/// diag(g) H from the two loop oracles.
CMatrix naive_cascaded(const ElementPositions &U, const ChannelRealization &chan);

/// ||q^H V||^2 by loops over the naive cascaded matrix.
double naive_gain(const ElementPositions &U, const PhaseVector &phases, const ChannelRealization &chan);

/// Coupling function of element n with u substituted for u_n:
/// sum_m |c^m|^2 + 2 Re(s^m(u) conj(c^m)), s = exp(i theta_n) v(u).
double naive_coupling(const Vec2 &u, std::size_t n, const ElementPositions &U, const PhaseVector &phases,
                      const ChannelRealization &chan);

Vec2 fd_gradient(const std::function<double(const Vec2 &)> &f, const Vec2 &u, double h);
Mat2 fd_jacobian(const std::function<Vec2(const Vec2 &)> &f, const Vec2 &u, double h);

struct GridResult
{
    double best_value = 0.0;
    Vec2 best_point = Vec2::Zero();
    long feasible_points = 0;
    double cell_gap = 0.0; // largest objective change across one grid cell
};

/// Dense resolution x resolution search of max grad.(u-u0) - xi/2|u-u0|^2
/// over the box intersected with the halfspaces.
GridResult qp_grid_search(const QpProblem &problem, int resolution);

/// Best of |exp(i t) v + r|^2 over `steps` equally spaced t in [0, 2pi).
double phase_scan(const CRowVector &v, const CRowVector &r, int steps, double *best_theta = nullptr);

/// Largest |h w|^2 over random w with ||w||^2 <= p.
double random_beam_best(std::mt19937_64 &rng, const CRowVector &h, double p, int draws);

/// Outcome of one sampled property check.
struct CheckStats
{
    long samples = 0;
    long violations = 0;
    double worst = 0.0; // largest observed error metric
    bool ok() const { return samples > 0 && violations == 0; }
};

/// Closed-form gradient vs central differences (step 1e-6 lambda) of the
/// coupling function; relative error must stay below `tol`.
CheckStats check_gradient(std::uint64_t seed, int samples, double wavelength, double tol);

/// Closed-form Hessian vs central differences of gradient().
CheckStats check_hessian(std::uint64_t seed, int samples, double wavelength, double tol);

/// xi_bound() >= ||hessian(u)||_F at `points` random u for each instance.
CheckStats check_xi_bound(std::uint64_t seed, int instances, int points, double wavelength);

/// Tangency at the anchor (abs error <= 1e-12 relative to scale) and the
/// descent-lemma minorization of the coupling function at sampled points.
CheckStats check_surrogate(std::uint64_t seed, int anchors, int points, double wavelength);

/// solve_surrogate_qp() vs dense grid search (N <= 6).
CheckStats check_qp(std::uint64_t seed, int instances, int resolution, double wavelength);

/// MRT value is never beaten by random feasible beams.
CheckStats check_mrt(std::uint64_t seed, int channels, int draws);

/// M = 1: converged ||q^H V||^2 equals (sum_n |v_n|)^2 within 1e-6 relative.
CheckStats check_passive_rank_one(std::uint64_t seed, int instances);

/// Channel builders vs the explicit-loop oracles, 1e-10 relative.
CheckStats check_channel_loops(std::uint64_t seed, int instances, double wavelength);

struct SelftestReport
{
    int passed = 0;
    int failed = 0;
    std::vector<std::string> lines;
};

/// Derived-oracle suite: channel loop oracles, finite-difference gradient and
/// Hessian, xi bound sampling, QP grid oracle, MRT dominance and the rank-one
/// passive optimum. Writes one line per check to `log`.
SelftestReport run_selftest(const ScenarioConfig &config, std::uint64_t seed, std::ostream &log);

} // namespace meris::oracle
