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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "meris/types.hpp"

namespace meris
{

/// Raised when a configuration value is invalid. key() names the offending
/// field using the snake_case spelling of the config file.
class ConfigError : public std::runtime_error
{
public:
    ConfigError(std::string key, const std::string &what)
        : std::runtime_error(key + ": " + what), key_(std::move(key)) {}

    const std::string &key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Physical and algorithmic parameters of one ME-RIS link.
///
/// Lengths are in meters, powers in watts, gains linear. All geometry on the
/// RIS is expressed in its local frame, whose origin is also the origin of the
/// global frame used for BS and user distances.
struct ScenarioConfig
{
    double wavelength = 0.1;
    int num_bs_antennas = 4; // M
    int num_elements = 4;    // N
    int paths_bs = 4;        // L_BS
    int paths_su = 4;        // L_SU
    double region_edge = 0.5;  // A, moving region is [-A/2, A/2]^2
    double min_distance = 0.05; // D0
    double p_max = 10.0;       // 40 dBm
    double sigma2 = 1e-11;     // -80 dBm
    double beta0 = 1e-3;       // -30 dB at 1 m
    double alpha0 = 2.2;
    Vec3 bs_position{-10.0, -5.0, 10.0};
    Vec3 user_region_center{20.0, -10.0, 20.0};
    double user_region_edge = 40.0;
    std::vector<Vec2> bs_antenna_positions; // empty: ULA on x with lambda/2 spacing

    double sca_epsilon = 1e-4;  // inner SCA stop, bits/s/Hz
    double ao_epsilon = 1e-4;   // outer AO stop, bits/s/Hz
    int max_inner_iters = 50;
    int max_outer_iters = 50;
    int position_passes = 1;
    int max_phase_sweeps = 100;
    double phase_tolerance = 1e-8; // relative objective increment per sweep
    int gda_max_iters = 200;
    double gda_initial_step = 0.1; // in wavelengths
    double gda_min_step = 1e-6;    // in wavelengths

    std::uint64_t rng_seed = 1;

    /// Defaults with A = 5 lambda and D0 = lambda / 2 for the given wavelength.
    static ScenarioConfig with_wavelength(double wavelength);

    /// BS antenna positions, resolving the ULA default.
    std::vector<Vec2> antenna_positions() const;

    /// Throws ConfigError naming the first invalid field.
    void validate() const;
};

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);
double db_to_linear(double db);

/// Largest count of points a square grid with pitch `spacing` can place
/// inside a square of edge `edge`.
long grid_capacity(double edge, double spacing);

} // namespace meris
