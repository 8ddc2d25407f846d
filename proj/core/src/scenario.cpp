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
#include "meris/scenario.hpp"

#include <cmath>

namespace meris
{

ScenarioConfig ScenarioConfig::with_wavelength(double wavelength)
{
    ScenarioConfig config;
    config.wavelength = wavelength;
    config.region_edge = 5.0 * wavelength;
    config.min_distance = 0.5 * wavelength;
    return config;
}

std::vector<Vec2> ScenarioConfig::antenna_positions() const
{
    if (!bs_antenna_positions.empty())
        return bs_antenna_positions;
    std::vector<Vec2> ula;
    ula.reserve(static_cast<std::size_t>(num_bs_antennas));
    for (int m = 0; m < num_bs_antennas; ++m)
        ula.emplace_back(0.5 * wavelength * m, 0.0);
    return ula;
}

long grid_capacity(double edge, double spacing)
{
    if (spacing <= 0.0)
        return 0;
    // Small slack so that an edge that is an exact multiple of the pitch counts.
    const long per_side = static_cast<long>(std::floor(edge / spacing * (1.0 + 1e-12))) + 1;
    return per_side * per_side;
}

void ScenarioConfig::validate() const
{
    auto require = [](bool ok, const char *key, const char *what) {
        if (!ok)
            throw ConfigError(key, what);
    };
    require(std::isfinite(wavelength) && wavelength > 0.0, "wavelength", "must be > 0");
    require(num_bs_antennas >= 1, "m", "must be >= 1");
    require(num_elements >= 1, "n", "must be >= 1");
    require(paths_bs >= 1, "l_bs", "must be >= 1");
    require(paths_su >= 1, "l_su", "must be >= 1");
    require(std::isfinite(region_edge) && region_edge > 0.0, "a", "must be > 0");
    require(std::isfinite(min_distance) && min_distance > 0.0, "d0", "must be > 0");
    require(std::isfinite(p_max) && p_max > 0.0, "p_max", "must be > 0");
    require(std::isfinite(sigma2) && sigma2 > 0.0, "sigma2", "must be > 0");
    require(std::isfinite(beta0) && beta0 > 0.0, "beta0", "must be > 0");
    require(std::isfinite(alpha0) && alpha0 >= 0.0, "alpha0", "must be >= 0");
    require(std::isfinite(user_region_edge) && user_region_edge >= 0.0, "user_region_edge", "must be >= 0");
    require(bs_position.allFinite() && bs_position.norm() > 0.0, "bs_position",
            "must be finite and away from the RIS origin");
    require(user_region_center.allFinite(), "user_region_center", "must be finite");
    require(bs_antenna_positions.empty() ||
                bs_antenna_positions.size() == static_cast<std::size_t>(num_bs_antennas),
            "bs_antenna_positions", "must list exactly m positions");
    require(sca_epsilon > 0.0, "sca_epsilon", "must be > 0");
    require(ao_epsilon > 0.0, "ao_epsilon", "must be > 0");
    require(max_inner_iters >= 1, "max_inner_iters", "must be >= 1");
    require(max_outer_iters >= 1, "max_outer_iters", "must be >= 1");
    require(position_passes >= 1, "position_passes", "must be >= 1");
    require(max_phase_sweeps >= 1, "max_phase_sweeps", "must be >= 1");
    require(phase_tolerance > 0.0, "phase_tolerance", "must be > 0");
    require(gda_max_iters >= 1, "gda_max_iters", "must be >= 1");
    require(gda_initial_step > 0.0, "gda_initial_step", "must be > 0");
    require(gda_min_step > 0.0 && gda_min_step <= gda_initial_step, "gda_min_step",
            "must be in (0, gda_initial_step]");
    require(grid_capacity(region_edge, min_distance) >= num_elements, "n",
            "moving region cannot host n elements at spacing d0");
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

} // namespace meris
