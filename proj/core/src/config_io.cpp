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
#include "meris/config_io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace meris
{

namespace
{

using nlohmann::json;

const std::set<std::string> top_keys{"kind", "grid", "trials", "methods", "seed", "mn_pairs", "scenario"};

const std::set<std::string> scenario_keys{
    "wavelength",     "m",                "n",               "l_bs",          "l_su",
    "a",              "d0",               "p_max",           "sigma2",        "beta0",
    "alpha0",         "bs_position",      "user_region_center", "user_region_edge",
    "bs_antenna_positions", "sca_epsilon", "ao_epsilon",     "max_inner_iters", "max_outer_iters",
    "position_passes", "max_phase_sweeps", "phase_tolerance", "gda_max_iters", "gda_initial_step",
    "gda_min_step",   "rng_seed"};

void reject_unknown(const json &obj, const std::set<std::string> &allowed, const std::string &prefix)
{
    for (const auto &item : obj.items())
        if (!allowed.contains(item.key()))
            throw ConfigError(prefix + item.key(), "unknown key");
}

double number(const json &v, const std::string &key)
{
    if (!v.is_number())
        throw ConfigError(key, "expected a number");
    return v.get<double>();
}

int integer(const json &v, const std::string &key)
{
    if (!v.is_number_integer())
        throw ConfigError(key, "expected an integer");
    const auto x = v.get<long long>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        throw ConfigError(key, "integer out of range");
    return static_cast<int>(x);
}

std::uint64_t unsigned64(const json &v, const std::string &key)
{
    if (v.is_number_unsigned())
        return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<long long>() >= 0)
        return static_cast<std::uint64_t>(v.get<long long>());
    throw ConfigError(key, "expected a non-negative integer");
}

Eigen::VectorXd fixed_vector(const json &v, const std::string &key, int size)
{
    if (!v.is_array() || static_cast<int>(v.size()) != size)
        throw ConfigError(key, "expected an array of " + std::to_string(size) + " numbers");
    Eigen::VectorXd out(size);
    for (int i = 0; i < size; ++i)
        out[i] = number(v[static_cast<std::size_t>(i)], key);
    return out;
}

ScenarioConfig parse_scenario(const json &obj)
{
    const std::string p = "scenario.";
    if (!obj.is_object())
        throw ConfigError("scenario", "expected an object");
    reject_unknown(obj, scenario_keys, p);

    double wavelength = 0.1;
    if (obj.contains("wavelength"))
        wavelength = number(obj["wavelength"], p + "wavelength");
    ScenarioConfig c = ScenarioConfig::with_wavelength(wavelength);

    auto num = [&](const char *key, double &field) {
        if (obj.contains(key))
            field = number(obj[key], p + key);
    };
    auto integ = [&](const char *key, int &field) {
        if (obj.contains(key))
            field = integer(obj[key], p + key);
    };
    integ("m", c.num_bs_antennas);
    integ("n", c.num_elements);
    integ("l_bs", c.paths_bs);
    integ("l_su", c.paths_su);
    num("a", c.region_edge);
    num("d0", c.min_distance);
    num("p_max", c.p_max);
    num("sigma2", c.sigma2);
    num("beta0", c.beta0);
    num("alpha0", c.alpha0);
    num("user_region_edge", c.user_region_edge);
    num("sca_epsilon", c.sca_epsilon);
    num("ao_epsilon", c.ao_epsilon);
    integ("max_inner_iters", c.max_inner_iters);
    integ("max_outer_iters", c.max_outer_iters);
    integ("position_passes", c.position_passes);
    integ("max_phase_sweeps", c.max_phase_sweeps);
    num("phase_tolerance", c.phase_tolerance);
    integ("gda_max_iters", c.gda_max_iters);
    num("gda_initial_step", c.gda_initial_step);
    num("gda_min_step", c.gda_min_step);
    if (obj.contains("rng_seed"))
        c.rng_seed = unsigned64(obj["rng_seed"], p + "rng_seed");
    if (obj.contains("bs_position"))
        c.bs_position = fixed_vector(obj["bs_position"], p + "bs_position", 3);
    if (obj.contains("user_region_center"))
        c.user_region_center = fixed_vector(obj["user_region_center"], p + "user_region_center", 3);
    if (obj.contains("bs_antenna_positions"))
    {
        const auto &arr = obj["bs_antenna_positions"];
        if (!arr.is_array())
            throw ConfigError(p + "bs_antenna_positions", "expected an array of [x, y] pairs");
        for (const auto &item : arr)
            c.bs_antenna_positions.emplace_back(fixed_vector(item, p + "bs_antenna_positions", 2));
    }
    return c;
}

} // namespace

ExperimentSpec default_experiment_spec(ExperimentKind kind)
{
    ExperimentSpec spec;
    spec.kind = kind;
    spec.scenario = ScenarioConfig::with_wavelength(0.1);
    spec.seed = 1;
    switch (kind)
    {
    case ExperimentKind::single_run:
        spec.trials = 1;
        spec.methods = {Method::proposed};
        break;
    case ExperimentKind::convergence:
        spec.trials = 100;
        spec.methods = {Method::proposed};
        spec.mn_pairs = {{4, 4}, {4, 8}, {8, 8}};
        break;
    case ExperimentKind::sweep_region:
        spec.trials = 100;
        spec.methods = {Method::proposed, Method::gda, Method::fpe};
        spec.grid = {1, 2, 3, 4, 5, 6, 7, 8};
        break;
    case ExperimentKind::sweep_power:
        spec.trials = 100;
        spec.methods = {Method::proposed, Method::gda, Method::fpe};
        spec.grid = {20, 25, 30, 35, 40};
        break;
    }
    return spec;
}

ExperimentSpec parse_experiment_spec(const std::string &json_text, std::optional<ExperimentKind> expected)
{
    json doc;
    try
    {
        doc = json::parse(json_text);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError("<document>", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ConfigError("<document>", "expected a JSON object");
    reject_unknown(doc, top_keys, "");

    ExperimentKind kind = expected.value_or(ExperimentKind::single_run);
    if (doc.contains("kind"))
    {
        if (!doc["kind"].is_string())
            throw ConfigError("kind", "expected a string");
        auto parsed = parse_kind(doc["kind"].get<std::string>());
        if (!parsed)
            throw ConfigError("kind", "must be one of convergence, sweep_region, sweep_power, single_run");
        if (expected && *parsed != *expected)
            throw ConfigError("kind", "does not match the requested experiment " + std::string(to_string(*expected)));
        kind = *parsed;
    }
    ExperimentSpec spec = default_experiment_spec(kind);

    if (doc.contains("scenario"))
        spec.scenario = parse_scenario(doc["scenario"]);
    if (doc.contains("trials"))
        spec.trials = integer(doc["trials"], "trials");
    if (doc.contains("seed"))
        spec.seed = unsigned64(doc["seed"], "seed");
    if (doc.contains("grid"))
    {
        if (!doc["grid"].is_array())
            throw ConfigError("grid", "expected an array of numbers");
        spec.grid.clear();
        for (const auto &v : doc["grid"])
            spec.grid.push_back(number(v, "grid"));
    }
    if (doc.contains("methods"))
    {
        if (!doc["methods"].is_array())
            throw ConfigError("methods", "expected an array of method names");
        spec.methods.clear();
        for (const auto &v : doc["methods"])
        {
            auto m = v.is_string() ? parse_method(v.get<std::string>()) : std::nullopt;
            if (!m)
                throw ConfigError("methods", "entries must be proposed, gda or fpe");
            spec.methods.push_back(*m);
        }
    }
    if (doc.contains("mn_pairs"))
    {
        if (!doc["mn_pairs"].is_array())
            throw ConfigError("mn_pairs", "expected an array of [m, n] pairs");
        spec.mn_pairs.clear();
        for (const auto &v : doc["mn_pairs"])
        {
            if (!v.is_array() || v.size() != 2)
                throw ConfigError("mn_pairs", "expected [m, n] pairs");
            spec.mn_pairs.emplace_back(integer(v[0], "mn_pairs"), integer(v[1], "mn_pairs"));
        }
    }

    try
    {
        spec.validate();
    }
    catch (const ConfigError &e)
    {
        if (top_keys.contains(e.key()))
            throw;
        throw ConfigError("scenario." + e.key(), std::string(e.what()).substr(e.key().size() + 2));
    }
    return spec;
}

ExperimentSpec load_experiment_spec(const std::filesystem::path &path, std::optional<ExperimentKind> expected)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_experiment_spec(buf.str(), expected);
}

} // namespace meris
