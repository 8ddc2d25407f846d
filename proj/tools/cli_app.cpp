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
#include "cli_app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "meris/config_io.hpp"
#include "meris/oracles.hpp"
#include "plot.hpp"

namespace meris::cli
{

namespace fs = std::filesystem;

namespace
{

struct Options
{
    std::string config;
    std::string out_dir = "results";
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    bool plot = false;
    bool quiet = false;
};

// Write through a temporary so that readers never see a partial file.
void write_file(const fs::path &path, const std::string &content)
{
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot write " + tmp.string());
        f << content;
        if (!f)
            throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

int run_experiment_command(ExperimentKind kind, const Options &opt, std::ostream &out, std::ostream &err)
{
    ExperimentSpec spec;
    unsigned threads = 1;
    try
    {
        spec = opt.config.empty() ? default_experiment_spec(kind) : load_experiment_spec(opt.config, kind);
        if (opt.seed)
            spec.seed = *opt.seed;
        if (opt.trials)
            spec.trials = *opt.trials;
        spec.validate();
        threads = thread_count_from_env();
    }
    catch (const ConfigError &e)
    {
        err << "config error [" << e.key() << "]: " << e.what() << '\n';
        return exit_config;
    }

    const ExperimentResult result = run_experiment(spec, threads);
    fs::create_directories(opt.out_dir);
    const std::string stem(to_string(kind));
    const fs::path csv_path = fs::path(opt.out_dir) / (stem + ".csv");
    write_file(csv_path, to_csv(result));
    if (!opt.quiet)
        out << "wrote " << csv_path.string() << '\n';

    if (opt.plot)
    {
        if (auto svg = render_svg(plot_data(result)))
        {
            const fs::path svg_path = fs::path(opt.out_dir) / (stem + ".svg");
            write_file(svg_path, *svg);
            if (!opt.quiet)
                out << "wrote " << svg_path.string() << '\n';
        }
        else
            err << "warning: empty result table, no plot written\n";
    }

    if (result.failures > 0)
        err << "warning: " << result.failures << " trial(s) failed and were excluded\n";
    if (!opt.quiet)
        for (const auto &row : result.rows)
            out << "  " << row.grid_value << ' ' << to_string(row.method) << " mean_rate=" << row.mean_rate
                << " stderr=" << row.stderr_rate << " trials=" << row.trials << '\n';
    return exit_ok;
}

int run_selftest_command(const Options &opt, std::ostream &out, std::ostream &err)
{
    ScenarioConfig scenario;
    std::uint64_t seed = 1;
    try
    {
        if (!opt.config.empty())
        {
            const auto spec = load_experiment_spec(opt.config);
            scenario = spec.scenario;
            seed = spec.seed;
        }
        if (opt.seed)
            seed = *opt.seed;
    }
    catch (const ConfigError &e)
    {
        err << "config error [" << e.key() << "]: " << e.what() << '\n';
        return exit_config;
    }
    std::ostringstream sink;
    const auto report = oracle::run_selftest(scenario, seed, opt.quiet ? sink : out);
    if (opt.quiet)
        out << "selftest: " << report.passed << " passed, " << report.failed << " failed\n";
    return report.failed == 0 ? exit_ok : exit_runtime;
}

} // namespace

unsigned thread_count_from_env()
{
    const char *env = std::getenv("ME_RIS_THREADS");
    if (env == nullptr || *env == '\0')
        return std::max(1u, std::thread::hardware_concurrency());
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1)
        throw ConfigError("ME_RIS_THREADS", "must be a positive integer");
    return static_cast<unsigned>(v);
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Rate optimization experiments for movable-element RIS links"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Options opt;
    app.add_option("--config", opt.config, "JSON experiment/scenario file");
    app.add_option("--out", opt.out_dir, "Output directory (created if absent)");
    app.add_option("--seed", opt.seed, "Override the experiment seed");
    app.add_option("--trials", opt.trials, "Override the trial count");
    app.add_flag("--plot", opt.plot, "Also write an SVG plot");
    app.add_flag("--quiet", opt.quiet, "Only print errors and warnings");

    struct Entry
    {
        const char *name;
        const char *help;
        std::optional<ExperimentKind> kind;
    };
    const Entry entries[] = {
        {"convergence", "Rate versus AO iteration", ExperimentKind::convergence},
        {"sweep-region", "Rate versus moving-region size A / lambda", ExperimentKind::sweep_region},
        {"sweep-power", "Rate versus BS power in dBm", ExperimentKind::sweep_power},
        {"single-run", "One realization, one method, full trace", ExperimentKind::single_run},
        {"selftest", "Run the derived-oracle checks", std::nullopt},
    };
    std::vector<CLI::App *> subs;
    for (const auto &e : entries)
        subs.push_back(app.add_subcommand(e.name, e.help));

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &)
    {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::ParseError &e)
    {
        err << e.what() << '\n';
        return exit_config;
    }

    try
    {
        for (std::size_t i = 0; i < subs.size(); ++i)
        {
            if (!subs[i]->parsed())
                continue;
            if (!entries[i].kind)
                return run_selftest_command(opt, out, err);
            return run_experiment_command(*entries[i].kind, opt, out, err);
        }
    }
    catch (const ConfigError &e)
    {
        err << "config error [" << e.key() << "]: " << e.what() << '\n';
        return exit_config;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return exit_runtime;
    }
    return exit_runtime;
}

} // namespace meris::cli
