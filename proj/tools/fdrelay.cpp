// SPDX-License-Identifier: Apache-2.0
//
// fdrelay - link-level simulator for wirelessly powered full-duplex MIMO relays
// Copyright (C) 2026 The fdrelay authors
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


// fdrelay command line: outage / throughput sweeps and the validation suite.
//
// Exit status: 0 success, 1 at least one validation check failed, 2 bad
// configuration or arguments.

#include "fdrelay/error.hpp"
#include "fdrelay/expcli/config.hpp"
#include "fdrelay/expcli/runner.hpp"
#include "fdrelay/expcli/table.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace
{

namespace ex = fdrelay::expcli;

struct Overrides
{
    std::string config;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<int> threads;
};

void add_common(CLI::App *cmd, Overrides &o)
{
    cmd->add_option("--config", o.config, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", o.out, "output CSV path (overrides output_path)");
    cmd->add_option("--seed", o.seed, "base seed (overrides seed)");
    cmd->add_option("--trials", o.trials, "Monte Carlo trials per point (overrides n_trials)");
    cmd->add_option("--threads", o.threads, "worker threads, 0 = all cores (overrides threads)")
        ->check(CLI::NonNegativeNumber);
}

ex::ExperimentConfig resolve(const Overrides &o)
{
    ex::ExperimentConfig cfg = ex::load_config(o.config);
    if (o.out)
        cfg.output_path = *o.out;
    if (o.seed)
        cfg.seed = *o.seed;
    if (o.trials)
        cfg.n_trials = *o.trials;
    if (o.threads)
        cfg.threads = *o.threads;
    cfg.validate();
    return cfg;
}

void emit(const ex::Table &table, const ex::ExperimentConfig &cfg)
{
    const std::filesystem::path path(cfg.output_path);
    ex::write_text(path, ex::to_csv(table));
    if (cfg.json_mirror)
    {
        std::filesystem::path mirror = path;
        mirror.replace_extension(".json");
        ex::write_text(mirror, ex::to_json(table));
    }
    std::cerr << "wrote " << table.rows.size() << " rows to " << path.string() << "\n";
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"fdrelay: wirelessly powered full-duplex MIMO relay simulator"};
    app.set_version_flag("--version", ex::tool_version());
    app.require_subcommand(1);

    Overrides outage, throughput, validate;
    add_common(app.add_subcommand("outage", "outage probability sweep (Monte Carlo, analytic, asymptotic)"), outage);
    add_common(app.add_subcommand("throughput", "delay-constrained throughput over an alpha grid"), throughput);
    add_common(app.add_subcommand("validate", "run the validation suite and write its report"), validate);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return 2;
    }

    try
    {
        if (app.got_subcommand("outage"))
        {
            const auto cfg = resolve(outage);
            emit(ex::run_outage_sweep(cfg), cfg);
            return 0;
        }
        if (app.got_subcommand("throughput"))
        {
            const auto cfg = resolve(throughput);
            emit(ex::run_throughput_sweep(cfg), cfg);
            return 0;
        }
        const auto cfg = resolve(validate);
        const ex::ValidationReport report = ex::run_validation(cfg);
        ex::Table table = report.to_table();
        ex::stamp(table, cfg, "validate");
        emit(table, cfg);
        int failed = 0;
        for (const auto &c : report.checks)
            if (!c.pass)
            {
                ++failed;
                std::cerr << "FAIL " << c.name << ": " << ex::format_cell(c.measured) << " vs "
                          << ex::format_cell(c.expected) << " (bound " << ex::format_cell(c.bound) << ") "
                          << c.detail << "\n";
            }
        std::cerr << report.checks.size() - failed << "/" << report.checks.size() << " checks passed\n";
        return failed == 0 ? 0 : 1;
    }
    catch (const fdrelay::ConfigError &e)
    {
        std::cerr << "fdrelay: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception &e)
    {
        // Domain and feasibility errors raised by config values.
        std::cerr << "fdrelay: " << e.what() << "\n";
        return 2;
    }
}
