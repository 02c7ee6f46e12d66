// SPDX-License-Identifier: Apache-2.0
//
// symrad: link-level simulator for cell-free symbiotic radio
// Copyright (C) 2026 symrad contributors
//
// Command-line front end: run / sweep / check / dbm. Exit codes: 0 success,
// 1 configuration error, 2 runtime error. stdout carries the summary table,
// stderr everything else.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symrad/io.hpp"

namespace {

struct CommonOpts
{
    std::string config_path;
    std::string out_path = "symrad_results.csv";
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t workers = 0;
    bool workers_given = false;
    bool emit_plot = false;
};

void add_common(CLI::App *cmd, CommonOpts &opts, bool with_outputs)
{
    cmd->add_option("--config", opts.config_path,
                    "JSON scenario config (defaults used when omitted)");
    if (with_outputs)
    {
        cmd->add_option("--out", opts.out_path, "output CSV path")
            ->capture_default_str();
        cmd->add_option("--seed", opts.seed, "override the config seed")
            ->each([&](const std::string &) { opts.seed_given = true; });
        cmd->add_option("--workers", opts.workers,
                        "worker threads (0 = hardware concurrency; overrides "
                        "SYMRAD_WORKERS)")
            ->each([&](const std::string &) { opts.workers_given = true; });
        cmd->add_flag("--emit-plot", opts.emit_plot,
                      "also write a matplotlib script next to the CSV");
    }
}

symrad::ScenarioConfig load_or_default(const CommonOpts &opts)
{
    symrad::ScenarioConfig cfg = opts.config_path.empty()
                                     ? symrad::default_config()
                                     : symrad::load_config(opts.config_path);
    if (opts.seed_given)
        cfg.seed = opts.seed;
    symrad::validate_config(cfg);
    return cfg;
}

std::size_t resolve_workers(const CommonOpts &opts)
{
    if (opts.workers_given)
        return opts.workers;
    if (const char *env = std::getenv("SYMRAD_WORKERS"))
    {
        char *end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0')
            throw symrad::ConfigError("SYMRAD_WORKERS must be a nonnegative integer");
        return static_cast<std::size_t>(v);
    }
    return 0;
}

std::string stem(const std::string &path)
{
    const auto dot = path.find_last_of('.');
    const auto slash = path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path;
    return path.substr(0, dot);
}

void print_summary(const std::vector<symrad::LabeledRegion> &regions)
{
    std::printf("%-10s %12s %8s %18s %20s %20s\n", "param", "value", "trials",
                "primary@rho=1", "primary@rho=0", "secondary@rho=0");
    for (const auto &lr : regions)
    {
        const auto &rr = lr.region;
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 0; i < rr.rho_grid.size(); ++i)
        {
            if (rr.rho_grid[i] < rr.rho_grid[lo])
                lo = i;
            if (rr.rho_grid[i] > rr.rho_grid[hi])
                hi = i;
        }
        std::printf("%-10s %12g %8zu %18.6g %20.6g %20.6g\n", lr.param.c_str(),
                    lr.value, rr.num_trials, rr.mean_primary_bound[hi],
                    rr.mean_primary_bound[lo], rr.mean_secondary_bound[lo]);
    }
}

void write_outputs(const std::vector<symrad::LabeledRegion> &regions,
                   const symrad::ScenarioConfig &cfg, const CommonOpts &opts,
                   double wall_seconds)
{
    symrad::emit_csv(regions, cfg, opts.out_path);
    symrad::RunManifest manifest;
    manifest.config_digest = symrad::config_digest(cfg);
    manifest.version = symrad::tool_version;
    manifest.wall_seconds = wall_seconds;
    manifest.output_paths.push_back(opts.out_path);
    if (opts.emit_plot)
    {
        const std::string plot_path = stem(opts.out_path) + "_plot.py";
        symrad::emit_plot_script(opts.out_path, plot_path);
        manifest.output_paths.push_back(plot_path);
        std::cerr << "plot script: " << plot_path << "\n";
    }
    const std::string manifest_path = stem(opts.out_path) + "_manifest.json";
    symrad::write_manifest(manifest, manifest_path);
    std::cerr << "csv: " << opts.out_path << "\nmanifest: " << manifest_path << "\n";
}

std::vector<double> parse_values(const std::string &csv)
{
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= csv.size())
    {
        const auto comma = csv.find(',', start);
        const std::string tok =
            csv.substr(start, comma == std::string::npos ? csv.size() - start
                                                         : comma - start);
        if (tok.empty())
            throw symrad::ConfigError("--values: empty element in '" + csv + "'");
        try
        {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            out.push_back(v);
        }
        catch (const std::exception &)
        {
            throw symrad::ConfigError("--values: cannot parse '" + tok + "'");
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"cell-free symbiotic radio rate-region simulator"};
    app.set_version_flag("--version", symrad::tool_version);
    app.require_subcommand(1);

    CommonOpts run_opts;
    auto *run_cmd = app.add_subcommand("run", "run a single campaign");
    add_common(run_cmd, run_opts, true);

    CommonOpts sweep_opts;
    std::string sweep_param;
    std::string sweep_values;
    auto *sweep_cmd = app.add_subcommand("sweep", "run one campaign per value");
    add_common(sweep_cmd, sweep_opts, true);
    sweep_cmd->add_option("--param", sweep_param,
                          "tau1, tau2, m, n, alpha, num_trials or snr_db")
        ->required();
    sweep_cmd->add_option("--values", sweep_values, "comma-separated values")
        ->required();

    CommonOpts check_opts;
    auto *check_cmd = app.add_subcommand("check", "validate a config and exit");
    add_common(check_cmd, check_opts, false);

    double dbm_value = 0.0;
    double from_watts = 0.0;
    bool from_watts_given = false;
    auto *dbm_cmd = app.add_subcommand("dbm", "convert dBm to watts");
    dbm_cmd->add_option("value", dbm_value, "power in dBm");
    dbm_cmd->add_option("--from-watts", from_watts, "convert watts to dBm instead")
        ->each([&](const std::string &) { from_watts_given = true; });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try
    {
        if (run_cmd->parsed())
        {
            const auto cfg = load_or_default(run_opts);
            const auto t0 = std::chrono::steady_clock::now();
            auto region = symrad::run_campaign(cfg, resolve_workers(run_opts));
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
            std::vector<symrad::LabeledRegion> regions{
                symrad::LabeledRegion{"none", 0.0, std::move(region)}};
            write_outputs(regions, cfg, run_opts, secs);
            print_summary(regions);
        }
        else if (sweep_cmd->parsed())
        {
            const auto cfg = load_or_default(sweep_opts);
            const auto param = symrad::parse_sweep_param(sweep_param);
            const auto values = parse_values(sweep_values);
            const auto t0 = std::chrono::steady_clock::now();
            auto regions =
                symrad::sweep(cfg, param, values, resolve_workers(sweep_opts));
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
            write_outputs(regions, cfg, sweep_opts, secs);
            print_summary(regions);
        }
        else if (check_cmd->parsed())
        {
            if (check_opts.config_path.empty())
                throw symrad::ConfigError("check: --config is required");
            const auto cfg = symrad::load_config(check_opts.config_path);
            char digest[20];
            std::snprintf(digest, sizeof(digest), "%016llx",
                          static_cast<unsigned long long>(symrad::config_digest(cfg)));
            std::printf("%-8s %8s %8s %6s %6s %8s %16s\n", "status", "aps",
                        "antennas", "tau1", "tau2", "trials", "digest");
            std::printf("%-8s %8zu %8zu %6llu %6llu %8zu %16s\n", "ok",
                        cfg.num_aps, cfg.antennas_per_ap,
                        static_cast<unsigned long long>(cfg.tau1),
                        static_cast<unsigned long long>(cfg.tau2), cfg.num_trials,
                        digest);
        }
        else if (dbm_cmd->parsed())
        {
            if (from_watts_given)
                std::printf("%.10g dBm\n", symrad::watts_to_dbm(from_watts));
            else if (dbm_cmd->count("value"))
                std::printf("%.10g W\n", symrad::dbm_to_watts(dbm_value));
            else
                throw symrad::ConfigError("dbm: give a dBm value or --from-watts");
        }
    }
    catch (const symrad::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
