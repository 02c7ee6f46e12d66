// SPDX-License-Identifier: Apache-2.0
//
// symrad: link-level simulator for cell-free symbiotic radio
// Copyright (C) 2026 symrad contributors

#include "symrad/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace symrad {

SweepParam parse_sweep_param(const std::string &name)
{
    if (name == "tau1")
        return SweepParam::Tau1;
    if (name == "tau2")
        return SweepParam::Tau2;
    if (name == "m")
        return SweepParam::NumAps;
    if (name == "n")
        return SweepParam::AntennasPerAp;
    if (name == "alpha")
        return SweepParam::Alpha;
    if (name == "num_trials")
        return SweepParam::NumTrials;
    if (name == "snr_db")
        return SweepParam::SnrDb;
    throw ConfigError("unknown sweep parameter '" + name +
                      "' (expected tau1, tau2, m, n, alpha, num_trials, snr_db)");
}

std::string sweep_param_name(SweepParam param)
{
    switch (param)
    {
    case SweepParam::Tau1: return "tau1";
    case SweepParam::Tau2: return "tau2";
    case SweepParam::NumAps: return "m";
    case SweepParam::AntennasPerAp: return "n";
    case SweepParam::Alpha: return "alpha";
    case SweepParam::NumTrials: return "num_trials";
    case SweepParam::SnrDb: return "snr_db";
    }
    throw std::logic_error("unreachable");
}

static std::uint64_t integral_value(double value, const char *what)
{
    if (!(value >= 1.0) || value != std::floor(value) || !std::isfinite(value))
        throw ConfigError(std::string(what) + " sweep values must be positive integers");
    return static_cast<std::uint64_t>(value);
}

ScenarioConfig apply_sweep_value(const ScenarioConfig &config, SweepParam param,
                                 double value)
{
    ScenarioConfig out = config;
    switch (param)
    {
    case SweepParam::Tau1:
        out.tau1 = integral_value(value, "tau1");
        break;
    case SweepParam::Tau2:
        out.tau2 = integral_value(value, "tau2");
        break;
    case SweepParam::NumAps:
    {
        const std::uint64_t m = integral_value(value, "m");
        const auto side = static_cast<std::size_t>(std::llround(std::sqrt(
            static_cast<double>(m))));
        if (side * side != m)
            throw ConfigError("m sweep values must be perfect squares (grid layout)");
        out.num_aps = static_cast<std::size_t>(m);
        out.ap_positions = grid_positions(side, 1000.0);
        break;
    }
    case SweepParam::AntennasPerAp:
        out.antennas_per_ap = static_cast<std::size_t>(integral_value(value, "n"));
        break;
    case SweepParam::Alpha:
        out.reflection_coefficient = value;
        break;
    case SweepParam::NumTrials:
        out.num_trials = static_cast<std::size_t>(integral_value(value, "num_trials"));
        break;
    case SweepParam::SnrDb:
        out.transmit_power = out.noise_power * std::pow(10.0, value / 10.0);
        out.training_power = out.transmit_power;
        break;
    }
    validate_config(out);
    return out;
}

std::vector<TrialOutcome> run_trial(const ScenarioConfig &config,
                                    const LinkGains &gains,
                                    std::uint64_t trial_index,
                                    PerfectCsiBeamformer mode)
{
    Rng rng = Rng::for_trial(config.seed, trial_index);
    const ChannelRealization realization =
        sample_realization(gains, config.antennas_per_ap, rng);
    const ChannelEstimate est =
        run_two_phase_estimation(realization, gains, config, rng);
    const NoiseErrorTerm E = noise_error_term(gains, config);

    const double p = config.transmit_power;
    const double alpha = config.reflection_coefficient;
    const double sigma2 = config.noise_power;

    std::vector<TrialOutcome> out;
    out.reserve(config.rho_grid.size());
    for (double rho : config.rho_grid)
    {
        try
        {
            const BeamformerSet bf = build_beamformer_set(est, rho);
            const BeamformerSet *perfect_bf = &bf;
            BeamformerSet true_bf;
            if (mode == PerfectCsiBeamformer::FromTrueChannels)
            {
                true_bf.rho = rho;
                true_bf.w.reserve(realization.g.size());
                for (std::size_t m = 0; m < realization.g.size(); ++m)
                    true_bf.w.push_back(weighted_mrt(mrt(realization.g[m]),
                                                     mrt(realization.h[m]), rho));
                perfect_bf = &true_bf;
            }

            TrialOutcome o;
            o.bound.primary = primary_rate_bound(est, bf, E, alpha);
            o.bound.secondary = secondary_rate_bound(est, bf, E, alpha);
            o.perfect.primary = primary_rate_perfect(
                primary_sinr_perfect(realization, *perfect_bf, p, alpha, sigma2));
            o.perfect.secondary =
                secondary_rate_perfect(realization, *perfect_bf, p, alpha, sigma2);
            out.push_back(o);
        }
        catch (const DegenerateBeamformerError &e)
        {
            throw CampaignError("trial " + std::to_string(trial_index) + ", rho " +
                                std::to_string(rho) + ": " + e.what());
        }
    }
    return out;
}

RateRegion run_campaign(const ScenarioConfig &config, std::size_t workers,
                        PerfectCsiBeamformer mode)
{
    validate_config(config);
    const LinkGains gains = build_link_gains(config);
    const std::size_t T = config.num_trials;
    const std::size_t R = config.rho_grid.size();

    std::vector<TrialOutcome> results(T * R);
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::vector<std::string> failures;

    auto work = [&]() {
        for (;;)
        {
            const std::size_t t = next.fetch_add(1);
            if (t >= T)
                return;
            try
            {
                auto row = run_trial(config, gains, t, mode);
                std::copy(row.begin(), row.end(), results.begin() + t * R);
            }
            catch (const std::exception &e)
            {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (failures.size() < 8)
                    failures.emplace_back(e.what());
            }
        }
    };

    std::size_t n_workers = workers;
    if (n_workers == 0)
    {
        n_workers = std::thread::hardware_concurrency();
        if (n_workers == 0)
            n_workers = 1;
    }
    n_workers = std::min(n_workers, T);

    if (n_workers <= 1)
    {
        work();
    }
    else
    {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (std::size_t i = 0; i < n_workers; ++i)
            pool.emplace_back(work);
        for (auto &th : pool)
            th.join();
    }

    if (!failures.empty())
    {
        std::string msg = "campaign failed (" + std::to_string(failures.size()) +
                          " trial error(s) collected):";
        for (const auto &f : failures)
            msg += "\n  " + f;
        throw CampaignError(msg);
    }

    // Reduction in trial-index order: output independent of worker count.
    RateRegion region;
    region.rho_grid = config.rho_grid;
    region.num_trials = T;
    region.config_digest = config_digest(config);
    auto series = [&](auto pick, std::vector<double> &mean_out,
                      std::vector<double> &stderr_out) {
        mean_out.resize(R);
        stderr_out.resize(R);
        for (std::size_t r = 0; r < R; ++r)
        {
            double mean = 0.0;
            for (std::size_t t = 0; t < T; ++t)
                mean += pick(results[t * R + r]);
            mean /= static_cast<double>(T);
            double ss = 0.0;
            for (std::size_t t = 0; t < T; ++t)
            {
                const double d = pick(results[t * R + r]) - mean;
                ss += d * d;
            }
            mean_out[r] = mean;
            stderr_out[r] =
                T > 1 ? std::sqrt(ss / static_cast<double>(T - 1) /
                                  static_cast<double>(T))
                      : 0.0;
        }
    };
    series([](const TrialOutcome &o) { return o.bound.primary; },
           region.mean_primary_bound, region.stderr_primary_bound);
    series([](const TrialOutcome &o) { return o.bound.secondary; },
           region.mean_secondary_bound, region.stderr_secondary_bound);
    series([](const TrialOutcome &o) { return o.perfect.primary; },
           region.mean_primary_perfect, region.stderr_primary_perfect);
    series([](const TrialOutcome &o) { return o.perfect.secondary; },
           region.mean_secondary_perfect, region.stderr_secondary_perfect);
    return region;
}

std::vector<LabeledRegion> sweep(const ScenarioConfig &config, SweepParam param,
                                 const std::vector<double> &values,
                                 std::size_t workers, PerfectCsiBeamformer mode)
{
    if (values.empty())
        throw ConfigError("sweep: empty value list");
    std::vector<LabeledRegion> out;
    out.reserve(values.size());
    for (double v : values)
    {
        const ScenarioConfig cfg = apply_sweep_value(config, param, v);
        out.push_back(LabeledRegion{sweep_param_name(param), v,
                                    run_campaign(cfg, workers, mode)});
    }
    return out;
}

} // namespace symrad
