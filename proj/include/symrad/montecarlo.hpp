// SPDX-License-Identifier: Apache-2.0
//
// symrad: link-level simulator for cell-free symbiotic radio
// Copyright (C) 2026 symrad contributors

#pragma once

#include "symrad/rates.hpp"

#include <string>

namespace symrad {

// Raised when any trial of a campaign fails; carries every collected
// per-trial diagnostic. The CLI maps it to exit code 2.
class CampaignError : public std::runtime_error
{
  public:
    explicit CampaignError(const std::string &msg) : std::runtime_error(msg) {}
};

// How the perfect-CSI reference rates pick their beamformers. The default
// reuses the estimate-derived beamformers so the perfect/bound gap isolates
// estimation loss inside the rate expressions; the alternative rebuilds MRT
// from the true channels.
enum class PerfectCsiBeamformer
{
    FromEstimates,
    FromTrueChannels,
};

// Rates of one trial at one rho: the Jensen-bound pair and the perfect-CSI
// reference pair.
struct TrialOutcome
{
    RatePair bound;
    RatePair perfect;
};

// Averaged rate region: one entry per rho in rho_grid for each series.
struct RateRegion
{
    std::vector<double> rho_grid;
    std::vector<double> mean_primary_bound;
    std::vector<double> mean_secondary_bound;
    std::vector<double> mean_primary_perfect;
    std::vector<double> mean_secondary_perfect;
    std::vector<double> stderr_primary_bound;
    std::vector<double> stderr_secondary_bound;
    std::vector<double> stderr_primary_perfect;
    std::vector<double> stderr_secondary_perfect;
    std::size_t num_trials = 0;
    std::uint64_t config_digest = 0;
};

// A rate region labeled by the sweep that produced it.
struct LabeledRegion
{
    std::string param;
    double value = 0.0;
    RateRegion region;
};

// Sweepable scenario parameters.
enum class SweepParam
{
    Tau1,
    Tau2,
    NumAps,
    AntennasPerAp,
    Alpha,
    NumTrials,
    SnrDb,
};

// Accepted names: tau1, tau2, m, n, alpha, num_trials, snr_db.
SweepParam parse_sweep_param(const std::string &name);
std::string sweep_param_name(SweepParam param);

// Returns a copy of config with the parameter applied. Integer parameters
// reject non-integral values; m requires a perfect square (APs are laid out
// with grid_positions over the default 1000 m area); snr_db sets
// p = p_t = sigma2 * 10^(value/10).
ScenarioConfig apply_sweep_value(const ScenarioConfig &config, SweepParam param,
                                 double value);

// One full trial: seeds a generator from (config.seed, trial_index), samples
// a realization, runs the two-phase estimation once, then evaluates all four
// rates for every rho in config.rho_grid (training does not depend on rho,
// so the estimate is shared across the grid).
std::vector<TrialOutcome> run_trial(const ScenarioConfig &config,
                                    const LinkGains &gains,
                                    std::uint64_t trial_index,
                                    PerfectCsiBeamformer mode =
                                        PerfectCsiBeamformer::FromEstimates);

// Averages run_trial over config.num_trials trials. Trials execute on
// `workers` threads (0 = hardware concurrency); results are reduced in
// trial-index order, so the output is bit-identical for any worker count.
RateRegion run_campaign(const ScenarioConfig &config, std::size_t workers = 0,
                        PerfectCsiBeamformer mode =
                            PerfectCsiBeamformer::FromEstimates);

// One campaign per value with the same base seed.
std::vector<LabeledRegion> sweep(const ScenarioConfig &config, SweepParam param,
                                 const std::vector<double> &values,
                                 std::size_t workers = 0,
                                 PerfectCsiBeamformer mode =
                                     PerfectCsiBeamformer::FromEstimates);

} // namespace symrad
