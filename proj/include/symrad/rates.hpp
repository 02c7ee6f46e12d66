// SPDX-License-Identifier: Apache-2.0
//
// symrad: link-level simulator for cell-free symbiotic radio
// Copyright (C) 2026 symrad contributors

#pragma once

#include "symrad/beamforming.hpp"

namespace symrad {

// One (primary, secondary) rate operating point, bits per channel use.
struct RatePair
{
    double primary = 0.0;
    double secondary = 0.0;
};

// Aggregate estimation-error-plus-noise power, normalized by the transmit
// power: sum_m [var_g_err_m + alpha * var_h_err_m] + sigma2/p. Shared by the
// primary and secondary rate bounds.
struct NoiseErrorTerm
{
    double E = 0.0;
};

// Mean and resampling standard error of an empirical rate estimate.
struct EmpiricalRate
{
    double mean = 0.0;
    double stderr_mean = 0.0;
};

// Perfect-CSI primary SINR:
//   p |sum g_m^H w_m|^2 / (p*alpha*|q|^2*|sum f_m^H w_m|^2 + sigma2).
double primary_sinr_perfect(const ChannelRealization &realization,
                            const BeamformerSet &weights, double p, double alpha,
                            double sigma2);

// log2(1 + gamma)
double primary_rate_perfect(double gamma_s);

// Ergodic secondary rate with perfect CSI: beta =
// p*alpha*|q|^2*|sum f_m^H w_m|^2 / sigma2 fed to ergodic_rayleigh_rate.
double secondary_rate_perfect(const ChannelRealization &realization,
                              const BeamformerSet &weights, double p, double alpha,
                              double sigma2);

// The E-term shared by both rate bounds. Depends only on gains and config.
NoiseErrorTerm noise_error_term(const LinkGains &gains, const ScenarioConfig &config);

// Jensen lower bound on the expected primary rate:
//   log2(1 + |sum g_hat^H w|^2 / (E + alpha*|sum h_hat^H w|^2)).
double primary_rate_bound(const ChannelEstimate &est, const BeamformerSet &bf,
                          const NoiseErrorTerm &E, double alpha);

// Jensen lower bound on the expected secondary rate:
//   ergodic_rayleigh_rate(beta_c), beta_c = alpha*|sum h_hat^H w|^2 / E.
double secondary_rate_bound(const ChannelEstimate &est, const BeamformerSet &bf,
                            const NoiseErrorTerm &E, double alpha);

// Empirical expected primary rate: holds the estimates fixed, redraws the
// estimation errors n_resamples times from their model distributions, and
// averages the exact conditional rate. The error double sum
// sum_m sum_l w_m^H (g~_m g~_l^H + alpha h~_m h~_l^H) w_l is evaluated in
// full, including the m != l cross terms whose mean the bound assumes away.
EmpiricalRate empirical_primary_rate_detail(const ChannelEstimate &est,
                                            const BeamformerSet &bf,
                                            const LinkGains &gains,
                                            const ScenarioConfig &config, Rng &rng,
                                            std::size_t n_resamples);

// Mean of empirical_primary_rate_detail.
double empirical_primary_rate(const ChannelEstimate &est, const BeamformerSet &bf,
                              const LinkGains &gains, const ScenarioConfig &config,
                              Rng &rng, std::size_t n_resamples);

// Empirical expected secondary rate: additionally draws the decoded-symbol
// power |s|^2 ~ Exp(1) per resample.
EmpiricalRate empirical_secondary_rate_detail(const ChannelEstimate &est,
                                              const BeamformerSet &bf,
                                              const LinkGains &gains,
                                              const ScenarioConfig &config, Rng &rng,
                                              std::size_t n_resamples);

} // namespace symrad
