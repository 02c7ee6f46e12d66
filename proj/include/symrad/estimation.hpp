// SPDX-License-Identifier: Apache-2.0
//
// symrad: link-level simulator for cell-free symbiotic radio
// Copyright (C) 2026 symrad contributors

#pragma once

#include "symrad/channel.hpp"

namespace symrad {

// Output of the two-phase LMMSE estimator for one trial. Realized error
// vectors are kept alongside the estimates: the model only needs their
// statistics, but the realized values let tests resample the exact SINR and
// verify the Jensen bounds empirically.
struct ChannelEstimate
{
    std::vector<cvec> g_hat;        // direct-link estimates
    std::vector<cvec> h_hat;        // cascaded estimates
    std::vector<cvec> g_err;        // realized g - g_hat
    std::vector<cvec> h_err;        // realized h - h_hat
    std::vector<double> var_g_err;  // per-entry error variance, phase 1
    std::vector<double> var_h_err;  // per-entry error variance, phase 2
    double e1 = 0.0;                // p_t * tau1 / sigma2
    double e2 = 0.0;                // p_t * tau2 / sigma2
};

// Phase-1 LMMSE: coefficient p_t*b / (p_t*tau1*b + sigma2) applied to the
// projected observation.
cvec estimate_direct(const TrainingObservation &obs, double b_m, std::uint64_t tau1,
                     double p_t, double sigma2);

// Per-entry variance of the phase-1 estimate: e1*b^2 / (1 + e1*b).
double direct_estimate_variance(double b, double e1);

// Per-entry variance of the phase-1 error: b / (1 + e1*b).
double direct_error_variance(double b, double e1);

// Phase-2 LMMSE: coefficient
//   alpha*p_t*eps / (alpha*p_t*tau2*eps + p_t*tau2*b/(1+e1*b) + sigma2).
cvec estimate_cascaded(const TrainingObservation &obs, double eps_m, double b_m,
                       double e1, std::uint64_t tau2, double p_t, double sigma2,
                       double alpha);

// Per-entry variance of the phase-2 estimate:
//   alpha*e2*eps^2 / (alpha*e2*eps + e2*b/(1+e1*b) + 1).
double cascaded_estimate_variance(double eps, double b, double e1, double e2,
                                  double alpha);

// Per-entry variance of the phase-2 error:
//   eps*(e2*b/(1+e1*b) + 1) / (alpha*e2*eps + e2*b/(1+e1*b) + 1).
// The residual phase-1 error leaves a floor: this does not vanish as
// e2 -> infinity unless e1 -> infinity too.
double cascaded_error_variance(double eps, double b, double e1, double e2,
                               double alpha);

// Runs both training phases for every AP: phase-1 observation -> g_hat and
// realized g_err, then the phase-2 observation is built from that realized
// g_err (not a fresh draw) -> h_hat, h_err.
ChannelEstimate run_two_phase_estimation(const ChannelRealization &realization,
                                         const LinkGains &gains,
                                         const ScenarioConfig &config, Rng &rng);

} // namespace symrad
