// SPDX-License-Identifier: Apache-2.0
//
// symrad: link-level simulator for cell-free symbiotic radio
// Copyright (C) 2026 symrad contributors

#pragma once

#include "symrad/math_kernels.hpp"
#include "symrad/scenario.hpp"

namespace symrad {

// One small-scale fading draw. h[m] == q * f[m] entrywise by construction.
struct ChannelRealization
{
    std::vector<cvec> g; // AP -> receiver, per AP length N
    std::vector<cvec> f; // AP -> BD
    cdouble q{0.0, 0.0}; // BD -> receiver scalar
    std::vector<cvec> h; // cascaded q * f_m
};

// Pilot-projected, power-scaled sufficient statistic of one training phase
// for one AP.
struct TrainingObservation
{
    cvec y;
    int phase = 0; // 1 or 2
};

// g_m ~ CN(0, b_m I), f_m ~ CN(0, zeta_m I), q ~ CN(0, upsilon), all
// independent.
ChannelRealization sample_realization(const LinkGains &gains, std::size_t n_antennas,
                                      Rng &rng);

// tau1 * g_m + noise, noise ~ CN(0, (tau1 * sigma2 / p_t) I). The projected
// statistic is synthesized directly; the tau1-long pilot block is never
// materialized (statistically identical, O(N) instead of O(N*tau1)).
TrainingObservation phase1_observation(const cvec &g_m, std::uint64_t tau1,
                                       double p_t, double sigma2, Rng &rng);

// tau2 * h_m + (tau2/sqrt(alpha)) * g_err_m + noise,
// noise ~ CN(0, (tau2 * sigma2 / (p_t * alpha)) I). g_err_m must be the
// realized phase-1 estimation error of the same trial: the cross-phase
// coupling is what makes the cascaded error statistics come out right.
TrainingObservation phase2_observation(const cvec &h_m, const cvec &g_err_m,
                                       std::uint64_t tau2, double p_t, double sigma2,
                                       double alpha, Rng &rng);

} // namespace symrad
