// SPDX-License-Identifier: Apache-2.0
//
// symrad: link-level simulator for cell-free symbiotic radio
// Copyright (C) 2026 symrad contributors

#include "symrad/estimation.hpp"

#include <cmath>
#include <stdexcept>

namespace symrad {

static cvec scale(const cvec &v, double coef)
{
    cvec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = coef * v[i];
    return out;
}

cvec estimate_direct(const TrainingObservation &obs, double b_m, std::uint64_t tau1,
                     double p_t, double sigma2)
{
    if (obs.phase != 1)
        throw std::invalid_argument("estimate_direct: needs a phase-1 observation");
    const double coef = p_t * b_m / (p_t * static_cast<double>(tau1) * b_m + sigma2);
    return scale(obs.y, coef);
}

double direct_estimate_variance(double b, double e1)
{
    return e1 * b * b / (1.0 + e1 * b);
}

double direct_error_variance(double b, double e1)
{
    return b / (1.0 + e1 * b);
}

cvec estimate_cascaded(const TrainingObservation &obs, double eps_m, double b_m,
                       double e1, std::uint64_t tau2, double p_t, double sigma2,
                       double alpha)
{
    if (obs.phase != 2)
        throw std::invalid_argument("estimate_cascaded: needs a phase-2 observation");
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument("estimate_cascaded: alpha must lie in (0, 1]");
    const double tau = static_cast<double>(tau2);
    const double residual = p_t * tau * b_m / (1.0 + e1 * b_m);
    const double coef =
        alpha * p_t * eps_m / (alpha * p_t * tau * eps_m + residual + sigma2);
    return scale(obs.y, coef);
}

double cascaded_estimate_variance(double eps, double b, double e1, double e2,
                                  double alpha)
{
    const double c = e2 * b / (1.0 + e1 * b);
    return alpha * e2 * eps * eps / (alpha * e2 * eps + c + 1.0);
}

double cascaded_error_variance(double eps, double b, double e1, double e2,
                               double alpha)
{
    const double c = e2 * b / (1.0 + e1 * b);
    return eps * (c + 1.0) / (alpha * e2 * eps + c + 1.0);
}

ChannelEstimate run_two_phase_estimation(const ChannelRealization &realization,
                                         const LinkGains &gains,
                                         const ScenarioConfig &config, Rng &rng)
{
    const std::size_t M = realization.g.size();
    if (gains.b.size() != M || realization.h.size() != M)
        throw std::invalid_argument("run_two_phase_estimation: inconsistent dimensions");

    const double p_t = config.training_power;
    const double sigma2 = config.noise_power;
    const double alpha = config.reflection_coefficient;

    ChannelEstimate est;
    est.e1 = p_t * static_cast<double>(config.tau1) / sigma2;
    est.e2 = p_t * static_cast<double>(config.tau2) / sigma2;
    est.g_hat.reserve(M);
    est.h_hat.reserve(M);
    est.g_err.reserve(M);
    est.h_err.reserve(M);
    est.var_g_err.reserve(M);
    est.var_h_err.reserve(M);

    for (std::size_t m = 0; m < M; ++m)
    {
        const auto obs1 = phase1_observation(realization.g[m], config.tau1, p_t,
                                             sigma2, rng);
        cvec g_hat = estimate_direct(obs1, gains.b[m], config.tau1, p_t, sigma2);
        cvec g_err(g_hat.size());
        for (std::size_t i = 0; i < g_hat.size(); ++i)
            g_err[i] = realization.g[m][i] - g_hat[i];

        const auto obs2 = phase2_observation(realization.h[m], g_err, config.tau2,
                                             p_t, sigma2, alpha, rng);
        cvec h_hat = estimate_cascaded(obs2, gains.epsilon[m], gains.b[m], est.e1,
                                       config.tau2, p_t, sigma2, alpha);
        cvec h_err(h_hat.size());
        for (std::size_t i = 0; i < h_hat.size(); ++i)
            h_err[i] = realization.h[m][i] - h_hat[i];

        est.var_g_err.push_back(direct_error_variance(gains.b[m], est.e1));
        est.var_h_err.push_back(cascaded_error_variance(gains.epsilon[m], gains.b[m],
                                                        est.e1, est.e2, alpha));
        est.g_hat.push_back(std::move(g_hat));
        est.g_err.push_back(std::move(g_err));
        est.h_hat.push_back(std::move(h_hat));
        est.h_err.push_back(std::move(h_err));
    }
    return est;
}

} // namespace symrad
