// SPDX-License-Identifier: Apache-2.0
//
// symrad: link-level simulator for cell-free symbiotic radio
// Copyright (C) 2026 symrad contributors

#include "symrad/rates.hpp"

#include <cmath>
#include <stdexcept>

namespace symrad {

double primary_sinr_perfect(const ChannelRealization &realization,
                            const BeamformerSet &weights, double p, double alpha,
                            double sigma2)
{
    const double signal = std::norm(beamformed_sum(realization.g, weights.w));
    const double backscatter = std::norm(beamformed_sum(realization.f, weights.w));
    const double interference = p * alpha * std::norm(realization.q) * backscatter;
    return p * signal / (interference + sigma2);
}

double primary_rate_perfect(double gamma_s)
{
    if (!(gamma_s >= 0.0))
        throw std::invalid_argument("primary_rate_perfect: gamma must be >= 0");
    return std::log2(1.0 + gamma_s);
}

double secondary_rate_perfect(const ChannelRealization &realization,
                              const BeamformerSet &weights, double p, double alpha,
                              double sigma2)
{
    const double backscatter = std::norm(beamformed_sum(realization.f, weights.w));
    const double beta = p * alpha * std::norm(realization.q) * backscatter / sigma2;
    return ergodic_rayleigh_rate(beta);
}

NoiseErrorTerm noise_error_term(const LinkGains &gains, const ScenarioConfig &config)
{
    const double e1 = config.training_power * static_cast<double>(config.tau1) /
                      config.noise_power;
    const double e2 = config.training_power * static_cast<double>(config.tau2) /
                      config.noise_power;
    const double alpha = config.reflection_coefficient;

    double sum = 0.0;
    for (std::size_t m = 0; m < gains.b.size(); ++m)
    {
        sum += direct_error_variance(gains.b[m], e1);
        sum += alpha * cascaded_error_variance(gains.epsilon[m], gains.b[m], e1, e2,
                                               alpha);
    }
    return NoiseErrorTerm{sum + config.noise_power / config.transmit_power};
}

double primary_rate_bound(const ChannelEstimate &est, const BeamformerSet &bf,
                          const NoiseErrorTerm &E, double alpha)
{
    if (!(E.E > 0.0))
        throw std::invalid_argument("primary_rate_bound: E must be > 0");
    const double signal = std::norm(beamformed_sum(est.g_hat, bf.w));
    const double interference = alpha * std::norm(beamformed_sum(est.h_hat, bf.w));
    return std::log2(1.0 + signal / (E.E + interference));
}

double secondary_rate_bound(const ChannelEstimate &est, const BeamformerSet &bf,
                            const NoiseErrorTerm &E, double alpha)
{
    if (!(E.E > 0.0))
        throw std::invalid_argument("secondary_rate_bound: E must be > 0");
    const double beta_c = alpha * std::norm(beamformed_sum(est.h_hat, bf.w)) / E.E;
    return ergodic_rayleigh_rate(beta_c);
}

namespace {

// Shared machinery of the two empirical (resampled) rates. Per resample the
// estimation errors are redrawn from their per-AP model distributions and
// the full error double sum is accumulated term by term.
struct ErrorResampler
{
    const ChannelEstimate &est;
    const BeamformerSet &bf;
    double alpha;
    std::size_t M;
    std::size_t N;

    ErrorResampler(const ChannelEstimate &e, const BeamformerSet &b, double a)
        : est(e), bf(b), alpha(a), M(e.g_hat.size()),
          N(e.g_hat.empty() ? 0 : e.g_hat[0].size())
    {
        if (bf.w.size() != M)
            throw std::invalid_argument("empirical rate: beamformer/estimate mismatch");
    }

    // sum_m sum_l w_m^H (g~_m g~_l^H + alpha h~_m h~_l^H) w_l for one
    // fresh error draw; the imaginary parts cancel pairwise, the real part
    // is the error power.
    double error_double_sum(Rng &rng) const
    {
        std::vector<cdouble> u(M), v(M);
        for (std::size_t m = 0; m < M; ++m)
        {
            const cvec ge = sample_cscg_vector(N, est.var_g_err[m], rng);
            const cvec he = sample_cscg_vector(N, est.var_h_err[m], rng);
            cdouble um{0.0, 0.0}, vm{0.0, 0.0};
            for (std::size_t i = 0; i < N; ++i)
            {
                um += std::conj(bf.w[m][i]) * ge[i]; // w_m^H g~_m
                vm += std::conj(bf.w[m][i]) * he[i]; // w_m^H h~_m
            }
            u[m] = um;
            v[m] = vm;
        }
        cdouble acc{0.0, 0.0};
        for (std::size_t m = 0; m < M; ++m)
            for (std::size_t l = 0; l < M; ++l)
                acc += u[m] * std::conj(u[l]) + alpha * v[m] * std::conj(v[l]);
        return acc.real();
    }
};

EmpiricalRate reduce(const std::vector<double> &samples)
{
    // Welford's update: exact for constant samples (degenerate resamplers
    // report a zero standard error) and stable for long runs.
    double mean = 0.0;
    double m2 = 0.0;
    double n = 0.0;
    for (double s : samples)
    {
        n += 1.0;
        const double d = s - mean;
        mean += d / n;
        m2 += d * (s - mean);
    }
    const double var = m2 / (samples.size() > 1 ? n - 1.0 : 1.0);
    return EmpiricalRate{mean, std::sqrt(var / n)};
}

} // namespace

EmpiricalRate empirical_primary_rate_detail(const ChannelEstimate &est,
                                            const BeamformerSet &bf,
                                            const LinkGains &,
                                            const ScenarioConfig &config, Rng &rng,
                                            std::size_t n_resamples)
{
    if (n_resamples < 1000)
        throw std::invalid_argument("empirical_primary_rate: needs >= 1000 resamples");
    const double alpha = config.reflection_coefficient;
    const ErrorResampler resampler(est, bf, alpha);

    const double signal = std::norm(beamformed_sum(est.g_hat, bf.w));
    const double interference = alpha * std::norm(beamformed_sum(est.h_hat, bf.w));
    const double noise = config.noise_power / config.transmit_power;

    std::vector<double> samples(n_resamples);
    for (auto &s : samples)
    {
        const double denom = resampler.error_double_sum(rng) + interference + noise;
        s = std::log2(1.0 + signal / denom);
    }
    return reduce(samples);
}

double empirical_primary_rate(const ChannelEstimate &est, const BeamformerSet &bf,
                              const LinkGains &gains, const ScenarioConfig &config,
                              Rng &rng, std::size_t n_resamples)
{
    return empirical_primary_rate_detail(est, bf, gains, config, rng, n_resamples).mean;
}

EmpiricalRate empirical_secondary_rate_detail(const ChannelEstimate &est,
                                              const BeamformerSet &bf,
                                              const LinkGains &,
                                              const ScenarioConfig &config, Rng &rng,
                                              std::size_t n_resamples)
{
    if (n_resamples < 1000)
        throw std::invalid_argument("empirical_secondary_rate: needs >= 1000 resamples");
    const double alpha = config.reflection_coefficient;
    const ErrorResampler resampler(est, bf, alpha);

    const double signal = alpha * std::norm(beamformed_sum(est.h_hat, bf.w));
    const double noise = config.noise_power / config.transmit_power;

    std::vector<double> samples(n_resamples);
    for (auto &s : samples)
    {
        const double denom = resampler.error_double_sum(rng) + noise;
        const double symbol_power = -std::log(rng.uniform()); // |s|^2 ~ Exp(1)
        s = std::log2(1.0 + signal * symbol_power / denom);
    }
    return reduce(samples);
}

} // namespace symrad
