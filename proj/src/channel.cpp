// SPDX-License-Identifier: Apache-2.0
//
// symrad: link-level simulator for cell-free symbiotic radio
// Copyright (C) 2026 symrad contributors

#include "symrad/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace symrad {

ChannelRealization sample_realization(const LinkGains &gains, std::size_t n_antennas,
                                      Rng &rng)
{
    if (n_antennas == 0)
        throw std::invalid_argument("sample_realization: n_antennas must be >= 1");
    const std::size_t M = gains.b.size();
    if (gains.zeta.size() != M || gains.epsilon.size() != M)
        throw std::invalid_argument("sample_realization: inconsistent gain lists");

    ChannelRealization r;
    r.g.reserve(M);
    r.f.reserve(M);
    r.h.reserve(M);
    for (std::size_t m = 0; m < M; ++m)
        r.g.push_back(sample_cscg_vector(n_antennas, gains.b[m], rng));
    for (std::size_t m = 0; m < M; ++m)
        r.f.push_back(sample_cscg_vector(n_antennas, gains.zeta[m], rng));
    r.q = std::sqrt(gains.upsilon) * rng.standard_complex_normal();
    for (std::size_t m = 0; m < M; ++m)
    {
        cvec hm(n_antennas);
        for (std::size_t i = 0; i < n_antennas; ++i)
            hm[i] = r.q * r.f[m][i];
        r.h.push_back(std::move(hm));
    }
    return r;
}

TrainingObservation phase1_observation(const cvec &g_m, std::uint64_t tau1,
                                       double p_t, double sigma2, Rng &rng)
{
    if (tau1 == 0)
        throw std::invalid_argument("phase1_observation: tau1 must be >= 1");
    if (!(p_t > 0.0) || !(sigma2 >= 0.0))
        throw std::invalid_argument("phase1_observation: invalid powers");

    const double tau = static_cast<double>(tau1);
    const cvec noise = sample_cscg_vector(g_m.size(), tau * sigma2 / p_t, rng);
    TrainingObservation obs;
    obs.phase = 1;
    obs.y.resize(g_m.size());
    for (std::size_t i = 0; i < g_m.size(); ++i)
        obs.y[i] = tau * g_m[i] + noise[i];
    return obs;
}

TrainingObservation phase2_observation(const cvec &h_m, const cvec &g_err_m,
                                       std::uint64_t tau2, double p_t, double sigma2,
                                       double alpha, Rng &rng)
{
    if (tau2 == 0)
        throw std::invalid_argument("phase2_observation: tau2 must be >= 1");
    if (!(p_t > 0.0) || !(sigma2 >= 0.0))
        throw std::invalid_argument("phase2_observation: invalid powers");
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::invalid_argument(
            "phase2_observation: alpha must lie in (0, 1] (no backscatter path to train)");
    if (h_m.size() != g_err_m.size())
        throw std::invalid_argument("phase2_observation: dimension mismatch");

    const double tau = static_cast<double>(tau2);
    const double err_scale = tau / std::sqrt(alpha);
    const cvec noise = sample_cscg_vector(h_m.size(), tau * sigma2 / (p_t * alpha), rng);
    TrainingObservation obs;
    obs.phase = 2;
    obs.y.resize(h_m.size());
    for (std::size_t i = 0; i < h_m.size(); ++i)
        obs.y[i] = tau * h_m[i] + err_scale * g_err_m[i] + noise[i];
    return obs;
}

} // namespace symrad
