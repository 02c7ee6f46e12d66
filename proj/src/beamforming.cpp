// SPDX-License-Identifier: Apache-2.0
//
// symrad: link-level simulator for cell-free symbiotic radio
// Copyright (C) 2026 symrad contributors

#include "symrad/beamforming.hpp"

#include <cmath>
#include <string>

namespace symrad {

cvec mrt(const cvec &v)
{
    const double n = norm2(v);
    if (!(n > 0.0))
        throw DegenerateBeamformerError("mrt: zero channel estimate");
    cvec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] / n;
    return out;
}

cvec weighted_mrt(const cvec &w_s, const cvec &w_c, double rho)
{
    if (!(rho >= 0.0) || rho > 1.0)
        throw std::invalid_argument("weighted_mrt: rho must lie in [0, 1]");
    if (w_s.size() != w_c.size())
        throw std::invalid_argument("weighted_mrt: dimension mismatch");

    // exact endpoints, no roundtrip through the normalization
    if (rho == 1.0)
        return w_s;
    if (rho == 0.0)
        return w_c;

    cvec combo(w_s.size());
    for (std::size_t i = 0; i < w_s.size(); ++i)
        combo[i] = rho * w_s[i] + (1.0 - rho) * w_c[i];
    const double n = norm2(combo);
    if (n < 1e-12)
        throw DegenerateBeamformerError(
            "weighted_mrt: combination norm below 1e-12 (antiparallel estimates)");
    for (auto &x : combo)
        x /= n;
    return combo;
}

BeamformerSet build_beamformer_set(const ChannelEstimate &est, double rho)
{
    BeamformerSet set;
    set.rho = rho;
    set.w.reserve(est.g_hat.size());
    for (std::size_t m = 0; m < est.g_hat.size(); ++m)
    {
        try
        {
            set.w.push_back(weighted_mrt(mrt(est.g_hat[m]), mrt(est.h_hat[m]), rho));
        }
        catch (const DegenerateBeamformerError &e)
        {
            throw DegenerateBeamformerError("ap " + std::to_string(m) + ": " + e.what());
        }
    }
    return set;
}

} // namespace symrad
