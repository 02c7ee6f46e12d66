// SPDX-License-Identifier: Apache-2.0
//
// symrad: link-level simulator for cell-free symbiotic radio
// Copyright (C) 2026 symrad contributors

#pragma once

#include "symrad/estimation.hpp"

namespace symrad {

// Raised when a beamformer cannot be normalized (zero estimate or
// antiparallel combination). Probability-zero under continuous fading, so
// hitting it usually means a test constructed degenerate inputs on purpose.
class DegenerateBeamformerError : public std::runtime_error
{
  public:
    explicit DegenerateBeamformerError(const std::string &msg)
        : std::runtime_error(msg) {}
};

// Per-AP unit-norm transmit beamformers for one weighting coefficient.
struct BeamformerSet
{
    std::vector<cvec> w; // per AP, each unit norm
    double rho = 0.0;
};

// v / ||v||; rejects the zero vector.
cvec mrt(const cvec &v);

// Normalized convex combination of two unit vectors:
//   (rho * w_s + (1 - rho) * w_c) / ||...||.
// The normalization is per call (per AP); a single global factor cannot
// satisfy the per-AP unit-norm constraint.
cvec weighted_mrt(const cvec &w_s, const cvec &w_c, double rho);

// w_m = weighted_mrt(mrt(g_hat_m), mrt(h_hat_m), rho) for every AP
// independently; each AP uses only its own estimates.
BeamformerSet build_beamformer_set(const ChannelEstimate &est, double rho);

} // namespace symrad
