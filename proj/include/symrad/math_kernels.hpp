// SPDX-License-Identifier: Apache-2.0
//
// symrad: link-level simulator for cell-free symbiotic radio
// Copyright (C) 2026 symrad contributors

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace symrad {

using cdouble = std::complex<double>;
using cvec = std::vector<cdouble>;

// Bijective 64-bit finalizer (splitmix64). Used to decorrelate RNG seeds
// derived from nearby integers.
std::uint64_t splitmix64(std::uint64_t x);

// Deterministic random generator with a fixed cross-platform sample stream.
// Normal variates use an explicit Box-Muller transform rather than
// std::normal_distribution, whose output is implementation-defined.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed);

    // Generator for one Monte Carlo trial: state derived from
    // (base_seed XOR trial_index), passed through splitmix64.
    static Rng for_trial(std::uint64_t base_seed, std::uint64_t trial_index);

    // Uniform on (0, 1]; never returns 0 so log() is safe.
    double uniform();

    // Standard normal N(0, 1).
    double standard_normal();

    // CN(0, 1): real and imaginary parts each N(0, 1/2).
    cdouble standard_complex_normal();

  private:
    std::uint64_t next_u64();

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// n i.i.d. entries ~ CN(0, variance); real/imag parts each N(0, variance/2),
// so E|x|^2 == variance. variance == 0 yields the zero vector.
cvec sample_cscg_vector(std::size_t n, double variance, Rng &rng);

// e^x * E1(x) for x > 0, relative error <= 1e-10. Series for x <= 1,
// modified Lentz continued fraction for x > 1; the scaled form never
// evaluates e^x on its own, so large x cannot overflow.
double exp_scaled_e1(double x);

// Closed form of the Rayleigh-fading ergodic rate
//   integral_0^inf log2(1 + beta*x) e^{-x} dx = e^{1/beta} E1(1/beta) log2(e),
// in bits per channel use. beta == 0 maps to 0 by continuity.
double ergodic_rayleigh_rate(double beta);

// sum_m <channels[m], weights[m]> with the first argument conjugated.
cdouble beamformed_sum(const std::vector<cvec> &channels,
                       const std::vector<cvec> &weights);

double norm2(const cvec &v);          // Euclidean norm
double norm_sq(const cvec &v);        // squared Euclidean norm

} // namespace symrad
