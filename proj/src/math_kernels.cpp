// SPDX-License-Identifier: Apache-2.0
//
// symrad: link-level simulator for cell-free symbiotic radio
// Copyright (C) 2026 symrad contributors

#include "symrad/math_kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace symrad {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// xoshiro256++, seeded through a splitmix64 stream as recommended by its
// authors. Chosen over std::mt19937_64 for the smaller state; both are
// bit-reproducible across platforms, the distributions in <random> are not,
// hence the explicit Box-Muller below.
Rng::Rng(std::uint64_t seed)
{
    std::uint64_t s = seed;
    for (auto &w : state_)
    {
        s += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        w = z ^ (z >> 31);
    }
}

Rng Rng::for_trial(std::uint64_t base_seed, std::uint64_t trial_index)
{
    return Rng(splitmix64(base_seed ^ trial_index));
}

static inline std::uint64_t rotl(std::uint64_t x, int k)
{
    return (x << k) | (x >> (64 - k));
}

std::uint64_t Rng::next_u64()
{
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::uniform()
{
    // 53 random bits mapped to (0, 1]
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double Rng::standard_normal()
{
    if (has_spare_)
    {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

cdouble Rng::standard_complex_normal()
{
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1)); // per-part variance 1/2
    const double a = 6.283185307179586476925286766559 * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

cvec sample_cscg_vector(std::size_t n, double variance, Rng &rng)
{
    if (n == 0)
        throw std::invalid_argument("sample_cscg_vector: n must be positive");
    if (!(variance >= 0.0) || !std::isfinite(variance))
        throw std::invalid_argument("sample_cscg_vector: variance must be finite and >= 0");

    cvec out(n);
    if (variance == 0.0)
        return out;
    const double scale = std::sqrt(variance);
    for (auto &x : out)
        x = scale * rng.standard_complex_normal();
    return out;
}

double exp_scaled_e1(double x)
{
    if (!std::isfinite(x) || x <= 0.0)
        throw std::invalid_argument("exp_scaled_e1: x must be finite and > 0");

    if (x <= 1.0)
    {
        // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k * k!)
        constexpr double euler_gamma = 0.57721566490153286060651209008240243;
        double sum = -euler_gamma - std::log(x);
        double term = 1.0;
        for (int k = 1; k <= 40; ++k)
        {
            term *= -x / k;
            const double contrib = -term / k;
            sum += contrib;
            if (std::abs(contrib) < 1e-18 * std::abs(sum))
                break;
        }
        return std::exp(x) * sum;
    }

    // Modified Lentz evaluation of the continued fraction
    //   e^x E1(x) = 1 / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))
    // which yields the scaled value directly (no overflow for large x).
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 200; ++i)
    {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = a * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + a / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15)
            break;
    }
    return h;
}

double ergodic_rayleigh_rate(double beta)
{
    if (!std::isfinite(beta) || beta < 0.0)
        throw std::invalid_argument("ergodic_rayleigh_rate: beta must be finite and >= 0");
    if (beta == 0.0)
        return 0.0;
    constexpr double log2e = 1.4426950408889634073599246810019;
    return exp_scaled_e1(1.0 / beta) * log2e;
}

cdouble beamformed_sum(const std::vector<cvec> &channels,
                       const std::vector<cvec> &weights)
{
    if (channels.size() != weights.size())
        throw std::invalid_argument("beamformed_sum: list length mismatch");
    cdouble acc{0.0, 0.0};
    for (std::size_t m = 0; m < channels.size(); ++m)
    {
        const auto &a = channels[m];
        const auto &w = weights[m];
        if (a.size() != w.size())
            throw std::invalid_argument("beamformed_sum: vector dimension mismatch");
        for (std::size_t i = 0; i < a.size(); ++i)
            acc += std::conj(a[i]) * w[i];
    }
    return acc;
}

double norm_sq(const cvec &v)
{
    double s = 0.0;
    for (const auto &x : v)
        s += std::norm(x);
    return s;
}

double norm2(const cvec &v)
{
    return std::sqrt(norm_sq(v));
}

} // namespace symrad
