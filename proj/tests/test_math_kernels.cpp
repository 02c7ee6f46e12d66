// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support/oracles.hpp"
#include "symrad/math_kernels.hpp"

#include <cmath>
#include <vector>

using namespace symrad;

TEST_CASE("rng streams are deterministic and seed-sensitive")
{
    Rng a(42), b(42), c(43);
    bool all_equal = true;
    bool any_differ = false;
    for (int i = 0; i < 1000; ++i)
    {
        const double x = a.uniform();
        all_equal = all_equal && (x == b.uniform());
        any_differ = any_differ || (x != c.uniform());
    }
    CHECK(all_equal);
    CHECK(any_differ);
}

TEST_CASE("rng uniform lies in (0, 1]")
{
    Rng rng(7);
    double lo = 1.0, hi = 0.0;
    for (int i = 0; i < 200000; ++i)
    {
        const double u = rng.uniform();
        CHECK(u > 0.0);
        CHECK(u <= 1.0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    CHECK(lo < 0.01);
    CHECK(hi > 0.99);
}

TEST_CASE("rng for_trial decorrelates adjacent trial indices")
{
    Rng a = Rng::for_trial(12345, 0);
    Rng b = Rng::for_trial(12345, 1);
    int same = 0;
    for (int i = 0; i < 100; ++i)
        same += (a.uniform() == b.uniform());
    CHECK(same == 0);

    Rng c = Rng::for_trial(12345, 1);
    Rng d = Rng::for_trial(12345, 1);
    for (int i = 0; i < 100; ++i)
        CHECK(c.standard_normal() == d.standard_normal());
}

TEST_CASE("standard normal has the right first two moments")
{
    Rng rng(11);
    const int n = 400000;
    double s1 = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i)
    {
        const double x = rng.standard_normal();
        s1 += x;
        s2 += x * x;
    }
    const double mean = s1 / n;
    const double var = s2 / n - mean * mean;
    // 5 standard errors: se(mean) = 1/sqrt(n), se(var) ~ sqrt(2/n).
    CHECK(std::abs(mean) < 5.0 / std::sqrt(double(n)));
    CHECK(std::abs(var - 1.0) < 5.0 * std::sqrt(2.0 / double(n)));
}

TEST_CASE("cscg vector: moments, zero variance, argument checks")
{
    Rng rng(3);

    SUBCASE("per-entry second moment matches the requested variance")
    {
        const double variance = 2.0;
        const int draws = 100000;
        const std::size_t n = 3;
        std::vector<double> re_acc(n, 0.0), im_acc(n, 0.0), p_acc(n, 0.0);
        cdouble cross(0.0, 0.0);
        for (int d = 0; d < draws; ++d)
        {
            const cvec v = sample_cscg_vector(n, variance, rng);
            for (std::size_t i = 0; i < n; ++i)
            {
                re_acc[i] += v[i].real();
                im_acc[i] += v[i].imag();
                p_acc[i] += std::norm(v[i]);
            }
            cross += v[0] * std::conj(v[1]);
        }
        // E|x|^2 = variance, with se ~ variance / sqrt(draws).
        const double se_p = variance / std::sqrt(double(draws));
        const double se_m = std::sqrt(variance / 2.0 / double(draws));
        for (std::size_t i = 0; i < n; ++i)
        {
            CHECK(std::abs(p_acc[i] / draws - variance) < 5.0 * se_p);
            CHECK(std::abs(re_acc[i] / draws) < 5.0 * se_m);
            CHECK(std::abs(im_acc[i] / draws) < 5.0 * se_m);
        }
        CHECK(std::abs(cross / double(draws)) < 5.0 * se_p);
    }

    SUBCASE("zero variance yields the zero vector without consuming draws")
    {
        Rng probe(99), ref(99);
        const cvec z = sample_cscg_vector(4, 0.0, probe);
        for (const auto &v : z)
            CHECK(v == cdouble(0.0, 0.0));
        CHECK(probe.uniform() == ref.uniform());
    }

    SUBCASE("rejects bad arguments")
    {
        CHECK_THROWS_AS(sample_cscg_vector(0, 1.0, rng), std::invalid_argument);
        CHECK_THROWS_AS(sample_cscg_vector(2, -1.0, rng), std::invalid_argument);
        CHECK_THROWS_AS(sample_cscg_vector(2, std::nan(""), rng),
                        std::invalid_argument);
    }
}

TEST_CASE("exp_scaled_e1: pinned values")
{
    CHECK(exp_scaled_e1(1.0) == doctest::Approx(0.596347).epsilon(2e-6));
    CHECK(exp_scaled_e1(1.0) ==
          doctest::Approx(0.5963473623231941).epsilon(1e-12));
    // High-precision value; some tabulations round this to 2.01467.
    CHECK(exp_scaled_e1(0.1) ==
          doctest::Approx(2.0146425447084515).epsilon(1e-11));
    CHECK(exp_scaled_e1(0.1) == doctest::Approx(2.01467).epsilon(5e-5));
}

TEST_CASE("exp_scaled_e1 matches quadrature across ten decades")
{
    for (int i = 0; i <= 400; ++i)
    {
        const double x = oracle::loguniform(1e-4, 1e6, i / 400.0);
        const double got = exp_scaled_e1(x);
        const double want = oracle::exp_scaled_e1_quadrature(x);
        CHECK(std::abs(got - want) <= 1e-10 * std::abs(want));
    }
}

TEST_CASE("exp_scaled_e1: branch seam, asymptote, domain")
{
    // The series/continued-fraction handoff at x = 1 must be seamless.
    const double left = exp_scaled_e1(1.0 - 1e-12);
    const double mid = exp_scaled_e1(1.0);
    const double right = exp_scaled_e1(1.0 + 1e-12);
    CHECK(std::abs(left - mid) <= 1e-10 * mid);
    CHECK(std::abs(right - mid) <= 1e-10 * mid);

    // x * e^x * E1(x) -> 1 as x -> infinity; no overflow on the way.
    const double big = exp_scaled_e1(1e8);
    CHECK(std::isfinite(big));
    CHECK(1e8 * big == doctest::Approx(1.0).epsilon(1e-7));

    CHECK_THROWS_AS(exp_scaled_e1(0.0), std::invalid_argument);
    CHECK_THROWS_AS(exp_scaled_e1(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(exp_scaled_e1(std::nan("")), std::invalid_argument);
}

TEST_CASE("ergodic_rayleigh_rate: pinned values")
{
    CHECK(ergodic_rayleigh_rate(0.0) == 0.0);
    CHECK(ergodic_rayleigh_rate(1.0) ==
          doctest::Approx(0.8603473822708859).epsilon(1e-12));
    CHECK(ergodic_rayleigh_rate(10.0) == doctest::Approx(2.9066).epsilon(1e-4));
    CHECK(ergodic_rayleigh_rate(10.0) ==
          doctest::Approx(2.9065148084148045).epsilon(1e-11));
    CHECK(ergodic_rayleigh_rate(1e-3) ==
          doctest::Approx(0.0014412552226164387).epsilon(1e-10));
}

TEST_CASE("ergodic_rayleigh_rate: quadrature agreement, monotonicity, Jensen")
{
    double prev = 0.0;
    for (int i = 0; i <= 300; ++i)
    {
        const double beta = oracle::loguniform(1e-3, 1e3, i / 300.0);
        const double got = ergodic_rayleigh_rate(beta);
        const double want = oracle::ergodic_rate_quadrature(beta);
        CHECK(std::abs(got - want) <= 1e-8 * std::abs(want));
        CHECK(got > prev);               // strictly increasing in beta
        CHECK(got < std::log2(1.0 + beta)); // strict Jensen gap
        prev = got;
    }
    CHECK_THROWS_AS(ergodic_rayleigh_rate(-1e-9), std::invalid_argument);
}

TEST_CASE("beamformed_sum: conjugation, additivity, shape checks")
{
    const std::vector<cvec> ch1 = {{cdouble(0.0, 1.0), cdouble(0.0, 0.0)}};
    const std::vector<cvec> w1 = {{cdouble(1.0, 0.0), cdouble(0.0, 0.0)}};
    CHECK(beamformed_sum(ch1, w1) == cdouble(0.0, -1.0));

    const std::vector<cvec> ch2 = {{cdouble(1.0, 2.0)}, {cdouble(3.0, -1.0)}};
    const std::vector<cvec> w2 = {{cdouble(2.0, 0.0)}, {cdouble(0.0, 1.0)}};
    // conj(1+2i)*2 + conj(3-i)*i = (2-4i) + (3+i)*i = (2-4i) + (-1+3i)
    CHECK(beamformed_sum(ch2, w2) == cdouble(1.0, -1.0));

    // Additivity over APs.
    const cdouble first = beamformed_sum({ch2[0]}, {w2[0]});
    const cdouble second = beamformed_sum({ch2[1]}, {w2[1]});
    CHECK(beamformed_sum(ch2, w2) == first + second);

    CHECK_THROWS_AS(beamformed_sum(ch2, w1), std::invalid_argument);
    const std::vector<cvec> ragged = {{cdouble(1.0, 0.0)},
                                      {cdouble(1.0, 0.0), cdouble(0.0, 0.0)}};
    CHECK_THROWS_AS(beamformed_sum(ragged, w2), std::invalid_argument);
}

TEST_CASE("norms")
{
    const cvec v = {cdouble(3.0, 0.0), cdouble(0.0, 4.0)};
    CHECK(norm_sq(v) == doctest::Approx(25.0).epsilon(1e-15));
    CHECK(norm2(v) == doctest::Approx(5.0).epsilon(1e-15));
}
