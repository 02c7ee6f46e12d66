// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symrad/scenario.hpp"

#include <cmath>
#include <set>

using namespace symrad;

TEST_CASE("grid_positions: pinned layouts")
{
    SUBCASE("2x2 over a 4 m square sits at the cell centers")
    {
        const auto pts = grid_positions(2, 4.0);
        REQUIRE(pts.size() == 4);
        CHECK(pts[0] == Position{-1.0, -1.0});
        CHECK(pts[1] == Position{1.0, -1.0});
        CHECK(pts[2] == Position{-1.0, 1.0});
        CHECK(pts[3] == Position{1.0, 1.0});
    }

    SUBCASE("single point lands on the origin")
    {
        const auto pts = grid_positions(1, 100.0);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0] == Position{0.0, 0.0});
    }

    SUBCASE("4x4 over 1000 m uses coordinates {-375,-125,125,375}")
    {
        const auto pts = grid_positions(4, 1000.0);
        REQUIRE(pts.size() == 16);
        std::set<double> xs, ys;
        for (const auto &p : pts)
        {
            xs.insert(p.first);
            ys.insert(p.second);
        }
        const std::set<double> want = {-375.0, -125.0, 125.0, 375.0};
        CHECK(xs == want);
        CHECK(ys == want);
        // Row-major: x varies fastest, y ascends across rows.
        CHECK(pts[0] == Position{-375.0, -375.0});
        CHECK(pts[1] == Position{-125.0, -375.0});
        CHECK(pts[4] == Position{-375.0, -125.0});
        CHECK(pts[15] == Position{375.0, 375.0});
    }

    SUBCASE("layout is symmetric under negation")
    {
        for (std::size_t side : {2, 3, 5})
        {
            const auto pts = grid_positions(side, 250.0);
            std::set<std::pair<double, double>> as_set(pts.begin(), pts.end());
            for (const auto &p : pts)
                CHECK(as_set.count({-p.first, -p.second}) == 1);
        }
    }

    SUBCASE("zero side count is rejected")
    {
        CHECK_THROWS_AS(grid_positions(0, 10.0), ConfigError);
        CHECK_THROWS_AS(grid_positions(2, 0.0), ConfigError);
    }
}

TEST_CASE("path_loss: pinned values and scaling laws")
{
    // Unit distance isolates the (lambda/4pi)^2 reference gain.
    CHECK(path_loss(1.0, 2.7, 0.0857) ==
          doctest::Approx(4.6510e-5).epsilon(1e-4));
    CHECK(path_loss(1.0, 2.7, 0.0857) ==
          doctest::Approx(4.650952625308209e-05).epsilon(1e-13));
    CHECK(path_loss(5.0, 2.1, 0.0857) ==
          doctest::Approx(1.5838e-6).epsilon(1e-4));
    CHECK(path_loss(5.0, 2.1, 0.0857) ==
          doctest::Approx(1.583816659071092e-06).epsilon(1e-13));

    // Gain scales with lambda^2: halving lambda quarters the gain.
    const double g1 = path_loss(12.0, 2.7, 0.0857);
    const double g2 = path_loss(12.0, 2.7, 2.0 * 0.0857);
    CHECK(g1 / g2 == doctest::Approx(0.25).epsilon(1e-14));

    // Doubling distance scales by 2^-gamma.
    const double near = path_loss(7.0, 2.1, 0.0857);
    const double far = path_loss(14.0, 2.1, 0.0857);
    CHECK(far / near == doctest::Approx(std::pow(2.0, -2.1)).epsilon(1e-13));

    CHECK_THROWS_AS(path_loss(0.0, 2.7, 0.0857), ConfigError);
    CHECK_THROWS_AS(path_loss(-1.0, 2.7, 0.0857), ConfigError);
    CHECK_THROWS_AS(path_loss(1.0, 2.7, 0.0), ConfigError);
}

TEST_CASE("default_config is valid and pins the reference scenario")
{
    const ScenarioConfig cfg = default_config();
    CHECK_NOTHROW(validate_config(cfg));
    CHECK(cfg.num_aps == 16);
    CHECK(cfg.antennas_per_ap == 4);
    CHECK(cfg.ap_positions == grid_positions(4, 1000.0));
    CHECK(cfg.receiver_position == Position{5.0, 0.0});
    CHECK(cfg.bd_position == Position{0.0, 0.0});
    CHECK(cfg.transmit_power == 0.1);
    CHECK(cfg.training_power == 0.1);
    CHECK(cfg.noise_power == 1e-14);
    CHECK(cfg.reflection_coefficient == 1.0);
    CHECK(cfg.tau1 == 100);
    CHECK(cfg.tau2 == 100);
    REQUIRE(cfg.rho_grid.size() == 11);
    for (std::size_t i = 0; i < 11; ++i)
        CHECK(cfg.rho_grid[i] == doctest::Approx(0.1 * double(i)).epsilon(1e-14));
    CHECK(cfg.num_trials == 1000);
}

TEST_CASE("validate_config rejects each broken invariant by name")
{
    auto broken = [](auto mutate) {
        ScenarioConfig c = default_config();
        mutate(c);
        return c;
    };

    CHECK_THROWS_AS(validate_config(broken([](auto &c) { c.num_aps = 0; })),
                    ConfigError);
    CHECK_THROWS_AS(
        validate_config(broken([](auto &c) { c.antennas_per_ap = 0; })),
        ConfigError);
    CHECK_THROWS_AS(
        validate_config(broken([](auto &c) { c.ap_positions.pop_back(); })),
        ConfigError);
    CHECK_THROWS_AS(
        validate_config(broken([](auto &c) { c.transmit_power = 0.0; })),
        ConfigError);
    CHECK_THROWS_AS(
        validate_config(broken([](auto &c) { c.training_power = -1.0; })),
        ConfigError);
    CHECK_THROWS_AS(
        validate_config(broken([](auto &c) { c.noise_power = 0.0; })),
        ConfigError);
    CHECK_THROWS_AS(
        validate_config(broken([](auto &c) { c.reflection_coefficient = 1.5; })),
        ConfigError);
    CHECK_THROWS_AS(
        validate_config(broken([](auto &c) { c.reflection_coefficient = 0.0; })),
        ConfigError);
    CHECK_THROWS_AS(validate_config(broken([](auto &c) { c.tau1 = 0; })),
                    ConfigError);
    CHECK_THROWS_AS(validate_config(broken([](auto &c) { c.tau2 = 0; })),
                    ConfigError);
    CHECK_THROWS_AS(validate_config(broken([](auto &c) { c.wavelength = 0.0; })),
                    ConfigError);
    CHECK_THROWS_AS(validate_config(broken([](auto &c) { c.rho_grid.clear(); })),
                    ConfigError);
    CHECK_THROWS_AS(
        validate_config(broken([](auto &c) { c.rho_grid = {0.5, 1.2}; })),
        ConfigError);
    CHECK_THROWS_AS(validate_config(broken([](auto &c) { c.num_trials = 0; })),
                    ConfigError);
    CHECK_THROWS_AS(validate_config(broken([](auto &c) {
                        c.ap_positions[3] = c.receiver_position;
                    })),
                    ConfigError);
    CHECK_THROWS_AS(validate_config(broken([](auto &c) {
                        c.bd_position = c.receiver_position;
                    })),
                    ConfigError);
    // frame_length, when set, must leave room for data after training.
    CHECK_THROWS_AS(validate_config(broken([](auto &c) { c.frame_length = 200; })),
                    ConfigError);
    CHECK_NOTHROW(validate_config(broken([](auto &c) { c.frame_length = 201; })));

    // Error text names the offending field.
    try
    {
        validate_config(broken([](auto &c) { c.reflection_coefficient = 1.5; }));
        FAIL("expected ConfigError");
    }
    catch (const ConfigError &e)
    {
        CHECK(std::string(e.what()).find("reflection_coefficient") !=
              std::string::npos);
    }
}

TEST_CASE("build_link_gains: geometry to variance mapping")
{
    SUBCASE("reference scenario values")
    {
        const ScenarioConfig cfg = default_config();
        const LinkGains gains = build_link_gains(cfg);
        REQUIRE(gains.b.size() == 16);
        REQUIRE(gains.zeta.size() == 16);
        REQUIRE(gains.epsilon.size() == 16);
        CHECK(gains.upsilon ==
              doctest::Approx(1.583816659071092e-06).epsilon(1e-13));
        for (std::size_t m = 0; m < 16; ++m)
        {
            CHECK(gains.b[m] > 0.0);
            CHECK(gains.epsilon[m] == gains.upsilon * gains.zeta[m]);
        }
    }

    SUBCASE("single AP closed form")
    {
        ScenarioConfig cfg = default_config();
        cfg.num_aps = 1;
        cfg.ap_positions = {{125.0, 125.0}};
        const LinkGains gains = build_link_gains(cfg);
        const double d_rx = std::hypot(125.0 - 5.0, 125.0);
        const double d_bd = std::hypot(125.0, 125.0);
        CHECK(gains.b[0] ==
              doctest::Approx(path_loss(d_rx, 2.7, 0.0857)).epsilon(1e-14));
        CHECK(gains.zeta[0] ==
              doctest::Approx(path_loss(d_bd, 2.7, 0.0857)).epsilon(1e-14));
    }

    SUBCASE("APs equidistant from receiver and BD have b == zeta")
    {
        ScenarioConfig cfg = default_config();
        cfg.num_aps = 2;
        cfg.receiver_position = {10.0, 0.0};
        cfg.bd_position = {-10.0, 0.0};
        cfg.ap_positions = {{0.0, 7.0}, {0.0, -3.0}};
        const LinkGains gains = build_link_gains(cfg);
        CHECK(gains.b[0] == gains.zeta[0]);
        CHECK(gains.b[1] == gains.zeta[1]);
        CHECK(gains.b[0] > gains.b[1] * 0.0); // both positive
    }

    SUBCASE("farther AP has smaller gains")
    {
        ScenarioConfig cfg = default_config();
        cfg.num_aps = 2;
        cfg.ap_positions = {{50.0, 0.0}, {400.0, 0.0}};
        const LinkGains gains = build_link_gains(cfg);
        CHECK(gains.b[0] > gains.b[1]);
        CHECK(gains.zeta[0] > gains.zeta[1]);
        CHECK(gains.epsilon[0] > gains.epsilon[1]);
    }
}

TEST_CASE("config digest is canonical")
{
    const ScenarioConfig a = default_config();
    const ScenarioConfig b = default_config();
    CHECK(canonical_config_string(a) == canonical_config_string(b));
    CHECK(config_digest(a) == config_digest(b));

    ScenarioConfig c = default_config();
    c.seed = 54321;
    CHECK(config_digest(a) != config_digest(c));

    ScenarioConfig d = default_config();
    d.noise_power = 1.0000000000000002e-14; // one ulp away
    CHECK(config_digest(a) != config_digest(d));
}
