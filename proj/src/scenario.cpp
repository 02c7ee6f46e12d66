// SPDX-License-Identifier: Apache-2.0
//
// symrad: link-level simulator for cell-free symbiotic radio
// Copyright (C) 2026 symrad contributors

#include "symrad/scenario.hpp"

#include <cmath>
#include <cstdio>

namespace symrad {

std::vector<Position> grid_positions(std::size_t side_count, double area_side)
{
    if (side_count == 0)
        throw ConfigError("grid_positions: side_count must be >= 1");
    if (!(area_side > 0.0) || !std::isfinite(area_side))
        throw ConfigError("grid_positions: area_side must be finite and > 0");

    // Signed offset from the center keeps the layout exactly symmetric under
    // negation (the k-th center is minus the (side-1-k)-th, bit for bit).
    const double half_cell = 0.5 * area_side / static_cast<double>(side_count);
    std::vector<double> axis(side_count);
    for (std::size_t k = 0; k < side_count; ++k)
        axis[k] = static_cast<double>(2 * static_cast<std::ptrdiff_t>(k) + 1 -
                                      static_cast<std::ptrdiff_t>(side_count)) *
                  half_cell;

    std::vector<Position> out;
    out.reserve(side_count * side_count);
    for (std::size_t iy = 0; iy < side_count; ++iy)
        for (std::size_t ix = 0; ix < side_count; ++ix)
            out.emplace_back(axis[ix], axis[iy]);
    return out;
}

double path_loss(double distance, double gamma, double wavelength)
{
    if (!(distance > 0.0) || !std::isfinite(distance))
        throw ConfigError("path_loss: distance must be finite and > 0 (co-located nodes)");
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw ConfigError("path_loss: gamma must be finite and > 0");
    if (!(wavelength > 0.0) || !std::isfinite(wavelength))
        throw ConfigError("path_loss: wavelength must be finite and > 0");

    constexpr double four_pi = 12.566370614359172953850573533118;
    const double beta0 = (wavelength / four_pi) * (wavelength / four_pi);
    return beta0 * std::pow(distance, -gamma);
}

ScenarioConfig default_config()
{
    ScenarioConfig cfg;
    // cell centers of a 4x4 grid over 1000 m: exactly {-375,-125,125,375}
    cfg.ap_positions = grid_positions(4, 1000.0);
    cfg.rho_grid.resize(11);
    for (int i = 0; i <= 10; ++i)
        cfg.rho_grid[static_cast<std::size_t>(i)] = 0.1 * i;
    return cfg;
}

static double distance(const Position &a, const Position &b)
{
    return std::hypot(a.first - b.first, a.second - b.second);
}

void validate_config(const ScenarioConfig &config)
{
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };

    if (config.num_aps == 0)
        throw ConfigError("num_aps must be >= 1");
    if (config.antennas_per_ap == 0)
        throw ConfigError("antennas_per_ap must be >= 1");
    if (config.ap_positions.size() != config.num_aps)
        throw ConfigError("ap_positions must list exactly num_aps positions");
    if (!positive(config.transmit_power))
        throw ConfigError("transmit_power must be > 0");
    if (!positive(config.training_power))
        throw ConfigError("training_power must be > 0");
    if (!positive(config.noise_power))
        throw ConfigError("noise_power must be > 0");
    if (!std::isfinite(config.reflection_coefficient) ||
        config.reflection_coefficient <= 0.0 ||
        config.reflection_coefficient > 1.0)
        throw ConfigError("reflection_coefficient must lie in (0, 1]");
    if (config.tau1 == 0)
        throw ConfigError("tau1 must be >= 1");
    if (config.tau2 == 0)
        throw ConfigError("tau2 must be >= 1");
    if (!positive(config.wavelength))
        throw ConfigError("wavelength must be > 0");
    if (!positive(config.pathloss_exp_ap))
        throw ConfigError("pathloss_exp_ap must be > 0");
    if (!positive(config.pathloss_exp_bd))
        throw ConfigError("pathloss_exp_bd must be > 0");
    if (config.rho_grid.empty())
        throw ConfigError("rho_grid must be nonempty");
    for (double rho : config.rho_grid)
        if (!std::isfinite(rho) || rho < 0.0 || rho > 1.0)
            throw ConfigError("rho_grid values must lie in [0, 1]");
    if (config.num_trials == 0)
        throw ConfigError("num_trials must be >= 1");
    if (config.frame_length != 0 && config.frame_length <= config.tau1 + config.tau2)
        throw ConfigError("frame_length must exceed tau1 + tau2 when set");

    for (std::size_t m = 0; m < config.ap_positions.size(); ++m)
    {
        const auto &ap = config.ap_positions[m];
        if (!std::isfinite(ap.first) || !std::isfinite(ap.second))
            throw ConfigError("ap_positions must be finite");
        if (distance(ap, config.receiver_position) <= 0.0)
            throw ConfigError("ap_positions[" + std::to_string(m) +
                              "] coincides with the receiver");
        if (distance(ap, config.bd_position) <= 0.0)
            throw ConfigError("ap_positions[" + std::to_string(m) +
                              "] coincides with the backscatter device");
    }
    if (distance(config.bd_position, config.receiver_position) <= 0.0)
        throw ConfigError("bd_position coincides with the receiver");
}

LinkGains build_link_gains(const ScenarioConfig &config)
{
    validate_config(config);

    LinkGains gains;
    const std::size_t M = config.num_aps;
    gains.b.resize(M);
    gains.zeta.resize(M);
    gains.epsilon.resize(M);
    gains.upsilon = path_loss(distance(config.bd_position, config.receiver_position),
                              config.pathloss_exp_bd, config.wavelength);
    for (std::size_t m = 0; m < M; ++m)
    {
        gains.b[m] = path_loss(distance(config.ap_positions[m], config.receiver_position),
                               config.pathloss_exp_ap, config.wavelength);
        gains.zeta[m] = path_loss(distance(config.ap_positions[m], config.bd_position),
                                  config.pathloss_exp_ap, config.wavelength);
        gains.epsilon[m] = gains.upsilon * gains.zeta[m];
    }
    return gains;
}

static void append_double(std::string &out, double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
    out += ';';
}

std::string canonical_config_string(const ScenarioConfig &c)
{
    std::string s;
    s.reserve(1024);
    s += "num_aps=" + std::to_string(c.num_aps) + ';';
    s += "antennas_per_ap=" + std::to_string(c.antennas_per_ap) + ';';
    s += "ap_positions=";
    for (const auto &p : c.ap_positions)
    {
        append_double(s, p.first);
        append_double(s, p.second);
    }
    s += "receiver_position=";
    append_double(s, c.receiver_position.first);
    append_double(s, c.receiver_position.second);
    s += "bd_position=";
    append_double(s, c.bd_position.first);
    append_double(s, c.bd_position.second);
    s += "transmit_power=";
    append_double(s, c.transmit_power);
    s += "training_power=";
    append_double(s, c.training_power);
    s += "noise_power=";
    append_double(s, c.noise_power);
    s += "reflection_coefficient=";
    append_double(s, c.reflection_coefficient);
    s += "tau1=" + std::to_string(c.tau1) + ';';
    s += "tau2=" + std::to_string(c.tau2) + ';';
    s += "wavelength=";
    append_double(s, c.wavelength);
    s += "pathloss_exp_ap=";
    append_double(s, c.pathloss_exp_ap);
    s += "pathloss_exp_bd=";
    append_double(s, c.pathloss_exp_bd);
    s += "rho_grid=";
    for (double r : c.rho_grid)
        append_double(s, r);
    s += "num_trials=" + std::to_string(c.num_trials) + ';';
    s += "seed=" + std::to_string(c.seed) + ';';
    s += "frame_length=" + std::to_string(c.frame_length) + ';';
    return s;
}

std::uint64_t config_digest(const ScenarioConfig &config)
{
    const std::string s = canonical_config_string(config);
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (unsigned char ch : s)
    {
        hash ^= ch;
        hash *= 0x100000001B3ULL;
    }
    return hash;
}

} // namespace symrad
