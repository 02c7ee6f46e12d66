// SPDX-License-Identifier: Apache-2.0
//
// symrad: link-level simulator for cell-free symbiotic radio
// Copyright (C) 2026 symrad contributors

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symrad {

// Raised for invalid experiment configuration (bad values, bad geometry,
// malformed config files). The CLI maps it to exit code 1.
class ConfigError : public std::runtime_error
{
  public:
    explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

using Position = std::pair<double, double>; // (x, y) in meters

// Full experiment description. Defaults reproduce the reference setup:
// 16 four-antenna APs on a 4x4 grid with coordinates {-375,-125,125,375} m,
// backscatter device at the origin, receiver at (5, 0), 130 dB transmit- and
// training-side SNR (p = p_t = 0.1 W, sigma2 = 1e-14 W), tau1 = tau2 = 100,
// rho swept 0..1 in steps of 0.1, 1000 trials.
struct ScenarioConfig
{
    std::size_t num_aps = 16;
    std::size_t antennas_per_ap = 4;
    std::vector<Position> ap_positions;        // filled by default_config()
    Position receiver_position{5.0, 0.0};
    Position bd_position{0.0, 0.0};
    double transmit_power = 0.1;               // p, watts
    double training_power = 0.1;               // p_t, watts
    double noise_power = 1e-14;                // sigma^2, watts
    double reflection_coefficient = 1.0;       // alpha in (0, 1]
    std::uint64_t tau1 = 100;                  // phase-1 pilot symbols
    std::uint64_t tau2 = 100;                  // phase-2 pilot symbols
    double wavelength = 0.0857;                // meters
    double pathloss_exp_ap = 2.7;              // AP->rx and AP->BD exponent
    double pathloss_exp_bd = 2.1;              // BD->rx exponent
    std::vector<double> rho_grid;              // filled by default_config()
    std::size_t num_trials = 1000;
    std::uint64_t seed = 12345;
    std::uint64_t frame_length = 0;            // optional; 0 = no throughput column
};

// Per-AP large-scale gains. epsilon[m] == upsilon * zeta[m] exactly.
struct LinkGains
{
    std::vector<double> b;       // AP -> receiver
    std::vector<double> zeta;    // AP -> BD (per-entry variance of f_m)
    double upsilon = 0.0;        // E|q|^2, BD -> receiver
    std::vector<double> epsilon; // cascaded per-entry variance
};

// side_count^2 points at the cell centers of a uniform grid over a
// area_side x area_side square centered on the origin; row-major order
// (y ascending outer, x ascending inner).
std::vector<Position> grid_positions(std::size_t side_count, double area_side);

// (wavelength / 4pi)^2 * distance^-gamma
double path_loss(double distance, double gamma, double wavelength);

// Default reference scenario (see ScenarioConfig comment).
ScenarioConfig default_config();

// Validates every ScenarioConfig invariant; throws ConfigError naming the
// offending field.
void validate_config(const ScenarioConfig &config);

// Large-scale gains for every link in the scenario.
LinkGains build_link_gains(const ScenarioConfig &config);

// Canonical fixed-order text form of a config (full double precision).
// Two configs serialize identically iff every field matches, regardless of
// how they were loaded, so the digest below is stable under key reordering
// of the source file.
std::string canonical_config_string(const ScenarioConfig &config);

// FNV-1a 64-bit digest of canonical_config_string.
std::uint64_t config_digest(const ScenarioConfig &config);

} // namespace symrad
