// SPDX-License-Identifier: Apache-2.0
//
// symrad: link-level simulator for cell-free symbiotic radio
// Copyright (C) 2026 symrad contributors

#pragma once

#include "symrad/montecarlo.hpp"

namespace symrad {

inline constexpr const char *tool_version = "0.1.0";

// Provenance record written next to each result file.
struct RunManifest
{
    std::uint64_t config_digest = 0;
    std::string version;
    double wall_seconds = 0.0;
    std::vector<std::string> output_paths;
};

// Parses a JSON config document. Keys match ScenarioConfig field names in
// snake_case; absent keys take the reference-scenario defaults; unknown keys
// are rejected. ap_positions may be omitted when num_aps is a perfect
// square, in which case the APs are laid out with grid_positions over the
// default 1000 m area.
ScenarioConfig parse_config(const std::string &json_text);

// parse_config over a file's contents.
ScenarioConfig load_config(const std::string &path);

// Full JSON form of a config; load_config(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig &config);

// CSV for one or more labeled regions. Header:
//   sweep_param,sweep_value,rho,primary_bound_bpcu,secondary_bound_bpcu,
//   primary_perfect_bpcu,secondary_perfect_bpcu,primary_stderr,secondary_stderr
// (one line; stderr columns refer to the bound series). Rows sorted by sweep
// value, then rho, ascending; floats printed with 6 significant digits.
// When the config sets a frame_length, two extension columns
// effective_primary_bound_bpcu,effective_secondary_bound_bpcu append the
// training-overhead-discounted bounds ((T - tau1 - tau2)/T factor).
std::string render_csv(const std::vector<LabeledRegion> &regions,
                       const ScenarioConfig &config);
void emit_csv(const std::vector<LabeledRegion> &regions,
              const ScenarioConfig &config, const std::string &path);

// Standalone matplotlib script that reads the CSV and draws one rate-region
// curve per sweep value (secondary rate on x, primary rate on y).
void emit_plot_script(const std::string &csv_path, const std::string &out_path);

void write_manifest(const RunManifest &manifest, const std::string &path);

// dBm <-> watts conversions for the `dbm` helper subcommand.
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

} // namespace symrad
