// SPDX-License-Identifier: Apache-2.0
//
// symrad: link-level simulator for cell-free symbiotic radio
// Copyright (C) 2026 symrad contributors

#include "symrad/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace symrad {

using nlohmann::json;

namespace {

double require_finite(const json &j, const char *key)
{
    if (!j.is_number())
        throw ConfigError(std::string("config key '") + key + "' must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v))
        throw ConfigError(std::string("config key '") + key + "' must be finite");
    return v;
}

std::uint64_t require_uint(const json &j, const char *key)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw ConfigError(std::string("config key '") + key +
                          "' must be a nonnegative integer");
    return j.get<std::uint64_t>();
}

Position require_position(const json &j, const char *key)
{
    if (!j.is_array() || j.size() != 2)
        throw ConfigError(std::string("config key '") + key + "' must be [x, y]");
    return {require_finite(j[0], key), require_finite(j[1], key)};
}

} // namespace

ScenarioConfig parse_config(const std::string &json_text)
{
    json doc;
    try
    {
        doc = json::parse(json_text);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!doc.is_object())
        throw ConfigError("config root must be a JSON object");

    static const char *known[] = {
        "num_aps", "antennas_per_ap", "ap_positions", "receiver_position",
        "bd_position", "transmit_power", "training_power", "noise_power",
        "reflection_coefficient", "alpha", "tau1", "tau2", "wavelength",
        "pathloss_exp_ap", "pathloss_exp_bd", "rho_grid", "num_trials", "seed",
        "frame_length"};
    for (const auto &item : doc.items())
    {
        const auto &k = item.key();
        if (std::find_if(std::begin(known), std::end(known),
                         [&](const char *s) { return k == s; }) == std::end(known))
            throw ConfigError("unknown config key '" + k + "'");
    }

    ScenarioConfig cfg = default_config();
    bool num_aps_given = false;
    bool positions_given = false;

    if (doc.contains("num_aps"))
    {
        cfg.num_aps = static_cast<std::size_t>(require_uint(doc["num_aps"], "num_aps"));
        num_aps_given = true;
    }
    if (doc.contains("antennas_per_ap"))
        cfg.antennas_per_ap =
            static_cast<std::size_t>(require_uint(doc["antennas_per_ap"], "antennas_per_ap"));
    if (doc.contains("ap_positions"))
    {
        const auto &arr = doc["ap_positions"];
        if (!arr.is_array() || arr.empty())
            throw ConfigError("config key 'ap_positions' must be a nonempty array");
        cfg.ap_positions.clear();
        for (const auto &p : arr)
            cfg.ap_positions.push_back(require_position(p, "ap_positions"));
        positions_given = true;
        if (!num_aps_given)
            cfg.num_aps = cfg.ap_positions.size();
    }
    if (num_aps_given && !positions_given)
    {
        const auto side = static_cast<std::size_t>(
            std::llround(std::sqrt(static_cast<double>(cfg.num_aps))));
        if (side * side != cfg.num_aps)
            throw ConfigError("num_aps without ap_positions must be a perfect square "
                              "(APs are laid out on a grid)");
        cfg.ap_positions = grid_positions(side, 1000.0);
    }
    if (doc.contains("receiver_position"))
        cfg.receiver_position = require_position(doc["receiver_position"],
                                                 "receiver_position");
    if (doc.contains("bd_position"))
        cfg.bd_position = require_position(doc["bd_position"], "bd_position");
    if (doc.contains("transmit_power"))
        cfg.transmit_power = require_finite(doc["transmit_power"], "transmit_power");
    if (doc.contains("training_power"))
        cfg.training_power = require_finite(doc["training_power"], "training_power");
    if (doc.contains("noise_power"))
        cfg.noise_power = require_finite(doc["noise_power"], "noise_power");
    if (doc.contains("reflection_coefficient") && doc.contains("alpha"))
        throw ConfigError("give either reflection_coefficient or alpha, not both");
    if (doc.contains("reflection_coefficient"))
        cfg.reflection_coefficient =
            require_finite(doc["reflection_coefficient"], "reflection_coefficient");
    if (doc.contains("alpha"))
        cfg.reflection_coefficient = require_finite(doc["alpha"], "alpha");
    if (doc.contains("tau1"))
        cfg.tau1 = require_uint(doc["tau1"], "tau1");
    if (doc.contains("tau2"))
        cfg.tau2 = require_uint(doc["tau2"], "tau2");
    if (doc.contains("wavelength"))
        cfg.wavelength = require_finite(doc["wavelength"], "wavelength");
    if (doc.contains("pathloss_exp_ap"))
        cfg.pathloss_exp_ap = require_finite(doc["pathloss_exp_ap"], "pathloss_exp_ap");
    if (doc.contains("pathloss_exp_bd"))
        cfg.pathloss_exp_bd = require_finite(doc["pathloss_exp_bd"], "pathloss_exp_bd");
    if (doc.contains("rho_grid"))
    {
        const auto &arr = doc["rho_grid"];
        if (!arr.is_array() || arr.empty())
            throw ConfigError("config key 'rho_grid' must be a nonempty array");
        cfg.rho_grid.clear();
        for (const auto &r : arr)
            cfg.rho_grid.push_back(require_finite(r, "rho_grid"));
    }
    if (doc.contains("num_trials"))
        cfg.num_trials =
            static_cast<std::size_t>(require_uint(doc["num_trials"], "num_trials"));
    if (doc.contains("seed"))
        cfg.seed = require_uint(doc["seed"], "seed");
    if (doc.contains("frame_length"))
        cfg.frame_length = require_uint(doc["frame_length"], "frame_length");

    validate_config(cfg);
    return cfg;
}

ScenarioConfig load_config(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const ScenarioConfig &c)
{
    json doc;
    doc["num_aps"] = c.num_aps;
    doc["antennas_per_ap"] = c.antennas_per_ap;
    json pos = json::array();
    for (const auto &p : c.ap_positions)
        pos.push_back({p.first, p.second});
    doc["ap_positions"] = pos;
    doc["receiver_position"] = {c.receiver_position.first, c.receiver_position.second};
    doc["bd_position"] = {c.bd_position.first, c.bd_position.second};
    doc["transmit_power"] = c.transmit_power;
    doc["training_power"] = c.training_power;
    doc["noise_power"] = c.noise_power;
    doc["reflection_coefficient"] = c.reflection_coefficient;
    doc["tau1"] = c.tau1;
    doc["tau2"] = c.tau2;
    doc["wavelength"] = c.wavelength;
    doc["pathloss_exp_ap"] = c.pathloss_exp_ap;
    doc["pathloss_exp_bd"] = c.pathloss_exp_bd;
    doc["rho_grid"] = c.rho_grid;
    doc["num_trials"] = c.num_trials;
    doc["seed"] = c.seed;
    if (c.frame_length != 0)
        doc["frame_length"] = c.frame_length;
    return doc.dump(2) + "\n";
}

namespace {

std::string fmt6(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

std::string render_csv(const std::vector<LabeledRegion> &regions,
                       const ScenarioConfig &config)
{
    if (regions.empty())
        throw std::invalid_argument("render_csv: no regions");

    const bool throughput = config.frame_length != 0;
    double overhead = 1.0;
    if (throughput)
        overhead = (static_cast<double>(config.frame_length) -
                    static_cast<double>(config.tau1) -
                    static_cast<double>(config.tau2)) /
                   static_cast<double>(config.frame_length);

    std::vector<const LabeledRegion *> ordered;
    ordered.reserve(regions.size());
    for (const auto &r : regions)
        ordered.push_back(&r);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const LabeledRegion *a, const LabeledRegion *b) {
                         return a->value < b->value;
                     });

    std::string out =
        "sweep_param,sweep_value,rho,primary_bound_bpcu,secondary_bound_bpcu,"
        "primary_perfect_bpcu,secondary_perfect_bpcu,primary_stderr,secondary_stderr";
    if (throughput)
        out += ",effective_primary_bound_bpcu,effective_secondary_bound_bpcu";
    out += '\n';

    for (const auto *lr : ordered)
    {
        const RateRegion &rr = lr->region;
        std::vector<std::size_t> idx(rr.rho_grid.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return rr.rho_grid[a] < rr.rho_grid[b];
        });
        for (std::size_t i : idx)
        {
            out += lr->param;
            out += ',';
            out += fmt6(lr->value);
            out += ',';
            out += fmt6(rr.rho_grid[i]);
            out += ',';
            out += fmt6(rr.mean_primary_bound[i]);
            out += ',';
            out += fmt6(rr.mean_secondary_bound[i]);
            out += ',';
            out += fmt6(rr.mean_primary_perfect[i]);
            out += ',';
            out += fmt6(rr.mean_secondary_perfect[i]);
            out += ',';
            out += fmt6(rr.stderr_primary_bound[i]);
            out += ',';
            out += fmt6(rr.stderr_secondary_bound[i]);
            if (throughput)
            {
                out += ',';
                out += fmt6(overhead * rr.mean_primary_bound[i]);
                out += ',';
                out += fmt6(overhead * rr.mean_secondary_bound[i]);
            }
            out += '\n';
        }
    }
    return out;
}

void emit_csv(const std::vector<LabeledRegion> &regions,
              const ScenarioConfig &config, const std::string &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write CSV file '" + path + "'");
    out << render_csv(regions, config);
    if (!out)
        throw std::runtime_error("error while writing CSV file '" + path + "'");
}

void emit_plot_script(const std::string &csv_path, const std::string &out_path)
{
    std::ifstream check(csv_path, std::ios::binary);
    if (!check)
        throw std::runtime_error("emit_plot_script: CSV file '" + csv_path +
                                 "' does not exist");
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write plot script '" + out_path + "'");

    out << "#!/usr/bin/env python3\n"
           "# Rate-region plot: secondary rate (x) vs primary rate (y), one\n"
           "# curve per sweep value. Generated file; the CSV path is baked in.\n"
           "import csv\n"
           "from collections import defaultdict\n"
           "\n"
           "import matplotlib\n"
           "matplotlib.use(\"Agg\")\n"
           "import matplotlib.pyplot as plt\n"
           "\n"
           "csv_path = \""
        << csv_path
        << "\"\n"
           "curves = defaultdict(list)\n"
           "with open(csv_path, newline=\"\") as fh:\n"
           "    for row in csv.DictReader(fh):\n"
           "        key = (row[\"sweep_param\"], float(row[\"sweep_value\"]))\n"
           "        curves[key].append(\n"
           "            (float(row[\"rho\"]),\n"
           "             float(row[\"secondary_bound_bpcu\"]),\n"
           "             float(row[\"primary_bound_bpcu\"])))\n"
           "\n"
           "fig, ax = plt.subplots(figsize=(6.5, 5))\n"
           "for (param, value), pts in sorted(curves.items()):\n"
           "    pts.sort()\n"
           "    xs = [p[1] for p in pts]\n"
           "    ys = [p[2] for p in pts]\n"
           "    label = f\"{param}={value:g}\" if param != \"none\" else \"region\"\n"
           "    ax.plot(xs, ys, marker=\"o\", label=label)\n"
           "ax.set_xlabel(\"secondary rate [bpcu]\")\n"
           "ax.set_ylabel(\"primary rate [bpcu]\")\n"
           "ax.legend()\n"
           "ax.grid(True, alpha=0.3)\n"
           "out_png = csv_path.rsplit(\".\", 1)[0] + \".png\"\n"
           "fig.savefig(out_png, dpi=150, bbox_inches=\"tight\")\n"
           "print(out_png)\n";
    if (!out)
        throw std::runtime_error("error while writing plot script '" + out_path + "'");
}

void write_manifest(const RunManifest &manifest, const std::string &path)
{
    char digest[20];
    std::snprintf(digest, sizeof(digest), "%016llx",
                  static_cast<unsigned long long>(manifest.config_digest));
    json doc;
    doc["config_digest"] = digest;
    doc["version"] = manifest.version;
    doc["wall_seconds"] = manifest.wall_seconds;
    doc["output_paths"] = manifest.output_paths;
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write manifest '" + path + "'");
    out << doc.dump(2) << "\n";
}

double dbm_to_watts(double dbm)
{
    if (!std::isfinite(dbm))
        throw std::invalid_argument("dbm_to_watts: value must be finite");
    return std::pow(10.0, dbm / 10.0) * 1e-3;
}

double watts_to_dbm(double watts)
{
    if (!(watts > 0.0) || !std::isfinite(watts))
        throw std::invalid_argument("watts_to_dbm: value must be finite and > 0");
    return 10.0 * std::log10(watts / 1e-3);
}

} // namespace symrad
