// SPDX-License-Identifier: Apache-2.0
//
// Python bindings. The API mirrors the CLI: configs travel as JSON text so
// the exact same parsing, defaulting and validation applies in both front
// ends; results come back as plain dicts/lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symrad/io.hpp"

#include <cstdio>

namespace py = pybind11;
using namespace symrad;

namespace {

std::string digest_hex(std::uint64_t digest)
{
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(digest));
    return buf;
}

py::dict region_to_dict(const RateRegion &r)
{
    py::dict d;
    d["rho"] = r.rho_grid;
    d["primary_bound"] = r.mean_primary_bound;
    d["secondary_bound"] = r.mean_secondary_bound;
    d["primary_perfect"] = r.mean_primary_perfect;
    d["secondary_perfect"] = r.mean_secondary_perfect;
    d["primary_bound_stderr"] = r.stderr_primary_bound;
    d["secondary_bound_stderr"] = r.stderr_secondary_bound;
    d["primary_perfect_stderr"] = r.stderr_primary_perfect;
    d["secondary_perfect_stderr"] = r.stderr_secondary_perfect;
    d["num_trials"] = r.num_trials;
    d["config_digest"] = digest_hex(r.config_digest);
    return d;
}

RateRegion campaign_from_json(const std::string &config_json, std::size_t workers)
{
    const ScenarioConfig cfg = parse_config(config_json);
    return run_campaign(cfg, workers);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "link-level simulator for cell-free symbiotic radio";
    m.attr("__version__") = tool_version;

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<CampaignError>(m, "CampaignError", PyExc_RuntimeError);

    m.def("exp_scaled_e1", &exp_scaled_e1, py::arg("x"),
          "e^x * E1(x) for x > 0 (overflow-free scaled exponential integral)");
    m.def("ergodic_rayleigh_rate", &ergodic_rayleigh_rate, py::arg("beta"),
          "E[log2(1 + beta * X)] with X ~ Exp(1), in bits per channel use");
    m.def("path_loss", &path_loss, py::arg("distance"), py::arg("gamma"),
          py::arg("wavelength"), "(wavelength/4pi)^2 * distance^-gamma");
    m.def("grid_positions", &grid_positions, py::arg("side_count"),
          py::arg("area_side"),
          "cell centers of a side_count^2 grid over a centered square");
    m.def("dbm_to_watts", &dbm_to_watts, py::arg("dbm"));
    m.def("watts_to_dbm", &watts_to_dbm, py::arg("watts"));

    m.def("default_config", [] { return serialize_config(default_config()); },
          "reference scenario as JSON text");
    m.def("normalize_config",
          [](const std::string &json_text) {
              return serialize_config(parse_config(json_text));
          },
          py::arg("config_json"),
          "parse, default-fill and validate a config; returns canonical JSON");
    m.def("config_digest",
          [](const std::string &json_text) {
              return digest_hex(config_digest(parse_config(json_text)));
          },
          py::arg("config_json"), "16-hex-digit digest of the full config");

    m.def("run_campaign",
          [](const std::string &config_json, std::size_t workers) {
              RateRegion region;
              {
                  py::gil_scoped_release release;
                  region = campaign_from_json(config_json, workers);
              }
              return region_to_dict(region);
          },
          py::arg("config_json"), py::arg("workers") = 0,
          "Monte Carlo rate region for one config; workers=0 uses all cores");

    m.def("sweep",
          [](const std::string &config_json, const std::string &param,
             const std::vector<double> &values, std::size_t workers) {
              std::vector<LabeledRegion> regions;
              {
                  py::gil_scoped_release release;
                  const ScenarioConfig cfg = parse_config(config_json);
                  regions = sweep(cfg, parse_sweep_param(param), values, workers);
              }
              py::list out;
              for (const auto &lr : regions)
              {
                  py::dict d;
                  d["param"] = lr.param;
                  d["value"] = lr.value;
                  d["region"] = region_to_dict(lr.region);
                  out.append(d);
              }
              return out;
          },
          py::arg("config_json"), py::arg("param"), py::arg("values"),
          py::arg("workers") = 0,
          "one campaign per sweep value; returns a list of labeled regions");
}
