# SPDX-License-Identifier: Apache-2.0
"""Link-level Monte Carlo simulator for cell-free symbiotic radio.

Thin re-export of the compiled core. Configs travel as JSON text and use
the same parsing, defaulting and validation as the command line tool.
"""

from ._core import (
    CampaignError,
    ConfigError,
    __version__,
    config_digest,
    dbm_to_watts,
    default_config,
    ergodic_rayleigh_rate,
    exp_scaled_e1,
    grid_positions,
    normalize_config,
    path_loss,
    run_campaign,
    sweep,
    watts_to_dbm,
)

__all__ = [
    "CampaignError",
    "ConfigError",
    "__version__",
    "config_digest",
    "dbm_to_watts",
    "default_config",
    "ergodic_rayleigh_rate",
    "exp_scaled_e1",
    "grid_positions",
    "normalize_config",
    "path_loss",
    "run_campaign",
    "sweep",
    "watts_to_dbm",
]
