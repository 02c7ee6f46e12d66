# SPDX-License-Identifier: Apache-2.0
"""End-to-end smoke tests for the Python bindings."""

import json
import math

import pytest

import symrad


def test_scalar_kernels_pinned():
    assert symrad.exp_scaled_e1(1.0) == pytest.approx(0.5963473623231941, abs=1e-12)
    assert symrad.ergodic_rayleigh_rate(1.0) == pytest.approx(
        0.8603473822708859, abs=1e-12
    )
    assert symrad.path_loss(5.0, 2.1, 0.0857) == pytest.approx(
        1.583816659071092e-06, rel=1e-12
    )
    assert symrad.dbm_to_watts(20.0) == pytest.approx(0.1, rel=1e-12)
    assert symrad.watts_to_dbm(1.0) == pytest.approx(30.0, abs=1e-12)


def test_kernel_domain_errors():
    with pytest.raises(ValueError):
        symrad.exp_scaled_e1(0.0)
    with pytest.raises(ValueError):
        symrad.ergodic_rayleigh_rate(-1.0)


def test_grid_positions():
    pts = symrad.grid_positions(2, 4.0)
    assert pts == [(-1.0, -1.0), (1.0, -1.0), (-1.0, 1.0), (1.0, 1.0)]


def test_default_config_roundtrip():
    doc = json.loads(symrad.default_config())
    assert doc["num_aps"] == 16
    assert doc["antennas_per_ap"] == 4
    assert doc["tau1"] == 100
    assert len(doc["ap_positions"]) == 16
    assert symrad.normalize_config(symrad.default_config()) == symrad.default_config()


def test_config_digest_shape_and_sensitivity():
    d0 = symrad.config_digest("{}")
    assert len(d0) == 16
    assert all(c in "0123456789abcdef" for c in d0)
    assert symrad.config_digest('{"seed": 99}') != d0


def test_config_validation_errors():
    with pytest.raises(ValueError):
        symrad.normalize_config('{"alpha": 1.5}')
    with pytest.raises(ValueError):
        symrad.normalize_config('{"bandwidth": 1.0}')


SMALL = json.dumps(
    {
        "num_aps": 4,
        "antennas_per_ap": 2,
        "tau1": 10,
        "tau2": 10,
        "num_trials": 16,
        "rho_grid": [0.0, 0.5, 1.0],
        "seed": 4242,
    }
)


def test_campaign_deterministic_across_workers():
    one = symrad.run_campaign(SMALL, workers=1)
    many = symrad.run_campaign(SMALL, workers=3)
    assert one == many
    assert one["num_trials"] == 16
    assert one["rho"] == [0.0, 0.5, 1.0]
    assert len(one["primary_bound"]) == 3
    assert all(math.isfinite(v) for v in one["primary_bound"])
    assert all(v >= 0.0 for v in one["secondary_bound"])
    assert one["config_digest"] == symrad.config_digest(SMALL)


def test_campaign_rerun_identical():
    assert symrad.run_campaign(SMALL) == symrad.run_campaign(SMALL)


def test_sweep_labels_and_order():
    out = symrad.sweep(SMALL, "tau1", [5.0, 20.0], workers=2)
    assert [r["param"] for r in out] == ["tau1", "tau1"]
    assert [r["value"] for r in out] == [5.0, 20.0]
    assert out[0]["region"]["num_trials"] == 16


def test_sweep_rejects_unknown_param():
    with pytest.raises(ValueError):
        symrad.sweep(SMALL, "bandwidth", [1.0])
