from __future__ import annotations

import math
from dataclasses import replace

import numpy as np
import pytest

from framerisk import (
    FrameGeometry,
    LoadModel,
    Scenario,
    ValidationError,
    annual_from_lifetime,
    validate,
    violations,
)


def test_reference_scenario_is_valid(ref_scenario):
    assert violations(ref_scenario) == []
    assert validate(ref_scenario) is ref_scenario
    # idempotent
    assert validate(validate(ref_scenario)) is ref_scenario


def test_single_column_frame_rejected():
    bad = replace(Scenario(), geometry=FrameGeometry(8, 1))
    found = violations(bad)
    assert any("n_c" in v for v in found)
    with pytest.raises(ValidationError) as err:
        validate(bad)
    assert "n_c" in str(err.value)


def test_psi_out_of_range_rejected():
    bad = replace(Scenario(), psi=5.0)
    assert any("psi" in v for v in violations(bad))
    with pytest.raises(ValidationError):
        validate(bad)


def test_all_violations_collected_at_once():
    bad = replace(Scenario(), geometry=FrameGeometry(0, 1, -1.0, 3.0), psi=9.0, p_ld=2.0)
    found = violations(bad)
    assert len(found) >= 5
    with pytest.raises(ValidationError) as err:
        validate(bad)
    assert err.value.violations == found


def test_damage_extent_bounds():
    scn = Scenario()
    assert violations(replace(scn, damage=replace(scn.damage, n_rc0=8)))  # n_c - 2 = 7
    assert violations(replace(scn, damage=replace(scn.damage, n_rs0=9)))
    assert not violations(replace(scn, damage=replace(scn.damage, n_rc0=7)))


def test_default_load_statistics():
    loads = LoadModel(d_n=2.0, l_n=4.0)
    assert loads.dead.mean == pytest.approx(2.1)
    assert loads.dead.std == pytest.approx(0.21)
    assert loads.live_apt.mean == pytest.approx(1.0)
    assert loads.live_apt.std == pytest.approx(0.55)
    assert loads.live_50.mean == pytest.approx(4.0)
    assert loads.live_50.std == pytest.approx(1.0)
    assert loads.beam_resistance.mean == pytest.approx(1.22)
    assert loads.beam_resistance.std == pytest.approx(0.20)
    assert loads.column_resistance.mean == pytest.approx(1.20)
    assert loads.column_resistance.std == pytest.approx(0.22)
    # distribution families are metadata only
    assert loads.live_apt.dist == "gamma"
    assert loads.live_50.dist == "gumbel"


def test_annual_from_lifetime_values():
    # frozen from -ln(1 - p)/50 evaluated at high precision
    assert annual_from_lifetime(0.1) == pytest.approx(2.1072103131565260e-3, rel=1e-12)
    assert annual_from_lifetime(0.05) == pytest.approx(1.0258658877510107e-3, rel=1e-12)
    assert annual_from_lifetime(0.0) == 0.0


def test_annual_from_lifetime_domain():
    with pytest.raises(ValueError):
        annual_from_lifetime(1.0)
    with pytest.raises(ValueError):
        annual_from_lifetime(-0.01)
    with pytest.raises(ValueError):
        annual_from_lifetime(1.5)


def test_annual_from_lifetime_monotone_and_bounded_below():
    rng = np.random.default_rng(20240811)
    ps = np.sort(rng.uniform(0.0, 0.999999, size=500))
    vals = [annual_from_lifetime(p) for p in ps]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert all(v >= p / 50.0 for v, p in zip(vals, ps))
    assert math.isclose(annual_from_lifetime(1e-9), 1e-9 / 50.0, rel_tol=1e-6)
