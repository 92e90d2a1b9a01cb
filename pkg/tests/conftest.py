from __future__ import annotations

from dataclasses import replace

import pytest

from framerisk import (
    Scenario,
    design_members,
    minimize_total_cost,
    parse_frame_token,
    threshold_probability,
    validate,
)


@pytest.fixture
def ref_scenario() -> Scenario:
    return validate(Scenario())


@pytest.fixture
def ref_design(ref_scenario):
    return design_members(ref_scenario)


# Expensive shared results, computed once per session.


@pytest.fixture(scope="session")
def ref_optimum():
    return minimize_total_cost(validate(Scenario()))


@pytest.fixture(scope="session")
def threshold_low():
    return threshold_probability(validate(Scenario(geometry=parse_frame_token("4x16"))))


@pytest.fixture(scope="session")
def threshold_tall():
    return threshold_probability(validate(Scenario(geometry=parse_frame_token("16x4"))))


@pytest.fixture(scope="session")
def threshold_catenary():
    return threshold_probability(validate(Scenario(include_catenary=True)))


@pytest.fixture(scope="session")
def tall_optima():
    scn = validate(Scenario(geometry=parse_frame_token("16x4")))
    return {
        1.0: minimize_total_cost(replace(scn, p_ld=1.0)),
        1e-3: minimize_total_cost(replace(scn, p_ld=1e-3)),
    }
