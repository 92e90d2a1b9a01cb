"""Member sizing: normal loading condition and alternate-path strengthening.

``design_nlc`` sizes beams and columns for ordinary gravity design
(1.2D + 1.6L by default).  ``strengthen_apm`` re-sizes them so the frame can
bridge over the discretionary element removal (1.2D + 0.5L), keeping the
normal-condition column strength as a floor.  Load combinations are
overridable for codes with different factors.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .model import DamageScenario, FrameGeometry, LoadModel, Scenario

NLC_COMBO = (1.2, 1.6)
REMOVAL_COMBO = (1.2, 0.5)


@dataclass(frozen=True)
class MemberDesign:
    """Required member capacities before and after strengthening.

    ``b_y_nlc``/``r_c_nlc`` come from normal-condition design, ``b_y_0`` and
    ``r_c_0`` from the element-removal condition.  ``b_sf`` and ``r_sf`` are
    the resulting strengthening factors (ratios of the two).
    """

    b_y_nlc: float  # beam plastic moment, normal condition (kNm)
    r_c_nlc: float  # column crushing capacity, normal condition (kN)
    b_y_0: float  # beam plastic moment after strengthening (kNm)
    r_c_0: float  # column capacity after strengthening (kN)
    b_sf: float
    r_sf: float


def factored_load(loads: LoadModel, combo: tuple[float, float]) -> float:
    dead_f, live_f = combo
    return dead_f * loads.d_n + live_f * loads.l_n


def design_nlc(
    geom: FrameGeometry,
    loads: LoadModel,
    phi: float,
    combo: tuple[float, float] = NLC_COMBO,
) -> tuple[float, float]:
    """Required beam moment (kNm) and column capacity (kN) under normal
    loading, i.e. the intact-frame strength equations inverted at the
    factored design load."""
    if not 0 < phi <= 1:
        raise ValueError(f"phi must be in (0, 1], got {phi}")
    q = factored_load(loads, combo)
    b_y = geom.L**2 / (16.0 * phi) * q
    r_c = geom.L * geom.n_s * (geom.n_c - 1) / (phi * geom.n_c) * q
    return b_y, r_c


def strengthen_apm(
    geom: FrameGeometry,
    loads: LoadModel,
    damage: DamageScenario,
    phi: float,
    r_c_nlc: float,
    combo: tuple[float, float] = REMOVAL_COMBO,
) -> tuple[float, float]:
    """Required capacities for bridging over the removed elements.

    Beams must carry the removal-condition load over the damaged span; the
    columns adjacent to the removal must carry the redistributed load, but
    never less than their normal-condition requirement.
    """
    if not 0 < phi <= 1:
        raise ValueError(f"phi must be in (0, 1], got {phi}")
    if damage.n_rc0 < 1:
        raise ValueError("strengthening requires n_rc0 >= 1; size with design_nlc instead")
    if damage.n_rc0 > geom.n_c - 2:
        raise ValueError(f"n_rc0 must leave two intact columns (n_rc0={damage.n_rc0}, n_c={geom.n_c})")
    q = factored_load(loads, combo)
    b_y_0 = damage.n_rc0 * geom.L**2 / (4.0 * phi) * q
    share = 2.0 - (geom.n_c - 1) / geom.n_c + damage.n_rc0 * (1.0 - damage.n_rs0 / geom.n_s)
    r_c_0 = max(r_c_nlc, geom.L * geom.n_s / phi * share * q)
    return b_y_0, r_c_0


def strengthening_factors(design: MemberDesign) -> tuple[float, float]:
    if design.b_y_nlc <= 0 or design.r_c_nlc <= 0:
        raise ValueError("normal-condition capacities must be positive")
    return design.b_y_0 / design.b_y_nlc, design.r_c_0 / design.r_c_nlc


def design_members(
    scenario: Scenario,
    nlc_combo: tuple[float, float] = NLC_COMBO,
    removal_combo: tuple[float, float] = REMOVAL_COMBO,
) -> MemberDesign:
    """Full sizing pipeline for a scenario: NLC design, then strengthening
    for the scenario's discretionary damage."""
    b_y_nlc, r_c_nlc = design_nlc(scenario.geometry, scenario.loads, scenario.phi_nlc, nlc_combo)
    b_y_0, r_c_0 = strengthen_apm(
        scenario.geometry, scenario.loads, scenario.damage, scenario.phi_apm, r_c_nlc, removal_combo
    )
    if b_y_0 < b_y_nlc:
        # The removal condition has no floor at the normal-condition beam
        # strength; flag the unusual geometry (short bays) where it binds.
        warnings.warn(
            f"strengthened beam requirement {b_y_0:.4g} kNm is below the "
            f"normal-condition requirement {b_y_nlc:.4g} kNm",
            stacklevel=2,
        )
    design = MemberDesign(b_y_nlc, r_c_nlc, b_y_0, r_c_0, 0.0, 0.0)
    b_sf, r_sf = strengthening_factors(design)
    return MemberDesign(b_y_nlc, r_c_nlc, b_y_0, r_c_0, b_sf, r_sf)


def nlc_member_design(scenario: Scenario) -> MemberDesign:
    """Design of the un-strengthened (normal) frame, expressed in the same
    record so downstream code can evaluate both frames uniformly."""
    b_y_nlc, r_c_nlc = design_nlc(scenario.geometry, scenario.loads, scenario.phi_nlc)
    return MemberDesign(b_y_nlc, r_c_nlc, b_y_nlc, r_c_nlc, 1.0, 1.0)
