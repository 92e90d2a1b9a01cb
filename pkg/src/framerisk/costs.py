"""Normalized construction, strengthening and failure costs.

Beams and columns carry unit cost per meter, so the un-strengthened frame
costs exactly its total member length ``C_REF`` and every cost here is
reported as a fraction of that.  Strengthening scales the steel share
(``alpha``) of the strengthened stories by the design factor times the
strengthening factor.  Failure costs are proportional to the impacted frame
area and are always evaluated at unit design factors, so they stay constant
during optimization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .design import MemberDesign
from .model import CostParameters, DesignFactors, FrameGeometry, Scenario


def reference_cost(geom: FrameGeometry) -> float:
    """Total member length of the frame (beams plus columns), the
    normalization constant for every other cost."""
    return geom.L * geom.n_s * (geom.n_c - 1) + geom.H * geom.n_s * geom.n_c


def unit_beam_cost(lambda_b: float, costs: CostParameters, b_sf: float, n_s: int) -> float:
    """Per-meter beam cost factor summed over all stories: plain stories
    count 1 each, strengthened stories scale the steel share by
    lambda_b * b_sf."""
    strengthened = lambda_b * costs.alpha_b * b_sf + (1.0 - costs.alpha_b)
    return (n_s - costs.n_reinf_s) + costs.n_reinf_s * strengthened


def unit_column_cost(lambda_c: float, costs: CostParameters, r_sf: float, n_s: int) -> float:
    """Column analogue of :func:`unit_beam_cost`."""
    strengthened = lambda_c * costs.alpha_c * r_sf + (1.0 - costs.alpha_c)
    return (n_s - costs.n_reinf_s) + costs.n_reinf_s * strengthened


def construction_cost(scenario: Scenario, design: MemberDesign, factors: DesignFactors) -> float:
    """Total construction cost, normalized; equals 1 with no strengthening."""
    g = scenario.geometry
    beams = unit_beam_cost(factors.lambda_b, scenario.costs, design.b_sf, g.n_s)
    cols = unit_column_cost(factors.lambda_c, scenario.costs, design.r_sf, g.n_s)
    return (g.L * (g.n_c - 1) * beams + g.H * g.n_c * cols) / reference_cost(g)


def initial_damage_cost(scenario: Scenario) -> float:
    """Cost of the triggering damage itself: two beam runs per damaged
    story plus the removed column height."""
    g, dm = scenario.geometry, scenario.damage
    return (2.0 * g.L * dm.n_rs0 + g.H * dm.n_rc0) / reference_cost(g)


def bending_collapse_cost(scenario: Scenario, design: MemberDesign, n_fc: int) -> float:
    """Ductile bending collapse over n_fc + 1 bays (full height), capped at
    the frame width.  Evaluated at unit design factors."""
    g, c = scenario.geometry, scenario.costs
    beams = unit_beam_cost(1.0, c, design.b_sf, g.n_s)
    cols = unit_column_cost(1.0, c, design.r_sf, g.n_s)
    extent = min(n_fc + 1, g.n_c - 1) * g.L * beams + min(n_fc, g.n_c) * g.H * cols
    return c.k_ductile / reference_cost(g) * extent


def local_pancake_cost(scenario: Scenario, design: MemberDesign, n_fc: int) -> float:
    """Brittle local pancake collapse: two bays wider than the bending
    mechanism, saturating exactly at the global collapse cost."""
    g, c = scenario.geometry, scenario.costs
    beams = unit_beam_cost(1.0, c, design.b_sf, g.n_s)
    cols = unit_column_cost(1.0, c, design.r_sf, g.n_s)
    extent = min(n_fc + 3, g.n_c - 1) * g.L * beams + min(n_fc + 2, g.n_c) * g.H * cols
    return c.k_brittle / reference_cost(g) * extent


def global_pancake_cost(scenario: Scenario, design: MemberDesign) -> float:
    """Brittle collapse of the whole frame."""
    return scenario.costs.k_brittle * construction_cost(scenario, design, DesignFactors(1.0, 1.0))


@dataclass(frozen=True)
class CostBreakdown:
    """All cost terms of a scenario at one design point (normalized)."""

    c_ref: float
    c_construction: float
    c_initial_damage: float
    c_bending: float  # at the initial damage extent
    c_local_pancake: float
    c_global_pancake: float


def cost_breakdown(scenario: Scenario, design: MemberDesign, factors: DesignFactors) -> CostBreakdown:
    n0 = scenario.damage.n_rc0
    return CostBreakdown(
        c_ref=reference_cost(scenario.geometry),
        c_construction=construction_cost(scenario, design, factors),
        c_initial_damage=initial_damage_cost(scenario),
        c_bending=bending_collapse_cost(scenario, design, n0),
        c_local_pancake=local_pancake_cost(scenario, design, n0),
        c_global_pancake=global_pancake_cost(scenario, design),
    )
