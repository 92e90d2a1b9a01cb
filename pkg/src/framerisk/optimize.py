"""Design-factor optimization and threshold damage probability.

The objective surface is cheap, two-dimensional and can carry two competing
local minima near the indifference region, so the minimizer is a fixed-grid
multi-start around a derivative-free simplex search.  The threshold local
damage probability is the root, in log10(p_ld), of the optimal conditional
bending reliability index: above it, strengthening for element removal
carries real margin; below it the optimum degenerates toward normal design.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import minimize

from .design import MemberDesign, design_members
from .model import DesignFactors, Scenario
from .reliability import BetaSet, beta_set_damaged, beta_set_intact
from .risk import RiskModel

START_GRID = np.linspace(0.2, 2.5, 5)
FACTOR_BOUNDS = (0.05, 5.0)
XTOL = 1e-4
FTOL = 1e-8

LOG10_P_RANGE = (-6.0, 0.0)
LOG10_P_TOL = 0.01

ALWAYS_STRENGTHEN = "always-strengthen"
NEVER_STRENGTHEN = "never-strengthen"
BRACKETED = "bracketed"


class OptimizationError(RuntimeError):
    """The objective was not finite at any start point."""


@dataclass(frozen=True)
class OptimizationResult:
    factors: DesignFactors
    c_te: float
    beta_damaged: BetaSet  # conditional on the initial damage, apt live load
    beta_intact: BetaSet  # intact frame, 50-year live load
    starts_used: int
    converged: bool


@dataclass(frozen=True)
class ThresholdResult:
    """Root of the optimal bending reliability index over p_ld.

    ``status`` is ``bracketed`` when a sign change exists on the search
    interval (then ``p_th`` holds the root), otherwise one of
    ``always-strengthen`` (index positive everywhere, strengthening pays at
    any threat level) or ``never-strengthen`` (negative everywhere).
    """

    status: str
    p_th: float | None
    g_low: float
    g_high: float
    optimum_low: OptimizationResult
    optimum_high: OptimizationResult


def _clamp(x: float) -> float:
    lo, hi = FACTOR_BOUNDS
    return lo if x < lo else hi if x > hi else x


def minimize_total_cost(scenario: Scenario, design: MemberDesign | None = None) -> OptimizationResult:
    """Best local minimum of the total expected cost over the design factors.

    Deterministic: fixed 5x5 start grid, simplex search per start, ties
    broken by objective value then lexicographic factors.
    """
    if design is None:
        design = design_members(scenario)
    model = RiskModel(scenario, design)

    def objective(x) -> float:
        return model.evaluate(_clamp(x[0]), _clamp(x[1]))

    best: tuple[float, float, float] | None = None
    best_converged = False
    starts_used = 0
    for lb0 in START_GRID:
        for lc0 in START_GRID:
            if not math.isfinite(model.evaluate(lb0, lc0)):
                continue
            starts_used += 1
            res = minimize(
                objective,
                np.array([lb0, lc0]),
                method="Nelder-Mead",
                options={"xatol": XTOL, "fatol": FTOL, "maxiter": 2000, "maxfev": 2000},
            )
            cand = (float(res.fun), _clamp(float(res.x[0])), _clamp(float(res.x[1])))
            if best is None or cand < best:
                best = cand
                best_converged = bool(res.success)
    if best is None:
        raise OptimizationError("objective is non-finite at every start point")
    c_te, lam_b, lam_c = best
    factors = DesignFactors(lam_b, lam_c)
    return OptimizationResult(
        factors=factors,
        c_te=c_te,
        beta_damaged=beta_set_damaged(scenario, design, factors),
        beta_intact=beta_set_intact(scenario, design, factors),
        starts_used=starts_used,
        converged=best_converged,
    )


def _beta_b_at_optimum(scenario: Scenario, design: MemberDesign, p_ld: float) -> tuple[float, OptimizationResult]:
    result = minimize_total_cost(replace(scenario, p_ld=p_ld), design)
    return result.beta_damaged.beta_b, result


def threshold_probability(scenario: Scenario, design: MemberDesign | None = None) -> ThresholdResult:
    """Bisection on log10(p_ld) for the zero of the optimal bending index.

    Every evaluation runs the full multi-start so basin hopping near the
    indifference point resolves the same way at every probe.
    """
    if design is None:
        design = design_members(scenario)
    lo, hi = LOG10_P_RANGE
    g_lo, opt_lo = _beta_b_at_optimum(scenario, design, 10.0**lo)
    g_hi, opt_hi = _beta_b_at_optimum(scenario, design, 10.0**hi)
    if g_lo > 0.0 and g_hi > 0.0:
        return ThresholdResult(ALWAYS_STRENGTHEN, None, g_lo, g_hi, opt_lo, opt_hi)
    if g_lo < 0.0 and g_hi < 0.0:
        return ThresholdResult(NEVER_STRENGTHEN, None, g_lo, g_hi, opt_lo, opt_hi)
    low_negative = g_lo < 0.0
    while hi - lo > LOG10_P_TOL:
        mid = 0.5 * (lo + hi)
        g_mid, _ = _beta_b_at_optimum(scenario, design, 10.0**mid)
        if (g_mid < 0.0) == low_negative:
            lo = mid
        else:
            hi = mid
    return ThresholdResult(BRACKETED, 10.0 ** (0.5 * (lo + hi)), g_lo, g_hi, opt_lo, opt_hi)
