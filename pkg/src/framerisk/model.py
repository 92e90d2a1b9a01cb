"""Domain types for regular plane frames under discretionary column loss.

Every other module communicates through the frozen dataclasses defined here.
Quantities are fixed in kN, kNm and m throughout; no unit conversion is done
anywhere in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace


class ValidationError(ValueError):
    """Raised when a scenario violates one or more type invariants.

    The full list of violated invariants is kept in ``violations`` so a
    caller can report every problem at once instead of fixing them one by
    one.
    """

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class RandomVarStats:
    """Second-moment description (mean, std) of one random variable.

    ``dist`` is retained as metadata only; all reliability computations use
    the Gaussian second-moment approximation regardless of family.
    """

    mean: float
    std: float
    dist: str = "normal"


@dataclass(frozen=True)
class FrameGeometry:
    """Regular frame: ``n_s`` stories by ``n_c`` columns, bays of length
    ``L`` and stories of height ``H`` (m)."""

    n_s: int
    n_c: int
    L: float = 6.0
    H: float = 3.0

    @property
    def n_bays(self) -> int:
        return self.n_c - 1


@dataclass(frozen=True)
class DamageScenario:
    """Initial damage extent: ``n_rc0`` removed columns over ``n_rs0``
    stories."""

    n_rc0: int = 1
    n_rs0: int = 1


@dataclass(frozen=True)
class DesignFactors:
    """Multipliers on the strengthened beam (``lambda_b``) and column
    (``lambda_c``) capacities; the two optimization variables."""

    lambda_b: float = 1.0
    lambda_c: float = 1.0


# Model-uncertainty statistics for RC members and gravity loads. Live loads
# carry two horizons: the sustained (arbitrary-point-in-time) level used
# conditionally after damage and the 50-year extreme used for the intact
# frame. Resistance stds are the two-decimal values the published
# reliability indexes were computed with.
BEAM_RESISTANCE = RandomVarStats(1.22, 0.20, "normal")
COLUMN_RESISTANCE = RandomVarStats(1.20, 0.22, "normal")
DEAD_BIAS, DEAD_COV = 1.05, 0.10
LIVE_APT_BIAS, LIVE_APT_COV = 0.25, 0.55
LIVE_50_BIAS, LIVE_50_COV = 1.00, 0.25


@dataclass(frozen=True)
class LoadModel:
    """Nominal loads plus the random-variable statistics derived from them."""

    d_n: float = 1.0
    l_n: float = 1.0
    dead: RandomVarStats = field(default=None)  # type: ignore[assignment]
    live_apt: RandomVarStats = field(default=None)  # type: ignore[assignment]
    live_50: RandomVarStats = field(default=None)  # type: ignore[assignment]
    beam_resistance: RandomVarStats = BEAM_RESISTANCE
    column_resistance: RandomVarStats = COLUMN_RESISTANCE

    def __post_init__(self):
        if self.dead is None:
            m = DEAD_BIAS * self.d_n
            object.__setattr__(self, "dead", RandomVarStats(m, DEAD_COV * m, "normal"))
        if self.live_apt is None:
            m = LIVE_APT_BIAS * self.l_n
            object.__setattr__(self, "live_apt", RandomVarStats(m, LIVE_APT_COV * m, "gamma"))
        if self.live_50 is None:
            m = LIVE_50_BIAS * self.l_n
            object.__setattr__(self, "live_50", RandomVarStats(m, LIVE_50_COV * m, "gumbel"))


@dataclass(frozen=True)
class CostParameters:
    """Cost-model knobs.

    ``alpha_b``/``alpha_c`` are the participation of steel in beam/column
    construction cost (strengthening scales only that share).  ``k_ductile``
    and ``k_brittle`` multiply construction cost into failure cost for
    ductile (beam bending) and brittle (column crushing) collapse.
    ``n_reinf_s`` is the number of strengthened stories.
    """

    alpha_b: float = 0.7
    alpha_c: float = 0.7
    k_ductile: float = 20.0
    k_brittle: float = 40.0
    n_reinf_s: int = 2


@dataclass(frozen=True)
class Scenario:
    """Complete study definition.

    ``p_ld`` is the 50-year local damage probability. ``psi`` sets the
    catenary contribution to beam strength; it affects reported catenary
    reliability indexes always, but enters the bending limit states of the
    cost objective only when ``include_catenary`` is set.  ``phi_nlc`` and
    ``phi_apm`` are the resistance factors for normal-condition design and
    for strengthening.
    """

    geometry: FrameGeometry = FrameGeometry(8, 9)
    loads: LoadModel = LoadModel()
    damage: DamageScenario = DamageScenario()
    costs: CostParameters = CostParameters()
    p_ld: float = 0.1
    psi: float = 2.0
    include_catenary: bool = False
    phi_nlc: float = 0.85
    phi_apm: float = 1.0

    def bending_psi(self) -> float:
        """Catenary parameter entering the bending limit states."""
        return self.psi if self.include_catenary else 0.0


def reference_scenario(**overrides) -> Scenario:
    """The 8-story, 8-bay base case with all default parameters."""
    return replace(Scenario(), **overrides) if overrides else Scenario()


def violations(scenario: Scenario) -> list[str]:
    """Collect every violated invariant of ``scenario`` (empty when valid)."""
    g, dm, c = scenario.geometry, scenario.damage, scenario.costs
    out: list[str] = []
    if g.n_s < 1:
        out.append(f"n_s >= 1 violated (n_s={g.n_s})")
    if g.n_c < 2:
        out.append(f"n_c >= 2 violated (n_c={g.n_c})")
    if not g.L > 0:
        out.append(f"L > 0 violated (L={g.L})")
    if not g.H > 0:
        out.append(f"H > 0 violated (H={g.H})")
    if not 0 <= dm.n_rc0 <= g.n_c - 2:
        out.append(f"0 <= n_rc0 <= n_c - 2 violated (n_rc0={dm.n_rc0}, n_c={g.n_c})")
    if not 0 <= dm.n_rs0 <= g.n_s:
        out.append(f"0 <= n_rs0 <= n_s violated (n_rs0={dm.n_rs0}, n_s={g.n_s})")
    if not 0 <= c.alpha_b <= 1:
        out.append(f"0 <= alpha_b <= 1 violated (alpha_b={c.alpha_b})")
    if not 0 <= c.alpha_c <= 1:
        out.append(f"0 <= alpha_c <= 1 violated (alpha_c={c.alpha_c})")
    if not c.k_ductile > 0:
        out.append(f"k_ductile > 0 violated (k_ductile={c.k_ductile})")
    if not c.k_brittle > 0:
        out.append(f"k_brittle > 0 violated (k_brittle={c.k_brittle})")
    if not 0 <= c.n_reinf_s <= g.n_s:
        out.append(f"0 <= n_reinf_s <= n_s violated (n_reinf_s={c.n_reinf_s}, n_s={g.n_s})")
    if not 0 <= scenario.p_ld <= 1:
        out.append(f"0 <= p_ld <= 1 violated (p_ld={scenario.p_ld})")
    if not 0 <= scenario.psi <= 4:
        out.append(f"0 <= psi <= 4 violated (psi={scenario.psi})")
    if not 0 < scenario.phi_nlc <= 1:
        out.append(f"0 < phi_nlc <= 1 violated (phi_nlc={scenario.phi_nlc})")
    if not 0 < scenario.phi_apm <= 1:
        out.append(f"0 < phi_apm <= 1 violated (phi_apm={scenario.phi_apm})")
    ld = scenario.loads
    if ld.d_n < 0 or ld.l_n < 0:
        out.append(f"nominal loads must be nonnegative (d_n={ld.d_n}, l_n={ld.l_n})")
    for name in ("dead", "live_apt", "live_50", "beam_resistance", "column_resistance"):
        rv: RandomVarStats = getattr(ld, name)
        if rv.std < 0:
            out.append(f"std >= 0 violated ({name}.std={rv.std})")
    return out


def validate(scenario: Scenario) -> Scenario:
    """Return ``scenario`` unchanged if every invariant holds.

    Raises :class:`ValidationError` carrying the full violation list
    otherwise; there is no partial acceptance.
    """
    found = violations(scenario)
    if found:
        raise ValidationError(found)
    return scenario


def annual_from_lifetime(p_ld: float) -> float:
    """Convert a 50-year local damage probability to an annual rate.

    Inverts p_50 = 1 - (1 - p)^50 under a Poisson occurrence model, i.e.
    returns -ln(1 - p_ld)/50.  Defined on [0, 1); p_ld = 1 has no finite
    annual rate.
    """
    if not 0.0 <= p_ld < 1.0:
        raise ValueError(f"p_ld must be in [0, 1), got {p_ld}")
    return -math.log1p(-p_ld) / 50.0
