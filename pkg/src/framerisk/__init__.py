"""Risk-based design of regular plane frames under column-loss scenarios.

The package sizes the members of a regular frame, computes closed-form
collapse strengths and Cornell reliability indexes for the intact and
damaged structure, assembles the total expected cost of construction plus
progressive-collapse failure, optimizes the beam and column design factors,
and locates the local-damage probability above which strengthening for
element removal pays off.
"""

from .catalog import DAMAGE_VARIANTS, FRAME_CATALOG, parse_damage_token, parse_frame_token
from .costs import (
    CostBreakdown,
    bending_collapse_cost,
    construction_cost,
    cost_breakdown,
    global_pancake_cost,
    initial_damage_cost,
    local_pancake_cost,
    reference_cost,
    unit_beam_cost,
    unit_column_cost,
)
from .design import (
    MemberDesign,
    design_members,
    design_nlc,
    nlc_member_design,
    strengthen_apm,
    strengthening_factors,
)
from .mechanics import (
    CollapseMode,
    damaged_bending_strength,
    global_pancake_strength,
    intact_bending_strength,
    intact_pancake_strength,
    local_pancake_strength,
)
from .model import (
    CostParameters,
    DamageScenario,
    DesignFactors,
    FrameGeometry,
    LoadModel,
    RandomVarStats,
    Scenario,
    ValidationError,
    annual_from_lifetime,
    reference_scenario,
    validate,
    violations,
)
from .optimize import (
    OptimizationError,
    OptimizationResult,
    ThresholdResult,
    minimize_total_cost,
    threshold_probability,
)
from .output import Series, emit_csv, emit_svg
from .reliability import (
    BetaSet,
    beta_damaged,
    beta_intact,
    beta_set_damaged,
    beta_set_intact,
    cornell_beta,
    std_normal_cdf,
)
from .risk import (
    ProgressionRow,
    RiskModel,
    mode_probabilities,
    progression_trace,
    stage_expected_cost,
    total_expected_cost,
)
from .studies import (
    StudyDefinition,
    parse_scenario,
    reliability_grid,
    run_study,
    scenario_from_dict,
    set_scenario_field,
    strengthening_table,
    trace_table,
    write_study_tables,
)

__version__ = "0.1.0"
