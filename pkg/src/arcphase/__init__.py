"""Iterative phase estimation with circular confidence arcs.

The estimation loop doubles the phase at every stage, builds a width-1/3
confidence arc per stage from x- and y-basis measurement tallies, and
folds the arcs into a final arc of width (1/3)/2^{l-1}.  Companion
modules size the measurement budgets via Hoeffding's inequality, model
depolarizing noise, compute Fisher/SLD information with its optimal
stopping point, and run Monte Carlo coverage and scaling studies.
"""

from .circle import Arc, arc_contains, arc_double, arc_subset, circ_dist, mod1
from .estimate import (
    SampleBudget,
    angular_error_bound,
    coverage_guarantee_check,
    default_epsilon,
    sample_budget,
    stage_arc,
)
from .fisher import (
    InfoPoint,
    StageInfo,
    fisher_x,
    fisher_y,
    info_curve,
    info_point,
    optimal_uses,
    sld_info,
)
from .harness import (
    CoverageReport,
    ExperimentConfig,
    ScalingRow,
    TrialResult,
    coverage_experiment,
    fidelity_cost,
    noisy_table,
    run_trial,
    scaling_experiment,
)
from .measure import NOISELESS, NoiseModel, StageCounts, prob_x, prob_y, sample_stage
from .refine import (
    RefinementState,
    refine_arcs,
    refine_finish,
    refine_init,
    refine_step,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "CoverageReport",
    "ExperimentConfig",
    "InfoPoint",
    "NOISELESS",
    "NoiseModel",
    "RefinementState",
    "SampleBudget",
    "ScalingRow",
    "StageCounts",
    "StageInfo",
    "TrialResult",
    "angular_error_bound",
    "arc_contains",
    "arc_double",
    "arc_subset",
    "circ_dist",
    "coverage_experiment",
    "coverage_guarantee_check",
    "default_epsilon",
    "fidelity_cost",
    "fisher_x",
    "fisher_y",
    "info_curve",
    "info_point",
    "mod1",
    "noisy_table",
    "optimal_uses",
    "prob_x",
    "prob_y",
    "refine_arcs",
    "refine_finish",
    "refine_init",
    "refine_step",
    "run_trial",
    "sample_budget",
    "sample_stage",
    "scaling_experiment",
    "sld_info",
    "stage_arc",
]
