"""End-to-end estimation pipeline and Monte Carlo coverage experiments.

A trial runs the full iterative procedure for one true angle: sample the
stage tallies, build each width-1/3 arc, fold the arcs together, and
check whether the final arc covers the truth.  Experiments repeat trials
with independently seeded substreams so results are reproducible and
independent of execution order.
"""

import math
from dataclasses import dataclass

import numpy as np

from .circle import Arc, arc_contains
from .estimate import default_epsilon, sample_budget, stage_arc
from .measure import NOISELESS, NoiseModel, sample_stage
from .refine import refine_finish, refine_init, refine_step


@dataclass(frozen=True)
class ExperimentConfig:
    """Settings for a coverage experiment.

    theta_source is "random" (uniform per trial), "grid" (trials evenly
    spaced over [0, 1)), or a fixed angle.
    """

    stages: int
    n_total_per_stage: int
    noise: NoiseModel = NOISELESS
    trials: int = 10_000
    seed: int = 0
    theta_source: str | float = "random"

    def __post_init__(self):
        if self.stages < 1:
            raise ValueError("stages must be >= 1")
        if self.n_total_per_stage < 2 or self.n_total_per_stage % 2:
            raise ValueError("n_total_per_stage must be even (split between x and y)")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")

    @property
    def n_per_basis(self) -> int:
        return self.n_total_per_stage // 2


@dataclass(frozen=True)
class TrialResult:
    estimate: float
    final_arc: Arc
    hit: bool


@dataclass(frozen=True)
class CoverageReport:
    """Estimated coverage probability with its 95% normal interval."""

    trials: int
    hits: int
    arc_length: float

    @property
    def coverage(self) -> float:
        return self.hits / self.trials

    @property
    def ci_half_width(self) -> float:
        p = self.coverage
        return 1.96 * math.sqrt(p * (1.0 - p) / self.trials)

    @property
    def ci_low(self) -> float:
        return max(0.0, self.coverage - self.ci_half_width)

    @property
    def ci_high(self) -> float:
        return min(1.0, self.coverage + self.ci_half_width)


@dataclass(frozen=True)
class ScalingRow:
    stages: int
    epsilon: float
    n_total_per_stage: int
    channel_uses: int
    mean_cost: float


def fidelity_cost(theta_hat: float, theta: float) -> float:
    """Infidelity between the true and estimated rotations.

    For the diagonal phase unitary this is sin^2(pi (theta_hat - theta)),
    0 at a perfect estimate and 1 at the antipode.
    """
    return math.sin(math.pi * (theta_hat - theta)) ** 2


def run_trial(theta: float, cfg: ExperimentConfig, rng: np.random.Generator) -> TrialResult:
    """Run the full l-stage pipeline once for a known true angle."""
    n = cfg.n_per_basis
    state = None
    for k in range(1, cfg.stages + 1):
        arc = stage_arc(sample_stage(theta, k, n, cfg.noise, rng))
        state = refine_init(arc) if state is None else refine_step(state, arc)
    estimate, final_arc = refine_finish(state)
    return TrialResult(
        estimate=estimate,
        final_arc=final_arc,
        hit=arc_contains(final_arc, theta),
    )


def _trial_theta(cfg: ExperimentConfig, index: int, rng: np.random.Generator) -> float:
    if cfg.theta_source == "random":
        return float(rng.uniform())
    if cfg.theta_source == "grid":
        return index / cfg.trials
    return float(cfg.theta_source)


def coverage_experiment(cfg: ExperimentConfig) -> CoverageReport:
    """Tally final-arc coverage over independent trials.

    Each trial gets its own generator spawned from the experiment seed,
    so the report is reproducible and insensitive to evaluation order.
    """
    children = np.random.SeedSequence(cfg.seed).spawn(cfg.trials)
    hits = 0
    for i, child in enumerate(children):
        rng = np.random.default_rng(child)
        theta = _trial_theta(cfg, i, rng)
        hits += run_trial(theta, cfg, rng).hit
    return CoverageReport(
        trials=cfg.trials,
        hits=hits,
        arc_length=(1.0 / 3.0) / 2 ** (cfg.stages - 1),
    )


def noisy_table(
    noise_rates,
    stage_values,
    n_total_per_stage: int = 30,
    trials: int = 10_000,
    seed: int = 0,
):
    """Coverage grid over (noise rate, stage count) cells.

    Returns a list of (r, l, CoverageReport) rows; cell seeds are derived
    from the base seed so the whole table replays exactly.
    """
    rates = list(noise_rates)
    stages = list(stage_values)
    cell_seeds = np.random.SeedSequence(seed).generate_state(len(rates) * len(stages))
    rows = []
    idx = 0
    for r in rates:
        for l in stages:
            cfg = ExperimentConfig(
                stages=l,
                n_total_per_stage=n_total_per_stage,
                noise=NoiseModel(r),
                trials=trials,
                seed=int(cell_seeds[idx]),
            )
            rows.append((r, l, coverage_experiment(cfg)))
            idx += 1
    return rows


def scaling_experiment(
    stage_values,
    trials: int = 2_000,
    noise: NoiseModel = NOISELESS,
    seed: int = 0,
):
    """Mean infidelity vs total channel uses with eps = 2^{-2l} budgets.

    For each stage count l the measurement budget comes from the Hoeffding
    calculator at eps = 2^{-2l}; the row reports the total channel uses
    n = N_tot (2^l - 1) and the Monte Carlo mean fidelity cost.
    """
    stage_values = list(stage_values)
    run_seeds = np.random.SeedSequence(seed).generate_state(len(stage_values))
    rows = []
    for l, run_seed in zip(stage_values, run_seeds):
        eps = default_epsilon(l)
        budget = sample_budget(l, eps)
        cfg = ExperimentConfig(
            stages=l,
            n_total_per_stage=budget.n_total_per_stage,
            noise=noise,
            trials=trials,
            seed=int(run_seed),
        )
        total_cost = 0.0
        for i, child in enumerate(np.random.SeedSequence(cfg.seed).spawn(trials)):
            rng = np.random.default_rng(child)
            theta = _trial_theta(cfg, i, rng)
            result = run_trial(theta, cfg, rng)
            total_cost += fidelity_cost(result.estimate, theta)
        rows.append(
            ScalingRow(
                stages=l,
                epsilon=eps,
                n_total_per_stage=budget.n_total_per_stage,
                channel_uses=budget.total_channel_uses,
                mean_cost=total_cost / trials,
            )
        )
    return rows
