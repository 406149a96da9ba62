"""Per-stage arc construction and Hoeffding measurement budgets.

From the stage tallies we form empirical estimates of cos and sin of the
stage angle, take atan2, and center a width-1/3 arc on the result.  The
arc contains the true stage angle whenever both empirical frequencies are
within 0.306 of their means, and Hoeffding's inequality sizes the number
of measurements so that this holds with probability at least
sqrt(1 - eps/l) per basis, hence 1 - eps/l per stage and 1 - eps overall.
"""

import math
import warnings
from dataclasses import dataclass

from .circle import Arc, mod1
from .measure import StageCounts

#: Per-basis frequency tolerance guaranteeing a correct width-1/3 arc
#: (0.612 on the cos/sin scale, i.e. 0.306 on the probability scale).
FREQ_TOLERANCE = 0.306

#: 1 / (2 * 0.306^2) rounded up to the printed precision.
HOEFFDING_COEFF = 5.34

ARC_WIDTH = 1.0 / 3.0


@dataclass(frozen=True)
class SampleBudget:
    """Measurement counts guaranteeing overall coverage 1 - epsilon."""

    stages: int
    epsilon: float
    n_per_basis: int

    @property
    def n_total_per_stage(self) -> int:
        return 2 * self.n_per_basis

    @property
    def total_channel_uses(self) -> int:
        """n = N_tot (2^l - 1) channel uses over the whole run."""
        return self.n_total_per_stage * (2**self.stages - 1)


def stage_arc(counts: StageCounts) -> Arc:
    """Width-1/3 confidence arc for the stage angle from its tallies.

    The point estimate is atan2 of the empirical (sin, cos) estimates,
    rescaled to the unit circle; the arc is centered on it.  If both
    empirical coordinates vanish the direction is undefined and we fall
    back to angle 0 with a warning (any arc is then as good as any other).
    """
    x = 2.0 * counts.n_x1 / counts.n_per_basis - 1.0
    y = 2.0 * counts.n_y1 / counts.n_per_basis - 1.0
    if x == 0.0 and y == 0.0:
        warnings.warn(
            "empirical direction vector is zero; defaulting the stage estimate to 0",
            stacklevel=2,
        )
        phi = 0.0
    else:
        phi = mod1(math.atan2(y, x) / (2.0 * math.pi))
    return Arc(mod1(phi - 1.0 / 6.0), ARC_WIDTH)


def angular_error_bound(alpha: float) -> float:
    """Worst-case atan2 angular error (radians) for box error alpha.

    If the estimates of cos and sin are each within alpha of the truth,
    the angle estimate is off by at most arcsin(sqrt(2) alpha).  Valid for
    alpha in [0, 1/sqrt(2)].
    """
    if not (0.0 <= alpha <= 1.0 / math.sqrt(2.0) + 1e-15):
        raise ValueError(f"alpha must be in [0, 1/sqrt(2)], got {alpha}")
    return math.asin(min(math.sqrt(2.0) * alpha, 1.0))


def sample_budget(stages: int, epsilon: float) -> SampleBudget:
    """Per-basis measurement count N = ceil(5.34 ln(4 l / eps)).

    The continuous value comes from inverting the Hoeffding tail
    2 exp(-2 N t^2) at t = 0.306; the ceiling keeps the guarantee.
    """
    _check_budget_args(stages, epsilon)
    n = math.ceil(HOEFFDING_COEFF * math.log(4.0 * stages / epsilon))
    return SampleBudget(stages=stages, epsilon=epsilon, n_per_basis=n)


def coverage_guarantee_check(stages: int, epsilon: float, n_per_basis: int) -> bool:
    """Does N per basis meet the per-basis requirement sqrt(1 - eps/l)?

    True iff the Hoeffding tail 2 exp(-2 N t^2) at t = 0.306 is at most
    1 - sqrt(1 - eps/l).
    """
    _check_budget_args(stages, epsilon)
    tail = 2.0 * math.exp(-2.0 * n_per_basis * FREQ_TOLERANCE**2)
    return tail <= 1.0 - math.sqrt(1.0 - epsilon / stages)


def default_epsilon(stages: int) -> float:
    """The eps = 2^{-2l} choice that tracks the Heisenberg limit."""
    return 2.0 ** (-2 * stages)


def _check_budget_args(stages, epsilon):
    if stages < 1:
        raise ValueError("number of stages must be >= 1")
    if not (0.0 < epsilon < 1.0):
        raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
