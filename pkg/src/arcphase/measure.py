"""Measurement statistics of the (possibly depolarizing) phase channel.

At stage k the channel acts m = 2^{k-1} times on the probe before a
two-outcome measurement in the x or y basis.  Depolarizing noise of rate
r per channel use contracts the signal amplitude by (1-r)^m:

    p_x(1) = (1 + (1-r)^m cos(2 pi m theta)) / 2
    p_y(1) = (1 + (1-r)^m sin(2 pi m theta)) / 2
"""

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class NoiseModel:
    """Depolarizing noise of rate r per channel use; r = 0 is noiseless."""

    r: float = 0.0

    def __post_init__(self):
        if not (0 <= self.r < 1):
            raise ValueError(f"depolarizing rate must be in [0, 1), got {self.r}")

    def contraction(self, m: int) -> float:
        """Signal amplitude (1-r)^m after m channel uses."""
        return (1.0 - self.r) ** m


NOISELESS = NoiseModel(0.0)


@dataclass(frozen=True)
class StageCounts:
    """Measurement tallies for one iterative stage.

    n_per_basis measurements are made in each of the x and y bases;
    n_x1 and n_y1 count outcome 1.
    """

    stage: int
    n_per_basis: int
    n_x1: int
    n_y1: int

    def __post_init__(self):
        if self.stage < 1:
            raise ValueError("stage index starts at 1")
        if not (0 <= self.n_x1 <= self.n_per_basis):
            raise ValueError("n_x1 out of range")
        if not (0 <= self.n_y1 <= self.n_per_basis):
            raise ValueError("n_y1 out of range")

    @property
    def channel_uses_per_probe(self) -> int:
        return 2 ** (self.stage - 1)


def prob_x(theta: float, m: int, noise: NoiseModel = NOISELESS) -> float:
    """Probability of outcome 1 measuring in x after m channel uses."""
    return (1.0 + noise.contraction(m) * math.cos(2.0 * math.pi * m * theta)) / 2.0


def prob_y(theta: float, m: int, noise: NoiseModel = NOISELESS) -> float:
    """Probability of outcome 1 measuring in y after m channel uses."""
    return (1.0 + noise.contraction(m) * math.sin(2.0 * math.pi * m * theta)) / 2.0


def sample_stage(
    theta: float,
    stage: int,
    n_per_basis: int,
    noise: NoiseModel = NOISELESS,
    rng: np.random.Generator | None = None,
) -> StageCounts:
    """Draw the binomial outcome counts for one stage.

    The x and y tallies are independent Bin(n_per_basis, p) draws and are
    fully determined by the state of the supplied generator.
    """
    if n_per_basis < 1:
        raise ValueError("need at least one measurement per basis")
    if rng is None:
        rng = np.random.default_rng()
    m = 2 ** (stage - 1)
    n_x1 = int(rng.binomial(n_per_basis, prob_x(theta, m, noise)))
    n_y1 = int(rng.binomial(n_per_basis, prob_y(theta, m, noise)))
    return StageCounts(stage=stage, n_per_basis=n_per_basis, n_x1=n_x1, n_y1=n_y1)
