"""Arithmetic on a circle of unit circumference.

Angles are plain numbers reduced modulo 1; arcs are directed intervals
(lower bound, width) on the circle.  Everything here works for floats and
for exact `fractions.Fraction` values, which is handy when a computation
must replay exactly.
"""

from dataclasses import dataclass


def mod1(x):
    """Reduce x to [0, 1).  Works for float, int and Fraction."""
    r = x % 1
    # float `%` can round up to exactly 1.0 for tiny negative inputs
    if r == 1:
        return r * 0
    return r


def circ_dist(a, b):
    """Shortest distance between two angles on the circle, in [0, 1/2]."""
    d = mod1(a - b)
    return min(d, 1 - d)


@dataclass(frozen=True)
class Arc:
    """Directed arc [lower, lower + width) mod 1.

    The lower bound is reduced mod 1 on construction; width must lie in
    (0, 1].  Membership is half-open so that shared boundaries are
    unambiguous.
    """

    lower: float
    width: float

    def __post_init__(self):
        if not (0 < self.width <= 1):
            raise ValueError(f"arc width must be in (0, 1], got {self.width}")
        object.__setattr__(self, "lower", mod1(self.lower))


def arc_contains(arc: Arc, t) -> bool:
    """True iff the angle t lies in [lower, lower + width) mod 1."""
    return mod1(t - arc.lower) < arc.width


def arc_subset(a: Arc, b: Arc) -> bool:
    """True iff arc a is contained in arc b on the circle."""
    return mod1(a.lower - b.lower) + a.width <= b.width


def arc_double(arc: Arc) -> Arc:
    """The arc covering 2t for every t in the input arc.

    Requires width <= 1/2, otherwise the doubled arc would wrap onto
    itself.
    """
    if 2 * arc.width > 1:
        raise ValueError(f"cannot double arc of width {arc.width} > 1/2")
    return Arc(mod1(2 * arc.lower), 2 * arc.width)
