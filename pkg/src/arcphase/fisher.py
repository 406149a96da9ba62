"""Fisher information of the noisy channel and the optimal stopping point.

With contraction c = (1-r)^m after m channel uses, the x- and y-basis
measurements carry classical Fisher information

    F_x = 4 pi^2 m^2 c^2 sin^2(2 pi m theta) / (1 - c^2 cos^2(2 pi m theta))
    F_y = 4 pi^2 m^2 c^2 cos^2(2 pi m theta) / (1 - c^2 sin^2(2 pi m theta))

bounded by the SLD quantum information H = 4 pi^2 m^2 c^2.  Per channel
use, H/m peaks at m = -1/(2 ln(1-r)), which for small r is about 1/(2r);
past roughly -log2(r) doubling stages the per-use information collapses.
"""

import math
from dataclasses import dataclass

import numpy as np

_FOUR_PI_SQ = 4.0 * math.pi**2


@dataclass(frozen=True)
class InfoPoint:
    """Information quantities at one (theta, m, r) point."""

    m: int
    theta: float
    r: float
    f_x: float
    f_y: float
    h: float

    @property
    def h_per_use(self) -> float:
        return self.h / self.m


@dataclass(frozen=True)
class StageInfo:
    """Theta-averaged per-use information at one iterative stage."""

    stage: int
    m: int
    h_per_use: float
    f_x_avg_per_use: float
    f_y_avg_per_use: float


def fisher_x(theta: float, m: int, r: float) -> float:
    """Classical Fisher information of the x-basis measurement.

    At r = 0 the expression is 0/0 wherever sin vanishes; the limit is
    4 pi^2 m^2 for every theta, so that value is returned for r = 0.
    """
    if r == 0.0:
        return _FOUR_PI_SQ * m * m
    c2 = (1.0 - r) ** (2 * m)
    s = math.sin(2.0 * math.pi * m * theta)
    co = math.cos(2.0 * math.pi * m * theta)
    return _FOUR_PI_SQ * m * m * c2 * s * s / (1.0 - c2 * co * co)


def fisher_y(theta: float, m: int, r: float) -> float:
    """Classical Fisher information of the y-basis measurement."""
    if r == 0.0:
        return _FOUR_PI_SQ * m * m
    c2 = (1.0 - r) ** (2 * m)
    s = math.sin(2.0 * math.pi * m * theta)
    co = math.cos(2.0 * math.pi * m * theta)
    return _FOUR_PI_SQ * m * m * c2 * co * co / (1.0 - c2 * s * s)


def sld_info(m: int, r: float) -> float:
    """SLD quantum information 4 pi^2 m^2 (1-r)^{2m}; theta-independent."""
    return _FOUR_PI_SQ * m * m * (1.0 - r) ** (2 * m)


def info_point(theta: float, m: int, r: float) -> InfoPoint:
    return InfoPoint(
        m=m,
        theta=theta,
        r=r,
        f_x=fisher_x(theta, m, r),
        f_y=fisher_y(theta, m, r),
        h=sld_info(m, r),
    )


def optimal_uses(r: float):
    """Stopping point maximizing per-use information.

    Returns (m_exact, m_small_r, l_stages) where m_exact maximizes H/m
    over continuous m, m_small_r = 1/(2r) is the small-r approximation,
    and l_stages = -log2(r) is the matching number of doubling stages.
    """
    if not (0.0 < r < 1.0):
        raise ValueError(f"noise rate must be in (0, 1), got {r}")
    m_exact = -1.0 / (2.0 * math.log(1.0 - r))
    return m_exact, 1.0 / (2.0 * r), -math.log2(r)


def info_curve(r: float, k_max: int, theta_grid_size: int = 1024):
    """Per-use information at stages 1..k_max (m = 2^{k-1}).

    H/m needs no averaging; F_x/m and F_y/m are averaged over a uniform
    theta grid.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    thetas = np.arange(theta_grid_size) / theta_grid_size
    out = []
    for k in range(1, k_max + 1):
        m = 2 ** (k - 1)
        fx = float(np.mean([fisher_x(t, m, r) for t in thetas]))
        fy = float(np.mean([fisher_y(t, m, r) for t in thetas]))
        out.append(
            StageInfo(
                stage=k,
                m=m,
                h_per_use=sld_info(m, r) / m,
                f_x_avg_per_use=fx / m,
                f_y_avg_per_use=fy / m,
            )
        )
    return out
