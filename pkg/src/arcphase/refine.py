"""Iterative refinement of circular confidence arcs.

Stage k of the estimation procedure produces an arc L_k (width at most
1/3) believed to contain (2^{k-1} theta) mod 1.  Folding the stages
together yields a nested sequence of arcs J_k for 2^{k-1} theta with
J_{k+1} always contained in 2 J_k, and finally an arc for theta itself of
width w / 2^{l-1}.

The running lower bound z(k) of J_k grows like 2^k, so we keep only
z(k) mod 1 (all that is needed to place the next stage) together with the
telescoped sum z(1) + sum_k offset_k / 2^k, which equals z(l) / 2^{l-1}
without ever forming the large intermediate values.
"""

from dataclasses import dataclass
from fractions import Fraction

from .circle import Arc, mod1

_ONE_THIRD = Fraction(1, 3)
_TWO_THIRDS = Fraction(2, 3)


@dataclass(frozen=True)
class RefinementState:
    """State after folding in stages 1..stage."""

    stage: int
    frac_lower: float  # z(stage) mod 1
    accum_estimate: float  # z(stage) / 2^{stage-1}
    width: float


def refine_init(first_arc: Arc) -> RefinementState:
    """Start a refinement from the stage-1 arc (J_1 = L_1)."""
    if first_arc.width > _ONE_THIRD:
        raise ValueError(f"stage arc width must be <= 1/3, got {first_arc.width}")
    return RefinementState(
        stage=1,
        frac_lower=first_arc.lower,
        accum_estimate=first_arc.lower,
        width=first_arc.width,
    )


def refine_step(state: RefinementState, next_arc: Arc) -> RefinementState:
    """Fold in the arc for the next stage.

    With delta = (next_arc.lower - 2 z(k)) mod 1, the new lower bound is
    z(k+1) = 2 z(k) + offset where

        offset = delta  if delta in [0, 1/3)   (next arc inside 2 J_k),
        offset = 1/3    if delta in [1/3, 2/3) (only the upper end pokes out),
        offset = 0      if delta in [2/3, 1)   (only the lower end pokes out).

    The three ranges partition [0, 1), so exactly one case applies, and
    the new arc is always a subset of 2 J_k.
    """
    if next_arc.width != state.width:
        raise ValueError(
            f"stage arc width {next_arc.width} != refinement width {state.width}"
        )
    delta = mod1(next_arc.lower - 2 * state.frac_lower)
    if delta < _ONE_THIRD:
        offset = delta
    elif delta < _TWO_THIRDS:
        offset = _ONE_THIRD
    else:
        offset = 0
    return RefinementState(
        stage=state.stage + 1,
        frac_lower=mod1(2 * state.frac_lower + offset),
        accum_estimate=state.accum_estimate + offset / 2**state.stage,
        width=state.width,
    )


def refine_finish(state: RefinementState):
    """Collapse the refinement into (estimate, final arc) for theta.

    The final arc is J_l scaled down by 2^{l-1}; the estimate is its
    midpoint.
    """
    scale = 2 ** (state.stage - 1)
    lower = mod1(state.accum_estimate)
    width = state.width / scale
    estimate = mod1(state.accum_estimate + state.width / (2 * scale))
    return estimate, Arc(lower, width)


def refine_arcs(arcs):
    """Convenience: run init/step/finish over a sequence of stage arcs."""
    arcs = list(arcs)
    if not arcs:
        raise ValueError("at least one stage arc is required")
    state = refine_init(arcs[0])
    for arc in arcs[1:]:
        state = refine_step(state, arc)
    return refine_finish(state)
