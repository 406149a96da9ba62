"""Walk through the arc-refinement algorithm on a concrete run.

Three stages report width-0.3 confidence arcs for theta, 2*theta and
4*theta (all mod 1).  Folding them together pins theta down to an arc
of width 0.3/4 = 0.075.
"""

from arcphase import Arc, refine_finish, refine_init, refine_step

stage_arcs = [Arc(0.6, 0.3), Arc(0.3, 0.3), Arc(0.8, 0.3)]

print("Stage arcs (lower, width), stage k covers (2^(k-1) * theta) mod 1:")
for k, arc in enumerate(stage_arcs, start=1):
    print(f"  k={k}: [{arc.lower}, {arc.lower + arc.width}]")

state = refine_init(stage_arcs[0])
print(f"\nAfter stage 1 the running arc for 2^(k-1)*theta starts at {state.frac_lower}")
for arc in stage_arcs[1:]:
    state = refine_step(state, arc)
    print(f"After stage {state.stage} the running lower bound (mod 1) is {state.frac_lower:.6f}")

estimate, final = refine_finish(state)
print(f"\nFinal arc for theta: [{final.lower}, {final.lower + final.width}]")
print(f"Point estimate (arc midpoint): {estimate}")
print(f"Width shrank from {stage_arcs[0].width} to {final.width} over {state.stage} stages")
