"""Size measurement budgets with the Hoeffding calculator.

Each stage needs both frequency estimates within 0.306 of their means,
which a per-basis budget of ceil(5.34 ln(4 l / eps)) measurements
guarantees with overall failure probability at most eps.
"""

from arcphase import coverage_guarantee_check, default_epsilon, sample_budget

print("Budgets for a fixed failure probability eps = 1%:")
print(f"{'stages':>6} {'N/basis':>8} {'N_tot':>6} {'channel uses':>13}")
for l in (2, 4, 6, 8, 10):
    b = sample_budget(l, 0.01)
    print(f"{l:>6} {b.n_per_basis:>8} {b.n_total_per_stage:>6} {b.total_channel_uses:>13}")

print("\nBudgets with the Heisenberg-tracking choice eps = 2^(-2l):")
print(f"{'stages':>6} {'epsilon':>12} {'N/basis':>8} {'channel uses':>13}")
for l in (3, 5, 7, 9):
    eps = default_epsilon(l)
    b = sample_budget(l, eps)
    print(f"{l:>6} {eps:>12.3e} {b.n_per_basis:>8} {b.total_channel_uses:>13}")

l, eps = 6, 2**-12
b = sample_budget(l, eps)
print(f"\nSanity check at l={l}, eps=2^-12: N={b.n_per_basis} per basis")
print(f"  guarantee met with N={b.n_per_basis}: {coverage_guarantee_check(l, eps, b.n_per_basis)}")
print(f"  guarantee met with N=10:  {coverage_guarantee_check(l, eps, 10)}")
