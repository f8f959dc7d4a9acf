"""
Comparing Betti-number bounds
=============================

Evaluate the explicit bounds in the catalog, see which arm of each minimum
wins, and compare new and classical bounds over a grid.
"""

from bettibound import (
    barone_basu_bound,
    evaluate,
    g_min,
    optm_bound,
    total_degree_variety_bound,
    two_degree_variety_bound,
)

# total-degree bound against the classical d(2d-1)^(k-1)
print("   d  k   total-degree      optm")
for d in (2, 3, 5):
    for k in (2, 3, 4):
        new = total_degree_variety_bound(d, k, 1)
        print(f"{d:4d} {k:2d} {str(new.value):>14} {str(optm_bound(d, k).value):>9}   ({new.branch})")

# block degrees: the minimum of two arms, with the branch recorded
print()
for blocks in ((1, 1), (2, 1)):
    r = g_min((2, 2), blocks, 1)
    print(f"block sizes {blocks}, degrees (2, 2): {r.value} via {r.branch}")

# two-degree systems: degree d1 in general, degree d2 for a few polynomials
r = two_degree_variety_bound(2, 2, 2)
details = "; ".join(f"{name} = {value}" for name, value in r.details)
print(f"\ntwo-degree variety bound (2,2,2): {r.value} ({details})")

# a bound whose exponent base is ambiguous: both readings are reported
for interp in ("d2", "d1", "max"):
    print(f"sign conditions on a 2-dimensional variety, base={interp}: {barone_basu_bound(2, 5, 3, 2, 1, interp).value}")

# every catalog entry is reachable by identifier
print("\nby id:", evaluate("quadrics-projective", k=3, l=2).value, evaluate("one-multi", degrees=[2, 2]).value)
