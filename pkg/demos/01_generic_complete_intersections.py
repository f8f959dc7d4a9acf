"""
Betti sums of generic complete intersections
============================================

Exact Euler characteristics from Newton polytopes, converted to total Betti
numbers, and cross-checked against closed forms and Chern classes.
"""

from bettibound import (
    GenericSystem,
    betti_ci_total_distinct,
    betti_generic,
    betti_one_multi,
    chi_khovanskii,
    lefschetz_chi_affine,
    quadrics_projective,
)

# two generic quadrics in C^k: the Betti sum grows linearly, b = 2k
for k in range(2, 8):
    report = betti_generic(GenericSystem.total_degree(k, [2, 2]))
    print(f"two quadrics in C^{k}: chi = {report.chi}, b = {report.betti_sum}")

# one hypersurface of degree d is a bouquet of (d-1)^k spheres plus a point
print("\nhypersurfaces, b = 1 + (d-1)^k:")
for d in range(1, 5):
    row = [betti_generic(GenericSystem.total_degree(k, [d])).betti_sum for k in range(1, 6)]
    print(f"  d={d}: {[int(b) for b in row]}")

# the face-sum engine and the closed form for distinct total degrees agree
k, degrees = 4, (2, 3)
engine = betti_generic(GenericSystem.total_degree(k, degrees)).betti_sum
print(f"\ndegrees {degrees} in C^{k}: engine {engine}, closed form {betti_ci_total_distinct(k, degrees)}")

# ... and so does the Chern-class route (projective closure minus hyperplane section)
print(f"chi by faces {chi_khovanskii(GenericSystem.total_degree(k, degrees))}, "
      f"chi by Chern classes {lefschetz_chi_affine(k, degrees)}")

# multi-degree supports: degree <= 2 in each of two variables gives 6, total degree 4 would give 10
print(f"\nbidegree (2,2) curve: b = {betti_one_multi([2, 2])}; "
      f"degree-4 curve: b = {betti_ci_total_distinct(2, [4])}")

# in projective space two quadrics in P^3 meet in an elliptic curve: chi = 0, b = 1 + 2 + 1
r = quadrics_projective(3, 2)
print(f"two quadrics in P^3: chi = {r.chi}, b = {r.betti_sum}")
