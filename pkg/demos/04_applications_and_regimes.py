"""
Maps, fibered powers and asymptotic regimes
===========================================

Bounds for pull-backs and images of semi-algebraic sets, followed by the
leading-coefficient crossover and the growth of projective quadrics.
"""

from bettibound import Image, PullBack, image_bound, leading_coefficient_comparison, pull_back_bound
from bettibound.verify import quadrics_witness_table

# inverse image of a set in R^m under a polynomial map R^k -> R^m
print("pull-back, k=1, m=1, d=D=2, s=1:", pull_back_bound(PullBack(k=1, m=1, d=2, D=2, s=1)).value)

# images: each extra Betti index adds one more fibered power
for i in range(3):
    print(f"image b_{i} bound:", image_bound(Image(k=1, m=2, d=2, D=2, s=1, i=i)).value)

# the leading coefficient of the new bound beats the classical one from l = 9 on
print("\n  l   new coefficient        classical")
for ell in range(6, 13):
    first, second = leading_coefficient_comparison(ell)
    print(f"{ell:3d}   {float(first):>14.6f}   {float(second):>10.1f}   {'new' if first < second else 'classical'}")

# projective quadrics: the Betti sum minus its leading term, scaled by k^(l-2), stays below 1
for ell in (3, 4, 5):
    table = quadrics_witness_table(ell, k_max=40)
    print(f"\nl={ell}: largest scaled gap {float(max(g for _, g in table)):.4f} over k = {ell + 1}..40")
