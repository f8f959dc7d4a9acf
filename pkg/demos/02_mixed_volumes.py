"""
Mixed volumes of boxes and simplices
====================================

Mixed volumes via permanents and block factorisation, checked against a
finite-difference oracle, and the partition sums used by the box bounds.
"""

from math import factorial, prod

from bettibound import (
    BlockProduct,
    Box,
    GenericSystem,
    ScaledSimplex,
    betti_boxes_generic,
    betti_boxes_weighted,
    betti_generic,
    mixed_volume,
    mixed_volume_oracle_interpolation,
    n_coarse_bound,
    n_refined,
)

# two squares of sides 2 and 3: MV = perm([[2,2],[3,3]]) / 2! = 6
squares = [Box((2, 2)), Box((3, 3))]
print("MV(squares) =", mixed_volume(squares), "| oracle:", mixed_volume_oracle_interpolation(squares))

# BKK: k! MV of k dense supports is the number of common roots (Bezout for simplices)
simplices = [ScaledSimplex.standard(d, 3) for d in (2, 3, 5)]
print("3! MV(simplices of degrees 2,3,5) =", factorial(3) * mixed_volume(simplices))

# bodies that are products of simplices on the same blocks factor blockwise
P = BlockProduct((((1, 2), 2), ((3,), 3)))
Q = BlockProduct((((1, 2), 1), ((3,), 4)))
print("MV(P, Q, Q) =", mixed_volume([(P, 1), (Q, 2)]))

# partition sums over columns: the refined sum relates to the true mixed volume by prod(alpha!)
d, alpha = [[2, 3, 1], [1, 2, 2]], (1, 2)
mv = mixed_volume([(Box(tuple(r)), a) for r, a in zip(d, alpha)])
print(f"\nn_refined = {n_refined(d, alpha)}, n_coarse = {n_coarse_bound(d, alpha)}, "
      f"3! MV / prod(alpha!) = {factorial(3) * mv / prod(factorial(a) for a in alpha)}")

# consequently the box Betti expression needs those weights to reproduce the exact value
for rows in ([[2, 2]], [[1, 1, 1]], [[2, 3, 1], [1, 2, 2]]):
    exact = betti_generic(GenericSystem.boxes(rows)).betti_sum
    print(f"boxes {rows}: unweighted {betti_boxes_generic(rows)}, weighted {betti_boxes_weighted(rows)}, exact {exact}")
