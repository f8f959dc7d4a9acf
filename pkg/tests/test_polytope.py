import random
from fractions import Fraction
from itertools import permutations
from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as O
from bettibound.errors import ShapeMismatchError, UnsupportedFamilyError
from bettibound.polytope import (
    BlockProduct,
    Box,
    MinkowskiSum,
    MixedVolumeQuery,
    ScaledSimplex,
    dimension,
    face_at_zero,
    mixed_volume,
    mixed_volume_oracle_interpolation,
    mixed_volume_report,
    n_coarse_bound,
    n_refined,
    permanent,
    volume,
)
from bettibound.verify import random_box_matrix, random_mv_query


class TestFaces:
    def test_box_coordinate_deletion(self):
        assert face_at_zero(Box((2, 3, 4)), {2}) == Box((2, 4), (1, 3))

    @pytest.mark.parametrize("d,k,I", [(3, 4, {1}), (2, 5, {2, 4}), (5, 3, {1, 2, 3})])
    def test_simplex_keeps_its_side(self, d, k, I):
        face = face_at_zero(ScaledSimplex.standard(d, k), I)
        assert isinstance(face, ScaledSimplex)
        assert face.d == d and len(face.vars) == k - len(I)

    def test_block_product_blockwise(self):
        d = 5
        P = BlockProduct(((((1, 2)), d), ((3,), 2)))
        assert face_at_zero(P, {1}) == BlockProduct((((2,), d), ((3,), 2)))

    def test_minkowski_sum_memberwise(self):
        P = MinkowskiSum((Box((1, 2)), ScaledSimplex.standard(3, 2)))
        assert face_at_zero(P, {1}) == MinkowskiSum((Box((2,), (2,)), ScaledSimplex(3, (2,))))


class TestVolume:
    def test_box(self):
        assert volume(Box((2, 3, 4))) == 24

    @pytest.mark.parametrize("d,k", [(1, 1), (2, 3), (3, 4)])
    def test_simplex(self, d, k):
        assert volume(ScaledSimplex.standard(d, k)) == Fraction(d**k, factorial(k))

    def test_lower_dimensional_body_has_zero_volume(self):
        assert volume(Box((2, 0))) == 0
        assert dimension(Box((2, 0))) == 1

    def test_ambient_larger_than_support(self):
        assert volume(Box((2, 3)), ambient=[1, 2, 3]) == 0


class TestPermanent:
    @settings(max_examples=40)
    @given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-3, 4), min_size=n, max_size=n), min_size=n, max_size=n)))
    def test_matches_permutation_expansion(self, M):
        assert permanent(M) == O.permanent_brute(M)

    def test_non_square_rejected(self):
        with pytest.raises(ShapeMismatchError):
            permanent([[1, 2]])


class TestMixedVolume:
    @pytest.mark.parametrize("m", range(1, 6))
    def test_identical_unit_cubes(self, m):
        assert mixed_volume([(Box((1,) * m), m)]) == 1

    def test_cubes_with_multiplicities(self):
        d, alpha = (2, 3, 5), (1, 2, 1)
        m = sum(alpha)
        q = [(Box((di,) * m), a) for di, a in zip(d, alpha)]
        assert mixed_volume(q) == prod(di**a for di, a in zip(d, alpha))

    def test_axis_segments(self):
        a = (2, 3, 5, 7)
        m = len(a)
        segs = [Box(tuple(a[i] if j == i else 0 for j in range(m))) for i in range(m)]
        assert mixed_volume(segs) == Fraction(prod(a), factorial(m))

    def test_two_equal_boxes(self):
        B = Box((2, 3))
        assert mixed_volume_oracle_interpolation([B, B]) == mixed_volume([B, B]) == 6

    def test_two_different_squares(self):
        q = [Box((2, 2)), Box((3, 3))]
        assert mixed_volume(q) == Fraction(permanent([[2, 2], [3, 3]]), 2) == 6
        assert mixed_volume_oracle_interpolation(q) == 6

    def test_simplices(self):
        q = [ScaledSimplex.standard(2, 3), ScaledSimplex.standard(3, 3), ScaledSimplex.standard(5, 3)]
        assert mixed_volume(q) * factorial(3) == 30

    def test_block_products_factor(self):
        P = BlockProduct((((1, 2), 2), ((3,), 3)))
        Q = BlockProduct((((1, 2), 1), ((3,), 4)))
        expected = O.mixed_volume_sympy([({(1, 2): 2, (3,): 3}, 1), ({(1, 2): 1, (3,): 4}, 2)], 3)
        assert mixed_volume([(P, 1), (Q, 2)]) == expected

    def test_minkowski_sum_member(self):
        value, strategies = mixed_volume_report([MinkowskiSum((Box((1, 1)), Box((2, 0)))), Box((1, 2))])
        assert value == Fraction(permanent([[3, 1], [1, 2]]), 2)
        assert strategies

    def test_unsupported_mixture_escalates(self):
        with pytest.raises(UnsupportedFamilyError, match="interpolation"):
            mixed_volume([Box((2, 3)), ScaledSimplex.standard(2, 2)])

    def test_multiplicity_must_match_dimension(self):
        with pytest.raises(ShapeMismatchError):
            MixedVolumeQuery(((Box((1, 1)), 1),))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 4).flatmap(lambda m: st.lists(st.lists(st.integers(0, 3), min_size=m, max_size=m), min_size=m, max_size=m)))
    def test_boxes_match_symbolic_expansion(self, rows):
        m = len(rows)
        expected = O.mixed_volume_sympy([({(j + 1,): r[j] for j in range(m)}, 1) for r in rows], m)
        assert mixed_volume([Box(tuple(r)) for r in rows]) == expected

    def test_random_queries_match_interpolation(self):
        rng = random.Random(2024)
        for _ in range(100):
            q = random_mv_query(rng)
            assert mixed_volume(q) == mixed_volume_oracle_interpolation(q)

    @settings(max_examples=30)
    @given(st.lists(st.integers(0, 4), min_size=3, max_size=3), st.lists(st.integers(0, 4), min_size=3, max_size=3))
    def test_symmetric_in_body_order(self, a, b):
        c = (1, 2, 3)
        values = {mixed_volume([Box(tuple(x)) for x in p]) for p in permutations([a, b, c])}
        assert len(values) == 1

    @settings(max_examples=30)
    @given(st.lists(st.integers(0, 3), min_size=2, max_size=2), st.lists(st.integers(0, 3), min_size=2, max_size=2),
           st.lists(st.integers(0, 3), min_size=2, max_size=2))
    def test_multilinear_in_minkowski_sums(self, a, a2, b):
        lhs = mixed_volume([MinkowskiSum((Box(tuple(a)), Box(tuple(a2)))), Box(tuple(b))])
        rhs = mixed_volume([Box(tuple(a)), Box(tuple(b))]) + mixed_volume([Box(tuple(a2)), Box(tuple(b))])
        assert lhs == rhs


class TestPartitionSums:
    def test_two_by_two_example(self):
        assert n_refined([[2, 2], [3, 3]], (1, 1)) == 12

    @pytest.mark.parametrize("row", [(2, 3, 4), (1, 5), (7,)])
    def test_single_row_is_product(self, row):
        assert n_refined([row], (len(row),)) == prod(row)
        assert n_coarse_bound([row], (len(row),)) == prod(row)

    def test_coarse_cubes(self):
        d, alpha = (2, 3), (2, 1)
        rows = [[di] * 3 for di in d]
        assert n_coarse_bound(rows, alpha) == 2**2 * 3

    def test_coarse_enumerated(self):
        assert n_coarse_bound([[2, 5], [3, 1]], (1, 1)) == max(2 * 1, 5 * 3) == 15

    def test_bad_alpha(self):
        with pytest.raises(ShapeMismatchError):
            n_refined([[1, 2], [3, 4]], (1, 2))

    def test_ragged_matrix(self):
        with pytest.raises(ShapeMismatchError):
            n_refined([[1, 2], [3]], (1, 1))

    def test_against_brute_force_and_true_mixed_volume(self):
        rng = random.Random(5)
        for _ in range(60):
            d = random_box_matrix(rng, max_k=6)
            ell, k = len(d), len(d[0])
            alpha = [1] * ell
            for _ in range(k - ell):
                alpha[rng.randrange(ell)] += 1
            n = n_refined(d, alpha)
            assert n == O.n_refined_brute(d, alpha)
            mv = mixed_volume([(Box(tuple(r)), a) for r, a in zip(d, alpha)])
            assert n * prod(factorial(a) for a in alpha) == factorial(k) * mv
            assert n_coarse_bound(d, alpha) <= n
