import random
from fractions import Fraction
from itertools import product

import pytest

import oracles as O
from bettibound import catalog as cat
from bettibound.errors import HypothesisError, UnknownBoundError
from bettibound.generic import quadrics_B, quadrics_projective


def frac(x):
    return O.to_fraction(x)


class TestHelpers:
    @pytest.mark.parametrize("d,up", [(3, 4), (4, 4), (1, 2), (0, 0)])
    def test_round_up_even(self, d, up):
        assert cat.round_up_even(d) == up

    def test_f2_examples(self):
        assert cat.f2(2, 3, 1) == 10
        assert cat.f2(2, 3, 2) == 22

    def test_odd_dprime_rejected(self):
        with pytest.raises(HypothesisError):
            cat.f1(3, 4, 1)
        with pytest.raises(HypothesisError):
            cat.f2(5, 4, 1)

    @pytest.mark.parametrize("dp,k,j", [(dp, k, j) for dp in (2, 4, 6) for k in range(2, 7) for j in range(1, k)])
    def test_f1_f2_match_transcription(self, dp, k, j):
        assert cat.f1(dp, k, j) == O.F1(dp, k, j)
        assert cat.f2(dp, k, j) == O.F2(dp, k, j)


class TestTotalDegree:
    @pytest.mark.parametrize("k", range(1, 8))
    def test_linear_equations(self, k):
        assert cat.total_degree_variety_bound(1, k, 2).value == 1

    def test_beats_optm_for_cubic_surfaces(self):
        r = cat.total_degree_variety_bound(2, 3, 1)
        assert r.value < 18 == cat.optm_bound(2, 3).value

    @pytest.mark.parametrize("d", range(1, 9))
    def test_equal_to_optm_on_the_line(self, d):
        assert cat.total_degree_variety_bound(d, 1, 1).value == cat.optm_bound(d, 1).value

    @pytest.mark.parametrize("d,k,ell", [(d, k, l) for d in range(1, 6) for k in range(1, 6) for l in (1, 2, 3, 7)])
    def test_matches_transcription(self, d, k, ell):
        assert cat.total_degree_variety_bound(d, k, ell).value == O.total_degree_bound(d, k, ell)

    def test_branch_is_recorded(self):
        r = cat.total_degree_variety_bound(3, 3, 1)
        assert r.branch in ("1/2 (1 + (2d-1)^k)", "F1/F2 sum")


class TestClassic:
    def test_optm_example(self):
        assert cat.optm_bound(2, 3).value == 18

    @pytest.mark.parametrize("k", range(1, 10))
    def test_optm_linear(self, k):
        assert cat.optm_bound(1, k).value == 1

    def test_b99_smallest(self):
        # i = 0: j = 0, 1 -> 1 + 2*6; i = 1: j = 0 -> 1
        assert cat.b99_bound(1, 1, 1).value == 14 == O.b99(1, 1, 1)

    @pytest.mark.parametrize("s,d,k", [(s, d, k) for s in range(0, 4) for d in range(1, 4) for k in range(1, 5)])
    def test_sign_condition_sums(self, s, d, k):
        assert cat.b99_bound(s, d, k).value == O.b99(s, d, k)
        assert cat.gv07_bound(s, d, k).value == O.gv07(s, d, k)
        assert cat.gv07_bound(s, d, k).value >= cat.b99_bound(s, d, k).value

    @pytest.mark.parametrize("s,k,i", [(s, k, i) for k in range(1, 7) for s in range(0, k + 1) for i in range(k)])
    def test_basu_kettner(self, s, k, i):
        assert cat.basu_kettner_bound(s, k, i).value == frac(O.basu_kettner(s, k, i))

    def test_basu_kettner_hypotheses(self):
        with pytest.raises(HypothesisError, match="s <= k"):
            cat.basu_kettner_bound(4, 3, 0)
        with pytest.raises(HypothesisError, match="degrees <= 2"):
            cat.basu_kettner_bound(1, 3, 0, degree=3)

    @pytest.mark.parametrize(
        "degrees,k,kp", [((2,), 3, 2), ((2, 3), 4, 2), ((3, 3, 2), 5, 2), ((4,), 2, 1), ((2, 2), 5, 0)]
    )
    def test_safey_el_din(self, degrees, k, kp):
        assert cat.safey_el_din_bound(degrees, k, kp).value == O.safey(degrees, k, kp)
        assert cat.safey_el_din_bound(degrees, k, kp, variant="regular").value == O.safey(degrees, k, kp, True)

    def test_dispatch(self):
        assert cat.classic_bound("OPTM", d=2, k=3).value == 18
        assert cat.classic_bound("BasuKettner", s=1, k=2, i=0).value == cat.basu_kettner_bound(1, 2, 0).value
        with pytest.raises(UnknownBoundError):
            cat.classic_bound("nope")

    def test_hypothesis_message_names_clause(self):
        with pytest.raises(HypothesisError, match="d >= 1"):
            cat.optm_bound(0, 3)


class TestMultiDegreeBlocks:
    def test_single_block_multinomial_is_one(self):
        k, d, j = 3, 4, 2
        assert cat.g_gen([d], [k], j) == frac(O.G_gen([d], [k], j))

    def test_two_block_example(self):
        assert cat.g_gen([2, 2], [1, 1], 1) == Fraction(6569, 4)

    @pytest.mark.parametrize("d,ks", [((2, 2), (1, 1)), ((3, 2), (2, 1)), ((2, 5), (1, 2)), ((4,), (3,)), ((2, 3, 2), (1, 1, 1))])
    def test_g_min_matches_transcription(self, d, ks):
        for ell in range(1, sum(ks) + 1):
            assert cat.g_min(d, ks, ell).value == frac(O.G_min(d, ks, ell))

    def test_g_min_branches_are_deterministic(self):
        branches = {cat.g_min((d, d), (1, 1), 2).branch for d in (2, 50, 5000)}
        assert branches
        assert cat.g_min((2, 2), (1, 1), 2).branch == cat.g_min((2, 2), (1, 1), 2).branch

    def test_degree_below_two_rejected(self):
        with pytest.raises(HypothesisError, match="d_i >= 2"):
            cat.g_min((1, 2), (1, 1), 1)

    @pytest.mark.parametrize("d,ks,s", [((2, 2), (1, 1), 1), ((3, 2), (2, 1), 2), ((2,), (3,), 3)])
    def test_semi_sums(self, d, ks, s):
        k = sum(ks)
        assert cat.multi_semi_bounds(d, ks, s).value == O.multi_semi(d, ks, s)
        per_i = [cat.multi_semi_bounds(d, ks, s, i).value for i in range(k)]
        assert per_i == [O.multi_semi(d, ks, s, i) for i in range(k)]
        assert per_i == sorted(per_i, reverse=True)
        assert per_i[-1] == s * 4 * cat.g_min(d, ks, 1).value
        assert cat.multi_semi_bounds(d, ks, s).value >= max(per_i)

    def test_index_above_range_rejected(self):
        with pytest.raises(HypothesisError):
            cat.multi_semi_bounds((2, 2), (1, 1), 1, i=2)


class TestBoxes:
    def test_single_row_all_twos(self):
        k = 3
        assert cat.k_full([[2] * k]) == O.K_full([[2] * k])

    def test_stacked_matrix_has_twice_the_rows(self):
        d = [[2, 3, 4], [5, 2, 2]]
        stacked = cat.stacked_even_matrix(d)
        assert len(stacked) == 2 * len(d)
        assert stacked[:2] == stacked[2:] == [[2, 4, 4], [6, 2, 2]]

    @pytest.mark.parametrize("d", [[[2, 3]], [[2, 2], [3, 4]], [[2, 3, 2], [4, 2, 2]], [[3, 2, 5]]])
    def test_k_matches_brute_force(self, d):
        assert cat.k_gen(d) == O.K_gen(d)
        assert cat.k_full(d) == O.K_full(d)

    def test_entries_below_two_rejected(self):
        with pytest.raises(HypothesisError):
            cat.box_variety_bound([[1, 2]])

    def test_dominant_factor_regime(self):
        # diagonal degrees with O(1) off-diagonal entries; the last degree governs the growth
        k, ell, d1 = 4, 2, 4
        ratios = []
        for dl in (2, 4, 8, 16, 32, 64):
            M = [[d1, 2, 2, 2], [2, dl, dl, dl]]
            ratios.append(Fraction(cat.k_full(M), d1 * dl ** (k - ell + 1)))
        assert ratios == sorted(ratios, reverse=True)
        assert ratios[-1] > 0

    def test_semi_per_i(self):
        d, s = [[2, 3, 2]], 2
        per_i = [cat.box_bounds(d, s, i).value for i in range(3)]
        assert per_i == sorted(per_i, reverse=True)
        assert cat.box_bounds(d, s).value >= per_i[0]


class TestPartiallyQuadratic:
    def test_h_gen_example(self):
        assert cat.h_gen(2, 1, 2, 1) == 27

    @pytest.mark.parametrize("d,k1,k2", [(d, k1, k2) for d in (2, 3) for k1 in (0, 1, 2) for k2 in (0, 1, 3) if k1 + k2])
    def test_h_full(self, d, k1, k2):
        for ell in range(1, k1 + k2 + 1):
            assert cat.h_full(d, k1, k2, ell) == O.H_full(d, k1, k2, ell)
        dp = cat.round_up_even(d)
        assert cat.h_full(d, k1, k2, 1) == 3 + 2 * (cat.h_gen(dp, k1, k2, 1) + cat.h_gen(dp, k1, k2, 2))

    def test_pure_quadratic_growth_is_polynomial_in_k2(self):
        ell = 2
        vals = [cat.h_full(2, 0, k2, ell) for k2 in range(2, 30)]
        # only j <= ell contribute, so the value is a polynomial of degree ell in k2
        scaled = [Fraction(v, k2**ell) for v, k2 in zip(vals, range(2, 30))]
        assert max(scaled[10:]) <= max(scaled[:10])
        assert scaled[-1] > 0

    @pytest.mark.parametrize("s,m,d,k1,k2", [(1, 0, 2, 1, 1), (2, 1, 3, 1, 2), (0, 1, 2, 2, 1), (1, 2, 2, 0, 3)])
    def test_bpr_double_sum(self, s, m, d, k1, k2):
        assert cat.bpr_new_bounds(s, m, d, k1, k2).value == O.bpr_new(s, m, d, k1, k2)
        for i in range(k1 + k2):
            assert cat.bpr_new_bounds(s, m, d, k1, k2, i).value == O.bpr_new(s, m, d, k1, k2, i)

    def test_bpr_rejects_more_quadrics_than_quadratic_variables(self):
        with pytest.raises(HypothesisError):
            cat.bpr_new_bounds(1, 3, 2, 1, 2)

    def test_bpr_without_general_polynomials(self):
        # s = 0 leaves only j1 = 0 terms
        s, m, d, k1, k2 = 0, 1, 2, 1, 2
        expected = sum(O.C(m + 1, j) * 5**j * O.H_full(2 * d, k1, k2, j + 1) for j in range(1, m + 2))
        assert cat.bpr_new_bounds(s, m, d, k1, k2, 0).value == expected


class TestProjectiveQuadrics:
    def test_single_quadric(self):
        assert cat.projective_quadrics_bound(3, 1).value == O.projective_quadrics_additive(3, 1)

    @pytest.mark.parametrize("k,ell", [(k, l) for k in range(2, 9) for l in range(1, min(3, k - 1) + 1)])
    def test_bound_dominates_exact(self, k, ell):
        assert cat.projective_quadrics_bound(k, ell).value >= quadrics_projective(k, ell).betti_sum

    @pytest.mark.parametrize("k", range(1, 8))
    def test_inner_sum_shares_B(self, k):
        for i in range(1, k + 1):
            inner = sum((-1) ** h * quadrics_B(h, k, i) for h in range(i))
            sign = (-1) ** (k - i)
            expected = (1 + (-1) ** (k - i + 1)) * (k - i + 1) + sign * (inner + (k - i + 1))
            assert cat.h_gen_prime(k, i) == expected == O.H_gen_prime(k, i)


class TestSeveralBlocks:
    @pytest.mark.parametrize("d,k2", [([2], 1), ([2, 3], 2), ([3, 2, 2], 1)])
    def test_m_full(self, d, k2):
        for ell in range(1, len(d) + k2 + 1):
            assert cat.m_full(d, len(d), k2, ell) == O.M_full(d, len(d), k2, ell)

    def test_no_per_variable_block_gives_empty_product(self):
        # 2 + (-1)^3 + 1 * 2^1 * 0! * 3^0 * 7^0 * (empty product)
        assert cat.m_gen([], 0, 3, 1) == 2 - 1 + 2 == O.M_gen([], 0, 3, 1)

    def test_semi_per_i_nonincreasing(self):
        per_i = [cat.partially_quadratic_multi_bounds([2, 3], 2, 1, i).value for i in range(4)]
        assert per_i == sorted(per_i, reverse=True)


class TestTwoDegree:
    def test_refined_F_example(self):
        assert cat.refined_F(2, 2, 2) == 22

    def test_refined_F_line_convention(self):
        assert cat.refined_F(2, 2, 1) == 2
        assert cat.refined_F(5, 7, 0) == 0

    def test_variety_bound(self):
        r = cat.two_degree_variety_bound(2, 2, 2)
        assert r.value == 25
        assert dict(r.details)

    @pytest.mark.parametrize("d1,d2,k", [(d1, d2, k) for d1 in (2, 3) for d2 in (2, 3, 5) for k in range(0, 6) if d1 <= d2])
    def test_refined_F_transcription(self, d1, d2, k):
        assert cat.refined_F(d1, d2, k) == frac(O.refined_F(d1, d2, k))

    def test_d1_below_two_rejected(self):
        with pytest.raises(HypothesisError):
            cat.two_degree_variety_bound(1, 2, 2)

    @pytest.mark.parametrize("d1,d2,k,kp,s", [(2, 3, 3, 1, 1), (2, 2, 4, 2, 2), (3, 5, 4, 3, 1)])
    def test_bb_new(self, d1, d2, k, kp, s):
        per_i = [cat.bb_new_bounds(d1, d2, k, kp, s, i).value for i in range(kp)]
        assert per_i == [O.bb_new(d1, d2, k, kp, s, i) for i in range(kp)]
        assert per_i == sorted(per_i, reverse=True)


class TestBaroneBasu:
    def test_without_inequalities_only_j_zero_and_one_survive(self):
        d1, d2, k, kp = 2, 3, 3, 2
        r = cat.barone_basu_bound(d1, d2, k, kp, 0)
        j0 = O.C(k + 1, k - kp + 1) * (2 * d1) ** (k - kp) * max(2 * d1, d2) ** kp + 2 * (k + 1)
        assert r.value == O.to_fraction(O.barone_basu(d1, d2, k, kp, 0, d2))
        assert r.value > j0

    def test_only_j_zero_when_kprime_is_zero(self):
        d1, d2, k = 2, 3, 3
        j0 = O.C(k + 1, k + 1) * (2 * d1) ** k + 2 * (k + 1)
        assert cat.barone_basu_bound(d1, d2, k, 0, 0).value == j0

    def test_readings_differ_and_are_reported(self):
        r = cat.barone_basu_bound(2, 5, 3, 2, 1)
        assert r.value == O.to_fraction(O.barone_basu(2, 5, 3, 2, 1, 5))
        r1 = cat.barone_basu_bound(2, 5, 3, 2, 1, interp="d1")
        assert r1.value == O.to_fraction(O.barone_basu(2, 5, 3, 2, 1, 2))
        assert r.value != r1.value

    def test_d1_above_d2_rejected(self):
        with pytest.raises(HypothesisError):
            cat.barone_basu_bound(3, 2, 3, 1, 1)


class TestRegimes:
    @pytest.mark.parametrize("d,k", list(product(range(1, 9), range(1, 9))))
    def test_half_arm_versus_optm(self, d, k):
        half = Fraction(1 + (2 * d - 1) ** k, 2)
        optm = cat.optm_bound(d, k).value
        if d == 1 or k == 1:
            assert half == optm
        else:
            assert half < optm

    @pytest.mark.parametrize("ell", range(9, 21))
    def test_leading_coefficients(self, ell):
        first, second = cat.leading_coefficient_comparison(ell)
        assert first == Fraction(ell * (3**ell - 1), O.factorial(ell - 1))
        assert second == Fraction(ell + 1, 2)
        assert first < second

    def test_leading_coefficients_before_crossover(self):
        first, second = cat.leading_coefficient_comparison(8)
        assert first > second


def test_degree_monotonicity_random_grid():
    rng = random.Random(17)
    for _ in range(60):
        ks = [rng.randint(1, 2), rng.randint(1, 2)]
        d = [rng.randint(2, 6), rng.randint(2, 6)]
        ell = rng.randint(1, sum(ks))
        pos = rng.randrange(2)
        up = list(d)
        up[pos] += 1
        assert cat.g_min(up, ks, ell).value >= cat.g_min(d, ks, ell).value

        k1, k2 = rng.randint(0, 2), rng.randint(1, 2)
        dd = rng.randint(2, 6)
        ell = rng.randint(1, k1 + k2)
        assert cat.h_full(dd + 1, k1, k2, ell) >= cat.h_full(dd, k1, k2, ell)

        dv = [rng.randint(2, 5) for _ in range(k1)]
        if dv:
            up = list(dv)
            up[rng.randrange(k1)] += 1
            assert cat.m_full(up, k1, k2, ell) >= cat.m_full(dv, k1, k2, ell)

        k = rng.randint(1, 3)
        rows = rng.randint(1, k)
        M = [[rng.randint(2, 4) for _ in range(k)] for _ in range(rows)]
        M2 = [r[:] for r in M]
        M2[rng.randrange(rows)][rng.randrange(k)] += 1
        assert cat.k_full(M2) >= cat.k_full(M)
