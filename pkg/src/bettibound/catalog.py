"""Explicit Betti-number bounds as exact evaluators.

Every public bound returns a :class:`BoundResult` carrying the exact value,
the bound identifier, the hypotheses that were checked, and -- for
``min(...)`` expressions -- which arm produced the value.  Helper quantities
(``f1``, ``g_gen``, ``h_gen``, ...) return bare exact numbers.

Hypotheses are enforced, never clamped: a violated clause raises
:class:`~bettibound.errors.HypothesisError` naming it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import prod
from typing import Sequence

from .combinat import binomial, factorial, multinomial
from .errors import HypothesisError, ShapeMismatchError
from .generic import _boxes_alternating_sum, _check_matrix, quadrics_projective

__all__ = [
    "BoundResult",
    "round_up_even",
    "f1",
    "f2",
    "total_degree_variety_bound",
    "classic_bound",
    "optm_bound",
    "b99_bound",
    "gv07_bound",
    "basu_kettner_bound",
    "safey_el_din_bound",
    "g_gen",
    "g_min",
    "multi_semi_bounds",
    "stacked_even_matrix",
    "k_gen",
    "k_full",
    "box_variety_bound",
    "box_bounds",
    "h_gen",
    "h_full",
    "partially_quadratic_variety_bound",
    "partially_quadratic_bounds",
    "h_gen_prime",
    "projective_quadrics_bound",
    "bpr_new_bounds",
    "m_gen",
    "m_full",
    "partially_quadratic_multi_variety_bound",
    "partially_quadratic_multi_bounds",
    "barone_basu_bound",
    "BARONE_BASU_READINGS",
    "refined_F",
    "two_degree_variety_bound",
    "bb_new_bounds",
    "leading_coefficient_comparison",
]


@dataclass(frozen=True)
class BoundResult:
    """An evaluated bound.

    ``kind`` is ``"exact"`` when the value is the exact (generic) quantity and
    ``"bound"`` for an upper bound.  ``details`` holds auxiliary exact values
    reported next to the main one (alternative readings, simpler forms).
    """

    value: Fraction
    citation: str
    assumptions: tuple[str, ...]
    branch: str = ""
    kind: str = "bound"
    details: tuple[tuple[str, Fraction], ...] = ()


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _checked(*clauses: tuple[bool, str]) -> tuple[str, ...]:
    for ok, text in clauses:
        if not ok:
            raise HypothesisError(text)
    return tuple(text for _, text in clauses)


def _ints(xs: Sequence[int], name: str) -> tuple[int, ...]:
    out = tuple(int(x) for x in xs)
    if not out:
        raise ShapeMismatchError(f"{name} must be non-empty")
    return out


def round_up_even(d: int) -> int:
    """Least even integer ``>= d``."""
    if d < 0:
        raise HypothesisError("d >= 0")
    return d + (d % 2)


# ---------------------------------------------------------------------------
# total degree


def f1(dp: int, k: int, j: int) -> int:
    """Betti sum of one generic quadric and ``j - 1`` generic polynomials of degree ``dp`` in ``C^k``,
    written as the alternating double sum."""
    _checked((dp >= 2 and dp % 2 == 0, "d' even and >= 2"), (1 <= j <= k - 1, "1 <= j <= k - 1"))
    s = 0
    for h in range(k - j + 1):
        for i in range(h + 1):
            s += (
                _sign(k - j + h)
                * binomial(k, h + j)
                * binomial(j + i - 2, i)
                * 2 ** (h - i)
                * dp**i
            )
    return 1 + _sign(k - j + 1) + 2 * dp ** (j - 1) * s


def f2(dp: int, k: int, j: int) -> int:
    _checked((dp >= 2 and dp % 2 == 0, "d' even and >= 2"), (1 <= j <= k - 1, "1 <= j <= k - 1"))
    return 1 + _sign(k - j + 1) + binomial(k - 1, j - 1) * (dp**k + k - 1)


def total_degree_variety_bound(d: int, k: int, ell: int) -> BoundResult:
    """Betti sum of a real variety cut out by ``l`` polynomials of degree ``<= d`` in ``R^k``."""
    assumptions = _checked((ell >= 1, "l >= 1"), (d >= 1, "d >= 1"), (k >= 1, "k >= 1"))
    dp = max(2, round_up_even(d))
    arm_sum = (
        sum(binomial(ell, j) * 2**j * (f1(dp, k, j) + f2(dp, k, j)) for j in range(1, k))
        + binomial(ell, k) * 2**k * dp**k
        + 3
    )
    arm_half = Fraction(1 + (2 * d - 1) ** k, 2)
    if arm_half < arm_sum:
        return BoundResult(arm_half, "total-degree", assumptions, "1/2 (1 + (2d-1)^k)")
    return BoundResult(Fraction(arm_sum), "total-degree", assumptions, "F1/F2 sum")


# ---------------------------------------------------------------------------
# classical bounds


def optm_bound(d: int, k: int) -> BoundResult:
    assumptions = _checked((d >= 1, "d >= 1"), (k >= 1, "k >= 1"))
    return BoundResult(Fraction(d * (2 * d - 1) ** (k - 1)), "optm", assumptions)


def _sign_condition_sum(s_index: int, d: int, k: int) -> int:
    return sum(
        binomial(s_index, j) * 6**j * d * (2 * d - 1) ** (k - 1)
        for i in range(k + 1)
        for j in range(k - i + 1)
    )


def b99_bound(s: int, d: int, k: int) -> BoundResult:
    assumptions = _checked((s >= 0, "s >= 0"), (d >= 1, "d >= 1"), (k >= 1, "k >= 1"))
    return BoundResult(Fraction(_sign_condition_sum(s + 1, d, k)), "b99", assumptions)


def gv07_bound(s: int, d: int, k: int) -> BoundResult:
    assumptions = _checked((s >= 0, "s >= 0"), (d >= 1, "d >= 1"), (k >= 1, "k >= 1"))
    return BoundResult(Fraction(_sign_condition_sum(2 * k * s + 1, d, k)), "gv07", assumptions)


def basu_kettner_bound(s: int, k: int, i: int, degree: int = 2) -> BoundResult:
    """Bound on ``b_i`` for sets defined by ``s`` quadratic polynomials (``s <= k``)."""
    assumptions = _checked(
        (s >= 0, "s >= 0"),
        (s <= k, "s <= k"),
        (degree <= 2, "polynomial degrees <= 2"),
        (0 <= i <= k - 1, "0 <= i <= k - 1"),
    )
    value = Fraction(
        sum(binomial(s, j) * binomial(k + 1, j) * 2**j for j in range(min(s, k - i) + 1)), 2
    )
    return BoundResult(value, "basu-kettner", assumptions)


def safey_el_din_bound(degrees: Sequence[int], k: int, kprime: int, variant: str = "radical") -> BoundResult:
    """Connected components of a smooth variety of dimension ``kprime`` cut out by ``s`` polynomials.

    ``variant="regular"`` uses the sharper count for regular sequences.
    """
    degrees = _ints(degrees, "degrees")
    s = len(degrees)
    assumptions = _checked(
        (s <= k - 1, "s <= k - 1"),
        (all(x >= 1 for x in degrees), "d_i >= 1"),
        (0 <= kprime <= k, "0 <= k' <= k"),
        (variant in ("radical", "regular"), "variant in {radical, regular}"),
    )
    d = max(degrees)
    total = 0
    for i in range(kprime + 1):
        if k - i - s < 0:
            continue  # binomial vanishes
        top = k - i if variant == "radical" else k - i - 1
        total += (d - 1) ** (k - s - i) * binomial(top, k - i - s)
    return BoundResult(Fraction(prod(degrees) * total), "safey-el-din", assumptions, variant)


def classic_bound(id: str, **params) -> BoundResult:
    """Dispatch to one of the classical bounds by identifier."""
    table = {
        "optm": optm_bound,
        "b99": b99_bound,
        "gv07": gv07_bound,
        "basu-kettner": basu_kettner_bound,
        "safey-el-din": safey_el_din_bound,
    }
    key = id.lower().replace("_", "-")
    aliases = {"basukettner": "basu-kettner", "safeyeldin": "safey-el-din"}
    key = aliases.get(key, key)
    if key not in table:
        from .errors import UnknownBoundError

        raise UnknownBoundError(f"unknown classic bound {id!r}; known: {sorted(table)}")
    return table[key](**params)


# ---------------------------------------------------------------------------
# multi-degree blocks


def g_gen(d: Sequence[int], k: Sequence[int], j: int) -> Fraction:
    d, k = _ints(d, "d"), _ints(k, "k")
    if len(d) != len(k):
        raise ShapeMismatchError("one degree per block required")
    _checked((j >= 1, "j >= 1"), (all(x >= 0 for x in k), "block sizes >= 0"))
    K, p = sum(k), len(k)
    return (
        1
        + _sign(K - j + 1)
        + Fraction((K - j + 2) ** 2 * binomial(K, j - 1), multinomial(K, k))
        * Fraction((1 + p) ** (3 * K - j + 1), p * (p + 2))
        * prod(di**ki for di, ki in zip(d, k))
    )


@lru_cache(maxsize=100_000)
def _g_min(d: tuple[int, ...], k: tuple[int, ...], ell: int) -> tuple[Fraction, str]:
    K = sum(k)
    dp = tuple(round_up_even(x) for x in d)
    arm_sum = 3 + sum(
        binomial(ell, j) * 2**j * (g_gen(dp, k, j) + g_gen(dp, k, j + 1)) for j in range(1, K + 1)
    )
    arm_half = g_gen(tuple(2 * x for x in d), k, 1) / 2
    if arm_half < arm_sum:
        return arm_half, "1/2 G_gen(2d, k, 1)"
    return Fraction(arm_sum), "G_gen sum"


def g_min(d: Sequence[int], k: Sequence[int], ell: int) -> BoundResult:
    """Betti sum of a variety defined by ``l`` polynomials of block degrees ``d`` on blocks of sizes ``k``."""
    d, k = _ints(d, "d"), _ints(k, "k")
    if len(d) != len(k):
        raise ShapeMismatchError("one degree per block required")
    assumptions = _checked(
        (all(x >= 2 for x in d), "d_i >= 2"),
        (all(x >= 0 for x in k) and sum(k) >= 1, "block sizes >= 0, sum >= 1"),
        (ell >= 1, "l >= 1"),
    )
    value, branch = _g_min(d, k, ell)
    return BoundResult(value, "g-min", assumptions, branch)


def _semi_sum(term, s: int, K: int, i: int | None) -> Fraction:
    if i is not None:
        return sum((binomial(s, j) * 4**j * term(j) for j in range(1, K - i + 1)), Fraction(0))
    return sum(
        (binomial(s + 1, j) * 6**j * term(j) for ii in range(K + 1) for j in range(1, K - ii + 1)),
        Fraction(0),
    )


def _index_clause(i: int | None, K: int) -> tuple[bool, str]:
    return (i is None or 0 <= i <= K - 1, "0 <= i <= k - 1")


def multi_semi_bounds(d: Sequence[int], k: Sequence[int], s: int, i: int | None = None) -> BoundResult:
    """Semi-algebraic bound for ``s`` polynomials with block degrees ``d`` on blocks ``k``.

    With ``i`` given: bound on ``b_i`` summed over sign-condition realizations;
    otherwise the total Betti bound for closed sets.
    """
    d, k = _ints(d, "d"), _ints(k, "k")
    if len(d) != len(k):
        raise ShapeMismatchError("one degree per block required")
    K = sum(k)
    assumptions = _checked(
        (s >= 1, "s >= 1"),
        (all(x >= 2 for x in d), "d_i >= 2"),
        (K >= 1, "sum of block sizes >= 1"),
        _index_clause(i, K),
    )
    value = _semi_sum(lambda j: _g_min(d, k, j)[0], s, K, i)
    return BoundResult(value, "multi-semi", assumptions, "per-i" if i is not None else "closed")


# ---------------------------------------------------------------------------
# boxes


def stacked_even_matrix(d: Sequence[Sequence[int]]) -> list[list[int]]:
    """``d'`` stacked on itself, where ``d'`` rounds every entry up to an even integer."""
    rows = _check_matrix(d)
    dp = [[round_up_even(x) for x in r] for r in rows]
    return [list(r) for r in dp] + [list(r) for r in dp]


def k_gen(d: Sequence[Sequence[int]]) -> int:
    """Alternating box sum over column subsets using ``n_refined`` as written.

    The number of rows plays the role of the number of polynomials; the sum
    is empty (zero) when there are more rows than columns.
    """
    rows = _check_matrix(d)
    if len(rows) > len(rows[0]):
        return 0
    return _boxes_alternating_sum(rows, weighted=False)


@lru_cache(maxsize=10_000)
def _k_full(rows: tuple[tuple[int, ...], ...]) -> int:
    stacked = stacked_even_matrix(rows)
    ell, k = len(rows), len(rows[0])
    total = 3
    for i in range(1, k + 1):
        for I in combinations(range(ell), i):
            total += 2 ** (i + 1) * k_gen([stacked[r] for r in I])
    return total


def k_full(d: Sequence[Sequence[int]]) -> int:
    rows = _check_matrix(d)
    _checked((all(x >= 2 for r in rows for x in r), "d_ij >= 2"))
    return _k_full(tuple(tuple(r) for r in rows))


def box_variety_bound(d: Sequence[Sequence[int]]) -> BoundResult:
    """Betti sum of a real variety cut out by polynomials with per-variable degrees ``d[i][j]``."""
    rows = _check_matrix(d)
    assumptions = _checked((all(x >= 2 for r in rows for x in r), "d_ij >= 2"))
    return BoundResult(Fraction(k_full(rows)), "box-variety", assumptions)


def box_bounds(d: Sequence[Sequence[int]], s: int, i: int | None = None) -> BoundResult:
    rows = _check_matrix(d)
    K = len(rows[0])
    assumptions = _checked(
        (all(x >= 2 for r in rows for x in r), "d_ij >= 2"), (s >= 1, "s >= 1"), _index_clause(i, K)
    )
    kd = k_full(rows)
    value = _semi_sum(lambda j: kd, s, K, i)
    return BoundResult(value, "box-semi", assumptions, "per-i" if i is not None else "closed")


# ---------------------------------------------------------------------------
# partially quadratic


def h_gen(d: int, k1: int, k2: int, j: int) -> int:
    _checked((j >= 1, "j >= 1"), (k1 >= 0 and k2 >= 0, "k1, k2 >= 0"))
    k = k1 + k2
    return 2 + _sign(k - j + 1) + j * 2**j * k ** (j - 1) * (2 * d * k + 1) ** k1


@lru_cache(maxsize=100_000)
def _h_full(d: int, k1: int, k2: int, ell: int) -> int:
    dp = round_up_even(d)
    return 3 + sum(
        binomial(ell, j) * 2**j * (h_gen(dp, k1, k2, j) + h_gen(dp, k1, k2, j + 1))
        for j in range(1, k1 + k2 + 1)
    )


def h_full(d: int, k1: int, k2: int, ell: int) -> int:
    _checked((d >= 1, "d >= 1"), (ell >= 1, "l >= 1"), (k1 >= 0 and k2 >= 0 and k1 + k2 >= 1, "k1, k2 >= 0, k1 + k2 >= 1"))
    return _h_full(d, k1, k2, ell)


def partially_quadratic_variety_bound(d: int, k1: int, k2: int, ell: int) -> BoundResult:
    """Variety cut out by ``l`` polynomials of degree ``<= d`` in ``k1`` and ``<= 2`` in ``k2`` variables."""
    assumptions = _checked(
        (d >= 2, "d >= 2"), (ell >= 1, "l >= 1"), (k1 >= 0 and k2 >= 0 and k1 + k2 >= 1, "k1, k2 >= 0, k1 + k2 >= 1")
    )
    return BoundResult(Fraction(_h_full(d, k1, k2, ell)), "partially-quadratic-variety", assumptions)


def partially_quadratic_bounds(d: int, k1: int, k2: int, s: int, i: int | None = None) -> BoundResult:
    K = k1 + k2
    assumptions = _checked(
        (d >= 2, "d >= 2"), (s >= 1, "s >= 1"), (k1 >= 0 and k2 >= 0 and K >= 1, "k1, k2 >= 0, k1 + k2 >= 1"), _index_clause(i, K)
    )
    dp = round_up_even(d)
    value = _semi_sum(lambda j: _h_full(dp, k1, k2, j), s, K, i)
    return BoundResult(value, "partially-quadratic-semi", assumptions, "per-i" if i is not None else "closed")


def h_gen_prime(k: int, i: int) -> int:
    """Betti sum of ``i`` generic quadrics in ``P^k`` written out term by term (``1 <= i <= k``)."""
    _checked((1 <= i <= k, "1 <= i <= k"))
    inner = sum(
        (-2) ** h * sum(_sign(j + 1) * binomial(j, h) for j in range(i, k + 1)) for h in range(i)
    )
    return (1 + _sign(k - i + 1)) * (k - i + 1) + _sign(k - i) * (inner + (k - i + 1))


def projective_quadrics_bound(k: int, ell: int) -> BoundResult:
    """Betti sum of the real projective variety of ``l`` quadrics in ``P^k``; ``(k + 1) + sum`` reading."""
    assumptions = _checked((ell >= 1, "l >= 1"), (k >= 2, "k >= 2"))
    value = (k + 1) + sum(binomial(ell, i) * 2**i * h_gen_prime(k, i) for i in range(1, k + 1))
    exact = None
    if ell < k:
        exact = quadrics_projective(k, ell).betti_sum
    details = (("generic complex exact", exact),) if exact is not None else ()
    return BoundResult(Fraction(value), "projective-quadrics", assumptions, details=details)


def _bpr_pairs(s: int, m: int, k1: int, k2: int, j: int):
    for j1 in range(0, min(s, k1) + 1):
        j2 = j - j1
        if 0 <= j2 <= min(m + 1, k1 + k2 - j1):
            yield j1, j2


def bpr_new_bounds(s: int, m: int, d: int, k1: int, k2: int, i: int | None = None) -> BoundResult:
    """Sets defined by ``s`` polynomials of degree ``<= d`` in ``k1`` / ``<= 2`` in ``k2`` variables
    together with ``m`` quadratic polynomials in the ``k2`` variables."""
    K = k1 + k2
    assumptions = _checked(
        (m <= k2, "m <= k2"),
        (s >= 0 and m >= 0, "s, m >= 0"),
        (d >= 1, "d >= 1"),
        (k1 >= 0 and k2 >= 1, "k1 >= 0, k2 >= 1"),
        _index_clause(i, K),
    )

    def weight(j1: int, j2: int, base: int) -> int:
        return binomial(s, j1) * binomial(m + 1, j2) * base ** (j1 + j2) * _h_full(2 * d, k1, k2, j2 + 1)

    if i is not None:
        value = sum(
            weight(j1, j2, 5) for j in range(1, K - i + 1) for j1, j2 in _bpr_pairs(s, m, k1, k2, j)
        )
        branch = "per-i"
    else:
        value = sum(
            weight(j1, j2, 7)
            for ii in range(K + 1)
            for j in range(0, K - ii + 1)
            for j1, j2 in _bpr_pairs(s, m, k1, k2, j)
        )
        branch = "closed"
    return BoundResult(Fraction(value), "bpr-new", assumptions, branch)


# ---------------------------------------------------------------------------
# partially quadratic with per-variable degrees


def m_gen(d: Sequence[int], k1: int, k2: int, j: int) -> int:
    d = tuple(int(x) for x in d)
    if len(d) != k1:
        raise ShapeMismatchError(f"expected {k1} per-variable degrees, got {len(d)}")
    _checked((j >= 1, "j >= 1"))
    k = k1 + k2
    return 2 + _sign(k - j + 1) + j * 2**j * factorial(k1) * k ** (j - 1) * (2 * k + 1) ** k1 * prod(d)


@lru_cache(maxsize=100_000)
def _m_full(d: tuple[int, ...], k2: int, ell: int) -> int:
    k1 = len(d)
    dp = tuple(round_up_even(x) for x in d)
    return 3 + sum(
        binomial(ell, j) * 2**j * (m_gen(dp, k1, k2, j) + m_gen(dp, k1, k2, j + 1))
        for j in range(1, k1 + k2 + 1)
    )


def m_full(d: Sequence[int], k1: int, k2: int, ell: int) -> int:
    d = tuple(int(x) for x in d)
    if len(d) != k1:
        raise ShapeMismatchError(f"expected {k1} per-variable degrees, got {len(d)}")
    _checked((ell >= 1, "l >= 1"), (k1 + k2 >= 1, "k1 + k2 >= 1"))
    return _m_full(d, k2, ell)


def partially_quadratic_multi_variety_bound(d: Sequence[int], k2: int, ell: int) -> BoundResult:
    d = tuple(int(x) for x in d)
    k1 = len(d)
    assumptions = _checked(
        (all(x >= 2 for x in d), "d_i >= 2"), (ell >= 1, "l >= 1"), (k2 >= 0 and k1 + k2 >= 1, "k2 >= 0, k1 + k2 >= 1")
    )
    return BoundResult(Fraction(_m_full(d, k2, ell)), "several-blocks-variety", assumptions)


def partially_quadratic_multi_bounds(d: Sequence[int], k2: int, s: int, i: int | None = None) -> BoundResult:
    d = tuple(int(x) for x in d)
    K = len(d) + k2
    assumptions = _checked(
        (all(x >= 2 for x in d), "d_i >= 2"), (s >= 1, "s >= 1"), (k2 >= 0 and K >= 1, "k2 >= 0, k1 + k2 >= 1"), _index_clause(i, K)
    )
    dp = tuple(round_up_even(x) for x in d)
    value = _semi_sum(lambda j: _m_full(dp, k2, j), s, K, i)
    return BoundResult(value, "several-blocks-semi", assumptions, "per-i" if i is not None else "closed")


# ---------------------------------------------------------------------------
# two degrees


BARONE_BASU_READINGS = ("d2", "d1", "2d1", "max")


def _barone_basu_value(d1: int, d2: int, k: int, kprime: int, s: int, dj: int) -> int:
    big = max(2 * d1, d2)
    return sum(
        4**j
        * binomial(s + 1, j)
        * (
            binomial(k + 1, k - kprime + j + 1) * (2 * d1) ** (k - kprime) * dj**j * big ** (kprime - j)
            + 2 * (k - j + 1)
        )
        for j in range(kprime + 1)
    )


def barone_basu_bound(d1: int, d2: int, k: int, kprime: int, s: int, interp: str = "d2") -> BoundResult:
    """Sets defined by polynomials of degree ``<= d2`` on a variety of dimension ``k'`` cut out by
    degree ``<= d1`` polynomials.

    The base of the ``^j`` factor is not pinned down by the statement; ``interp``
    selects it (``d2`` by default, alternatives ``d1``, ``2d1`` and ``max``
    = ``max(2 d1, d2)``).  All readings that differ are reported in ``details``.
    """
    assumptions = _checked(
        (1 <= d1 <= d2, "1 <= d1 <= d2"),
        (0 <= kprime <= k, "0 <= k' <= k"),
        (s >= 0, "s >= 0"),
        (interp in BARONE_BASU_READINGS, f"interp in {BARONE_BASU_READINGS}"),
    )
    bases = {"d2": d2, "d1": d1, "2d1": 2 * d1, "max": max(2 * d1, d2)}
    values = {name: _barone_basu_value(d1, d2, k, kprime, s, b) for name, b in bases.items()}
    details = tuple(
        (f"reading d={name}", Fraction(v)) for name, v in values.items() if v != values[interp]
    )
    return BoundResult(Fraction(values[interp]), "barone-basu", assumptions, f"d^j with d={interp}", details=details)


def refined_F(d1: int, d2: int, k: int) -> Fraction:
    """``C(k+1, 2) d1 ((d1-1)^(k-1) + 4(k-1)/3 d2 (d2-1)^(k-2))``.

    At ``k = 1`` the second term has the factor ``k - 1 = 0`` and is taken to
    be 0; at ``k = 0`` the whole expression vanishes with ``C(1, 2)``.
    """
    _checked((d1 >= 2, "d1 >= 2"), (d2 >= d1, "d2 >= d1"), (k >= 0, "k >= 0"))
    if k == 0:
        return Fraction(0)
    second = Fraction(4 * (k - 1), 3) * d2 * (d2 - 1) ** (k - 2) if k >= 2 else Fraction(0)
    return binomial(k + 1, 2) * d1 * ((d1 - 1) ** (k - 1) + second)


def two_degree_variety_bound(d1: int, d2: int, k: int) -> BoundResult:
    """Betti sum of ``V(P) ∩ V(Q)`` with ``deg P <= d1 <= deg Q <= d2`` in ``R^k``."""
    assumptions = _checked((2 <= d1 <= d2, "2 <= d1 <= d2"), (k >= 2, "k >= 2"))
    value = refined_F(d1, d2, k) + refined_F(d1, d2, k - 1) + 1
    simple = Fraction(8 * binomial(k + 1, 3) * d1 * d2 * (d2 - 1) ** (k - 2))
    return BoundResult(value, "refined-two-degree", assumptions, details=(("8 C(k+1,3) d1 d2 (d2-1)^(k-2)", simple),))


def bb_new_bounds(d1: int, d2: int, k: int, kprime: int, s: int, i: int) -> BoundResult:
    """Bound on ``b_i`` of sign-condition realizations on a ``k'``-dimensional variety."""
    assumptions = _checked(
        (2 <= d1 <= d2, "2 <= d1 <= d2"), (0 <= i <= kprime < k, "0 <= i <= k' < k"), (s >= 0, "s >= 0")
    )
    core = refined_F(2 * d1, 2 * d2, k) + refined_F(2 * d1, 2 * d2, k - 1) + 1
    value = sum((binomial(s, j) * 4**j * core for j in range(1, kprime - i + 1)), Fraction(0))
    return BoundResult(value, "bb-new", assumptions)


def leading_coefficient_comparison(ell: int) -> tuple[Fraction, Fraction]:
    """``(l (3^l - 1) / (l-1)!, (l+1)/2)``: leading coefficients in ``d^k`` of two bounds for ``l`` equations."""
    _checked((ell >= 1, "l >= 1"))
    return Fraction(ell * (3**ell - 1), factorial(ell - 1)), Fraction(ell + 1, 2)
