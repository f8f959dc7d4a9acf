"""Euler characteristics and total Betti numbers of generic complete intersections.

The central engine is :func:`chi_khovanskii`, which evaluates Khovanskii's
face-sum formula for the Euler characteristic of a generic affine complete
intersection from the Newton polytopes of its equations.  Every closed form
in this module (total degree, multi-degree, quadrics, blocks, ...) can be
cross-checked against that engine; the Chern-class route
(:func:`chern_chi_projective`, :func:`lefschetz_chi_affine`) is a second,
independent oracle for total-degree systems.

Euler characteristic to Betti sum conversions used throughout:

* affine, ``l`` equations in ``C^k``:
  ``b = 1 + (-1)^(k-l+1) + (-1)^(k-l) chi``;
* projective, ``l`` equations in ``P^k``:
  ``b = (1 + (-1)^(k-l+1)) (k-l+1) + (-1)^(k-l) chi``.

Complex-side exact values are also upper bounds for the real points of a
system with real coefficients (Smith inequality); results carry that flag.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import prod
from typing import Sequence

from .combinat import (
    binomial,
    complete_homogeneous,
    compositions,
    factorial,
    multinomial,
    weak_compositions,
)
from .errors import HypothesisError, ShapeMismatchError, UnsupportedFamilyError, require
from .polytope import (
    BlockProduct,
    Box,
    Form,
    PolytopeFamily,
    ScaledSimplex,
    block_form,
    common_partition,
    mixed_volume_of_forms,
    n_refined,
)

__all__ = [
    "GenericSystem",
    "ChiReport",
    "satisfies_khovanskii_property",
    "chi_khovanskii",
    "betti_generic",
    "affine_betti_from_chi",
    "projective_betti_from_chi",
    "betti_ci_total_distinct",
    "betti_one_multi",
    "betti_blocks_bound",
    "betti_partially_quadratic_bound",
    "inner_F",
    "quadrics_affine_chi",
    "quadrics_B",
    "quadrics_projective",
    "betti_boxes_generic",
    "betti_boxes_weighted",
    "betti_several_blocks_mixed_bound",
    "chern_chi_projective",
    "lefschetz_chi_affine",
]

MAX_SUPPORTS = 16


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


# ---------------------------------------------------------------------------
# systems


@dataclass(frozen=True)
class GenericSystem:
    """``l`` generic polynomials in ``k`` variables, described by their supports.

    Variables are ``1..k``.  Use the constructors for the standard families.
    """

    k: int
    supports: tuple[PolytopeFamily, ...]

    def __post_init__(self) -> None:
        supports = tuple(self.supports)
        object.__setattr__(self, "supports", supports)
        require(self.k >= 1, "k >= 1", f"k={self.k}")
        require(1 <= len(supports) <= self.k, "1 <= l <= k", f"l={len(supports)}, k={self.k}")
        ambient = set(range(1, self.k + 1))
        for P in supports:
            if not P.variables <= ambient:
                raise ShapeMismatchError(f"support {P!r} uses variables outside 1..{self.k}")

    @property
    def ell(self) -> int:
        return len(self.supports)

    # -- constructors for the families used throughout --------------------

    @classmethod
    def shared(cls, k: int, support: PolytopeFamily, ell: int) -> "GenericSystem":
        """``ell`` polynomials with a common support."""
        return cls(k, (support,) * ell)

    @classmethod
    def total_degree(cls, k: int, degrees: Sequence[int]) -> "GenericSystem":
        """Dense polynomials of total degrees ``degrees``."""
        return cls(k, tuple(ScaledSimplex.standard(d, k) for d in degrees))

    @classmethod
    def boxes(cls, d: Sequence[Sequence[int]]) -> "GenericSystem":
        """Row ``i`` of ``d`` bounds the degree of polynomial ``i`` in each variable."""
        rows = [tuple(r) for r in d]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ShapeMismatchError("box degree matrix must be rectangular and non-empty")
        return cls(len(rows[0]), tuple(Box(r) for r in rows))

    @classmethod
    def blocks(cls, block_sizes: Sequence[int], degrees: Sequence[int], ell: int) -> "GenericSystem":
        """``ell`` polynomials of degree ``<= degrees[i]`` in the ``i``-th block of variables."""
        if len(block_sizes) != len(degrees):
            raise ShapeMismatchError("one degree per block required")
        blocks, start = [], 1
        for size, d in zip(block_sizes, degrees):
            if size == 0:
                continue
            blocks.append((tuple(range(start, start + size)), d))
            start += size
        return cls.shared(start - 1, BlockProduct(tuple(blocks)), ell)

    @classmethod
    def partially_quadratic(cls, d: int, k1: int, k2: int, ell: int) -> "GenericSystem":
        """Degree ``<= d`` in the first ``k1`` variables and ``<= 2`` in the last ``k2``."""
        return cls.blocks([k1, k2], [d, 2], ell)

    @classmethod
    def several_blocks_mixed(cls, d: Sequence[int], k2: int, ell: int) -> "GenericSystem":
        """Degree ``<= d_i`` in each of the first ``len(d)`` variables, ``<= 2`` in the last ``k2``."""
        return cls.blocks([1] * len(d) + [k2], list(d) + [2], ell)


@dataclass(frozen=True)
class ChiReport:
    """Euler characteristic with the Betti sum derived from it."""

    chi: Fraction
    betti_sum: Fraction
    k: int
    ell: int
    setting: str
    conversion: str
    exact: bool = True
    real_upper_bound: bool = field(default=True)

    def conversion_holds(self) -> bool:
        if self.setting == "affine":
            return self.betti_sum == affine_betti_from_chi(self.k, self.ell, self.chi)
        return self.betti_sum == projective_betti_from_chi(self.k, self.ell, self.chi)


def affine_betti_from_chi(k: int, ell: int, chi: Fraction | int) -> Fraction:
    return Fraction(1 + _sign(k - ell + 1) + _sign(k - ell) * chi)


def projective_betti_from_chi(k: int, ell: int, chi: Fraction | int) -> Fraction:
    return Fraction((1 + _sign(k - ell + 1)) * (k - ell + 1) + _sign(k - ell) * chi)


AFFINE_CONVERSION = "b = 1 + (-1)^(k-l+1) + (-1)^(k-l) chi"
PROJECTIVE_CONVERSION = "b = (1 + (-1)^(k-l+1)) (k-l+1) + (-1)^(k-l) chi"


# ---------------------------------------------------------------------------
# Khovanskii engine


def satisfies_khovanskii_property(sys: GenericSystem, *, limit: int | None = MAX_SUPPORTS) -> bool:
    """Whether every sub-tuple ``L`` of supports has ``dim(sum_L) >= k - l + |L|``.

    For the supported families the Minkowski sum of bodies containing the
    origin spans exactly the union of their positive coordinates.
    """
    if limit is not None and sys.ell > limit:
        raise HypothesisError(f"l <= {limit}", "subset enumeration guard")
    coords = [frozenset(v for b, _ in block_form(P) for v in b) for P in sys.supports]
    for size in range(1, sys.ell + 1):
        for L in combinations(coords, size):
            if len(frozenset().union(*L)) < sys.k - sys.ell + size:
                return False
    return True


def _face_orbits(parts: list[tuple[int, ...]], columns: list[tuple[int, ...]]):
    """Yield (weight, removed coordinates) over orbits of coordinate subsets.

    Parts with the same size and the same sides in every support are
    interchangeable, and coordinates inside one part are interchangeable, so
    only the number of removed coordinates per part (up to permutation of
    equivalent parts) matters.
    """
    classes: dict[tuple, list[tuple[int, ...]]] = {}
    for part, col in zip(parts, columns):
        classes.setdefault((len(part), col), []).append(part)
    per_class = []
    for (n, _), members in sorted(classes.items()):
        options = []
        for counts in weak_compositions(len(members), n + 1):
            weight = multinomial(len(members), counts)
            removed: list[int] = []
            idx = 0
            for r, cnt in enumerate(counts):
                weight *= binomial(n, r) ** cnt
                for part in members[idx : idx + cnt]:
                    removed.extend(part[:r])
                idx += cnt
            options.append((weight, removed))
        per_class.append(options)

    def rec(i: int, weight: int, removed: list[int]):
        if i == len(per_class):
            yield weight, removed
            return
        for w, rem in per_class[i]:
            yield from rec(i + 1, weight * w, removed + rem)

    yield from rec(0, 1, [])


def _restrict(form: Form, removed: frozenset[int]) -> Form:
    out = []
    for block, side in form:
        rest = tuple(v for v in block if v not in removed)
        if rest:
            out.append((rest, side))
    return tuple(sorted(out))


@lru_cache(maxsize=100_000)
def _face_term(faces: tuple[Form, ...], remaining: tuple[int, ...]) -> int:
    """Degree-kappa component of prod_j D_j / (1 + D_j) on one coordinate face."""
    kappa, ell = len(remaining), len(faces)
    if kappa < ell:
        return 0
    total = Fraction(0)
    for m in compositions(kappa, ell):
        total += mixed_volume_of_forms(list(zip(faces, m)), remaining)
    total *= factorial(kappa)
    assert total.denominator == 1
    return _sign(kappa - ell) * total.numerator


@lru_cache(maxsize=20_000)
def _chi_cached(k: int, forms: tuple[Form, ...]) -> int:
    ambient = tuple(range(1, k + 1))
    parts = common_partition(forms, ambient)
    columns = [tuple(dict(f).get(p, 0) for f in forms) for p in parts]
    total = 0
    for weight, removed in _face_orbits(parts, columns):
        rem = frozenset(removed)
        faces = tuple(sorted(_restrict(f, rem) for f in forms))
        remaining = tuple(v for v in ambient if v not in rem)
        total += weight * _face_term(faces, remaining)
    return total


def chi_khovanskii(
    sys: GenericSystem, *, check_property: bool = True, limit: int | None = MAX_SUPPORTS
) -> Fraction:
    """Euler characteristic of the generic affine complete intersection with the given supports.

    Sums, over coordinate faces ``I``, the degree ``k - |I|`` part of
    ``prod_j D_j/(1+D_j)`` where a monomial ``D^m`` of degree ``kappa`` stands
    for ``kappa! MV(D_1 repeated m_1 times, ...)`` on the face.  Faces are
    enumerated up to the symmetries of the supports.  ``limit`` caps ``k``
    and ``l`` (``None`` lifts the cap).
    """
    if limit is not None and sys.k > limit:
        raise HypothesisError(f"k <= {limit}", "face enumeration guard")
    if check_property and not satisfies_khovanskii_property(sys, limit=limit):
        raise HypothesisError(
            "dim(sum of supports in L) >= k - l + |L| for every non-empty L",
            "supports too degenerate for the face-sum formula",
        )
    forms = tuple(sorted(block_form(P) for P in sys.supports))
    return Fraction(_chi_cached(sys.k, forms))


def betti_generic(
    sys: GenericSystem, setting: str = "affine", *, limit: int | None = MAX_SUPPORTS
) -> ChiReport:
    """Euler characteristic and total Betti number of a generic complete intersection.

    ``setting="projective"`` treats the supports as total degrees of
    homogeneous polynomials in ``P^k`` (only full simplices are accepted) and
    sums the affine Euler characteristics over the ambient dimensions
    ``l..k`` of a flag of coordinate subspaces.
    """
    k, ell = sys.k, sys.ell
    if setting == "affine":
        chi = chi_khovanskii(sys, limit=limit)
        return ChiReport(chi, affine_betti_from_chi(k, ell, chi), k, ell, "affine", AFFINE_CONVERSION)
    if setting != "projective":
        raise ValueError(f"setting must be 'affine' or 'projective', got {setting!r}")
    full = frozenset(range(1, k + 1))
    degrees = []
    for P in sys.supports:
        if not (isinstance(P, ScaledSimplex) and P.variables == full and P.d >= 1):
            raise UnsupportedFamilyError(
                "the projective setting needs total-degree supports (full scaled simplices)"
            )
        degrees.append(P.d)
    chi = sum(
        (chi_khovanskii(GenericSystem.total_degree(j, degrees), limit=limit) for j in range(ell, k + 1)),
        Fraction(0),
    )
    return ChiReport(
        chi, projective_betti_from_chi(k, ell, chi), k, ell, "projective", PROJECTIVE_CONVERSION
    )


# ---------------------------------------------------------------------------
# closed forms


def betti_ci_total_distinct(k: int, d: Sequence[int]) -> int:
    """Exact Betti sum of a generic affine complete intersection of total degrees ``d``."""
    d = [int(x) for x in d]
    ell = len(d)
    require(1 <= ell <= k, "1 <= l <= k", f"l={ell}, k={k}")
    require(all(x >= 1 for x in d), "d_i >= 1")
    s = sum(
        _sign(k - ell + j) * binomial(k, j + ell) * complete_homogeneous(j, d)
        for j in range(k - ell + 1)
    )
    return 1 + _sign(k - ell + 1) + prod(d) * s


def _elementary(d: Sequence[int]) -> list[int]:
    e = [1] + [0] * len(d)
    for x in d:
        for t in range(len(e) - 1, 0, -1):
            e[t] += x * e[t - 1]
    return e


def betti_one_multi(d: Sequence[int]) -> int:
    """Exact Betti sum of one generic polynomial of degree ``<= d_i`` in each variable ``X_i``."""
    d = [int(x) for x in d]
    k = len(d)
    require(k >= 1, "k >= 1")
    require(all(x >= 0 for x in d), "d_i >= 0")
    e = _elementary(d)
    return 1 + _sign(k) + sum(_sign(k - j) * factorial(j) * e[j] for j in range(1, k + 1))


def betti_blocks_bound(block_sizes: Sequence[int], d: Sequence[int], ell: int) -> Fraction:
    """Upper bound for ``l`` generic polynomials of degree ``<= d_i`` in each of ``p`` variable blocks."""
    ks = [int(x) for x in block_sizes]
    d = [int(x) for x in d]
    if len(ks) != len(d):
        raise ShapeMismatchError("one degree per block required")
    require(ell >= 1, "l >= 1")
    require(all(x >= 1 for x in ks), "block sizes >= 1")
    k, p = sum(ks), len(ks)
    core = (
        Fraction((k - ell + 2) ** 2 * binomial(k, ell - 1), multinomial(k, ks))
        * Fraction((1 + p) ** (3 * k - ell + 1), p * (p + 2))
        * prod(di**ki for di, ki in zip(d, ks))
    )
    return 1 + _sign(k - ell + 1) + core


def betti_partially_quadratic_bound(d: int, k1: int, k2: int, ell: int) -> int:
    """Upper bound for ``l`` generic polynomials of degree ``<= d`` in ``k1`` and ``<= 2`` in ``k2`` variables."""
    k = k1 + k2
    require(1 <= ell <= k, "1 <= l <= k1 + k2", f"l={ell}, k={k}")
    require(d >= 1, "d >= 1")
    return 2 + _sign(k - ell + 1) + ell * 2**ell * k ** (ell - 1) * (2 * d * k + 1) ** k1


def inner_F(j1: int, k2: int, ell: int) -> int:
    """Alternating inner sum ``sum_{j2} C(j1+j2, j2) C(j1+j2-1, l-1) C(k2, j2) (-2)^j2``.

    The upper index ``j1 + j2 - 1`` is ``-1`` for the ``j1 = j2 = 0`` term, which
    is evaluated with the falling-factorial binomial.
    """
    require(ell >= 1, "l >= 1")
    return sum(
        binomial(j1 + j2, j2)
        * binomial(j1 + j2 - 1, ell - 1, signed=True)
        * binomial(k2, j2)
        * (-2) ** j2
        for j2 in range(k2 + 1)
    )


def quadrics_affine_chi(k: int, ell: int) -> int:
    """Euler characteristic of ``l`` generic affine quadrics in ``C^k``."""
    require(1 <= ell <= k, "1 <= l <= k")
    return 1 + _sign(k + 1) * sum(binomial(k, h) * (-2) ** h for h in range(ell))


def quadrics_B(h: int, k: int, ell: int) -> int:
    """``B(h, k, l) = 2^h sum_{j=l}^{k} (-1)^(j+1) C(j, h)``."""
    return 2**h * sum(_sign(j + 1) * binomial(j, h) for j in range(ell, k + 1))


def quadrics_projective(k: int, ell: int) -> ChiReport:
    """Euler characteristic and Betti sum of ``l`` generic quadrics in ``P^k`` (``l < k``)."""
    require(1 <= ell < k, "1 <= l < k", f"l={ell}, k={k}")
    chi = sum(_sign(h) * quadrics_B(h, k, ell) for h in range(ell)) + (k - ell + 1)
    chi = Fraction(chi)
    return ChiReport(
        chi, projective_betti_from_chi(k, ell, chi), k, ell, "projective", PROJECTIVE_CONVERSION
    )


def _check_matrix(d: Sequence[Sequence[int]]) -> list[list[int]]:
    rows = [[int(x) for x in r] for r in d]
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ShapeMismatchError("degree matrix must be rectangular and non-empty")
    return rows


def _boxes_alternating_sum(rows: list[list[int]], weighted: bool) -> int:
    ell, k = len(rows), len(rows[0])
    total = 0
    for j in range(ell, k + 1):
        for J in combinations(range(k), j):
            sub = [[r[c] for c in J] for r in rows]
            inner = 0
            for alpha in compositions(j, ell):
                w = prod(factorial(a) for a in alpha) if weighted else 1
                inner += w * n_refined(sub, alpha)
            total += _sign(k - j) * inner
    return total


def betti_boxes_generic(d: Sequence[Sequence[int]]) -> int:
    """Box-support Betti expression evaluated term by term as written, with ``n_refined``.

    This is an upper-bound expression: it omits the ``prod alpha_i!`` weights
    that the true mixed volumes carry, so it does not equal the exact value
    from :func:`chi_khovanskii` in general.
    """
    rows = _check_matrix(d)
    ell, k = len(rows), len(rows[0])
    require(1 <= ell <= k, "1 <= l <= k", f"l={ell}, k={k}")
    return 1 + _sign(k - ell + 1) + _boxes_alternating_sum(rows, weighted=False)


def betti_boxes_weighted(d: Sequence[Sequence[int]]) -> int:
    """Box-support expression with each ``n_refined`` term weighted by ``prod alpha_i!``.

    The weights turn every term into ``j!`` times a true mixed volume, so this
    equals the exact Betti sum from :func:`betti_generic` for box supports.
    """
    rows = _check_matrix(d)
    ell, k = len(rows), len(rows[0])
    require(1 <= ell <= k, "1 <= l <= k", f"l={ell}, k={k}")
    return 1 + _sign(k - ell + 1) + _boxes_alternating_sum(rows, weighted=True)


def betti_several_blocks_mixed_bound(d: Sequence[int], k1: int, k2: int, ell: int) -> int:
    """Upper bound for degree ``<= d_i`` in each of ``k1`` variables and ``<= 2`` in ``k2`` more."""
    d = [int(x) for x in d]
    if len(d) != k1:
        raise ShapeMismatchError(f"expected {k1} per-variable degrees, got {len(d)}")
    k = k1 + k2
    require(1 <= ell <= k, "1 <= l <= k1 + k2", f"l={ell}, k={k}")
    return (
        2
        + _sign(k - ell + 1)
        + ell * 2**ell * factorial(k1) * k ** (ell - 1) * (2 * k + 1) ** k1 * prod(d)
    )


def chern_chi_projective(k: int, d: Sequence[int]) -> int:
    """Euler characteristic of a smooth complete intersection of degrees ``d`` in ``P^k``.

    Top Chern class of ``(1+z)^(k+1) / prod(1 + d_i z)`` integrated against ``prod(d_i) z^l``.
    """
    d = [int(x) for x in d]
    ell = len(d)
    require(1 <= ell <= k, "1 <= l <= k", f"l={ell}, k={k}")
    require(all(x >= 1 for x in d), "d_i >= 1")
    n = sum(
        _sign(k - ell - i) * binomial(k + 1, i) * complete_homogeneous(k - ell - i, d)
        for i in range(k - ell + 1)
    )
    return prod(d) * n


def lefschetz_chi_affine(k: int, d: Sequence[int]) -> int:
    """Affine Euler characteristic as projective closure minus its hyperplane section."""
    ell = len(d)
    require(1 <= ell <= k - 1, "1 <= l <= k - 1", f"l={ell}, k={k}")
    return chern_chi_projective(k, d) - chern_chi_projective(k - 1, d)
