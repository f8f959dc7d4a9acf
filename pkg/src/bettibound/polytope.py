"""Newton-polytope families, their coordinate faces, volumes and mixed volumes.

Supported bodies are combinatorial descriptions, never vertex lists:

* :class:`ScaledSimplex` -- ``conv(0, d e_i : i in vars)``;
* :class:`Box` -- ``prod_i [0, sides_i]`` over ``vars``;
* :class:`BlockProduct` -- a product of scaled simplices on disjoint variable blocks;
* :class:`MinkowskiSum` -- a Minkowski sum of the above.

Variables are labelled by positive integers (``1..k`` by default).  Every
body is internally reduced to a *block form*: the set of ``(block, side)``
pairs with positive side, i.e. a product of scaled simplices.  A box is the
block form with singleton blocks, a simplex the one with a single block.

Two independent mixed-volume evaluators are provided:

* :func:`mixed_volume` expands Minkowski sums by multilinearity and then
  uses closed forms -- the volume for identical bodies, a Ryser permanent for
  boxes, ``prod d_i`` for simplices and an assignment recursion over a
  common block partition otherwise;
* :func:`mixed_volume_oracle_interpolation` evaluates
  ``vol(lambda_1 K_1 + ... + lambda_m K_m)`` at integer points and extracts the
  coefficient of ``lambda_1 ... lambda_m`` with a mixed finite difference.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence, Union

from .combinat import factorial, multinomial, weak_compositions
from .errors import ShapeMismatchError, UnsupportedFamilyError

__all__ = [
    "ScaledSimplex",
    "Box",
    "BlockProduct",
    "MinkowskiSum",
    "PolytopeFamily",
    "MixedVolumeQuery",
    "face_at_zero",
    "volume",
    "dimension",
    "block_form",
    "common_partition",
    "mixed_volume_of_forms",
    "permanent",
    "mixed_volume",
    "mixed_volume_report",
    "mixed_volume_oracle_interpolation",
    "n_refined",
    "n_coarse_bound",
]

Vars = tuple[int, ...]
# canonical block form: sorted tuple of (sorted block, positive side)
Form = tuple[tuple[Vars, int], ...]


def _as_vars(vars: Iterable[int]) -> Vars:
    out = tuple(sorted(int(v) for v in vars))
    if len(set(out)) != len(out):
        raise ShapeMismatchError(f"repeated variable index in {out}")
    if any(v < 1 for v in out):
        raise ShapeMismatchError(f"variable indices must be >= 1, got {out}")
    return out


def _check_side(x: int) -> int:
    x = int(x)
    if x < 0:
        raise ShapeMismatchError(f"sides and degrees must be >= 0, got {x}")
    return x


@dataclass(frozen=True)
class ScaledSimplex:
    """``conv(0, d e_i : i in vars)``: the support of a dense polynomial of degree ``d``."""

    d: int
    vars: Vars

    def __post_init__(self) -> None:
        object.__setattr__(self, "d", _check_side(self.d))
        object.__setattr__(self, "vars", _as_vars(self.vars))

    @classmethod
    def standard(cls, d: int, k: int) -> "ScaledSimplex":
        return cls(d, range(1, k + 1))

    @property
    def variables(self) -> frozenset[int]:
        return frozenset(self.vars)


@dataclass(frozen=True)
class Box:
    """Axis-parallel box ``prod [0, sides_i]``; ``vars`` defaults to ``1..len(sides)``."""

    sides: tuple[int, ...]
    vars: Vars | None = None

    def __post_init__(self) -> None:
        sides = tuple(_check_side(s) for s in self.sides)
        vars = _as_vars(range(1, len(sides) + 1) if self.vars is None else self.vars)
        if len(vars) != len(sides):
            raise ShapeMismatchError(f"{len(sides)} sides but {len(vars)} variables")
        object.__setattr__(self, "sides", sides)
        object.__setattr__(self, "vars", vars)

    @property
    def variables(self) -> frozenset[int]:
        return frozenset(self.vars)


@dataclass(frozen=True)
class BlockProduct:
    """Product of scaled simplices ``d_b * Delta(block_b)`` on pairwise disjoint blocks."""

    blocks: tuple[tuple[Vars, int], ...]

    def __post_init__(self) -> None:
        blocks = tuple((_as_vars(b), _check_side(d)) for b, d in self.blocks)
        seen: set[int] = set()
        for b, _ in blocks:
            if seen & set(b):
                raise ShapeMismatchError("blocks of a BlockProduct must be disjoint")
            seen |= set(b)
        object.__setattr__(self, "blocks", blocks)

    @property
    def variables(self) -> frozenset[int]:
        return frozenset(v for b, _ in self.blocks for v in b)


@dataclass(frozen=True)
class MinkowskiSum:
    """Minkowski sum of supported bodies."""

    members: tuple["PolytopeFamily", ...]

    def __post_init__(self) -> None:
        members = tuple(self.members)
        if not members:
            raise ShapeMismatchError("empty Minkowski sum")
        object.__setattr__(self, "members", members)

    @property
    def variables(self) -> frozenset[int]:
        return frozenset().union(*(m.variables for m in self.members))


PolytopeFamily = Union[ScaledSimplex, Box, BlockProduct, MinkowskiSum]


# ---------------------------------------------------------------------------
# faces and block forms


def face_at_zero(P: PolytopeFamily, I: Iterable[int]) -> PolytopeFamily:
    """The face of ``P`` cut out by ``X_i = 0`` for ``i in I``, in the surviving coordinates."""
    drop = frozenset(I)
    if isinstance(P, ScaledSimplex):
        return ScaledSimplex(P.d, [v for v in P.vars if v not in drop])
    if isinstance(P, Box):
        keep = [(s, v) for s, v in zip(P.sides, P.vars) if v not in drop]
        return Box(tuple(s for s, _ in keep), tuple(v for _, v in keep))
    if isinstance(P, BlockProduct):
        blocks = []
        for b, d in P.blocks:
            rest = tuple(v for v in b if v not in drop)
            if rest:
                blocks.append((rest, d))
        return BlockProduct(tuple(blocks))
    if isinstance(P, MinkowskiSum):
        return MinkowskiSum(tuple(face_at_zero(m, drop) for m in P.members))
    raise UnsupportedFamilyError(f"unsupported polytope description: {P!r}")


def _merge(weighted: Iterable[tuple[Form, int]]) -> Form:
    """Block form of a weighted Minkowski sum of block forms.

    Blocks of different summands must coincide or be disjoint; otherwise the
    sum is not a product of simplices and lies outside the supported classes.
    """
    acc: dict[Vars, int] = {}
    for form, w in weighted:
        if w == 0:
            continue
        for block, side in form:
            if block in acc:
                acc[block] += w * side
                continue
            bs = set(block)
            for other in acc:
                if bs & set(other):
                    raise UnsupportedFamilyError(
                        f"blocks {other} and {block} overlap without coinciding; "
                        "the Minkowski sum is not a product of simplices"
                    )
            acc[block] = w * side
    return tuple(sorted((b, s) for b, s in acc.items() if s > 0))


def block_form(P: PolytopeFamily) -> Form:
    """Canonical block form of ``P`` (positive-side blocks only)."""
    if isinstance(P, ScaledSimplex):
        return ((P.vars, P.d),) if P.d > 0 and P.vars else ()
    if isinstance(P, Box):
        return tuple(sorted(((v,), s) for s, v in zip(P.sides, P.vars) if s > 0))
    if isinstance(P, BlockProduct):
        return tuple(sorted((b, d) for b, d in P.blocks if d > 0 and b))
    if isinstance(P, MinkowskiSum):
        return _merge((block_form(m), 1) for m in P.members)
    raise UnsupportedFamilyError(f"unsupported polytope description: {P!r}")


def _form_volume(form: Form, ambient: frozenset[int]) -> Fraction:
    covered: set[int] = set()
    vol = Fraction(1)
    for block, side in form:
        covered |= set(block)
        vol *= Fraction(side ** len(block), factorial(len(block)))
    if not covered <= ambient:
        raise ShapeMismatchError("body lives outside the ambient coordinates")
    if covered != ambient:
        return Fraction(0)
    return vol


def volume(P: PolytopeFamily, ambient: Iterable[int] | None = None) -> Fraction:
    """Euclidean volume of ``P`` in the coordinate space ``ambient`` (default: its own variables)."""
    amb = P.variables if ambient is None else frozenset(ambient)
    return _form_volume(block_form(P), amb)


def dimension(P: PolytopeFamily) -> int:
    """Dimension of ``P`` (every supported body is full-dimensional in its positive coordinates)."""
    return sum(len(b) for b, _ in block_form(P))


# ---------------------------------------------------------------------------
# permanent


def permanent(matrix: Sequence[Sequence[int]]) -> int:
    """Exact permanent of a square integer matrix via Ryser's formula with Gray-code updates."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ShapeMismatchError("permanent needs a square matrix")
    if n == 0:
        return 1
    rowsums = [0] * n
    total = 0
    gray = 0
    for step in range(1, 1 << n):
        bit = (step & -step).bit_length() - 1
        gray ^= 1 << bit
        sign = 1 if gray >> bit & 1 else -1
        for i in range(n):
            rowsums[i] += sign * a[i][bit]
        prod = 1
        for s in rowsums:
            prod *= s
            if prod == 0:
                break
        if (n - bin(gray).count("1")) % 2:
            total -= prod
        else:
            total += prod
    return total


# ---------------------------------------------------------------------------
# mixed volumes


@dataclass(frozen=True)
class MixedVolumeQuery:
    """Bodies with multiplicities; ``ambient`` defaults to the union of their variables."""

    bodies: tuple[tuple[PolytopeFamily, int], ...]
    ambient: Vars | None = None

    def __post_init__(self) -> None:
        bodies = tuple((P, int(r)) for P, r in self.bodies)
        if not bodies:
            raise ShapeMismatchError("a mixed volume needs at least one body")
        if any(r < 1 for _, r in bodies):
            raise ShapeMismatchError("multiplicities must be >= 1")
        amb = self.ambient
        if amb is None:
            amb = frozenset().union(*(P.variables for P, _ in bodies))
        amb = _as_vars(amb)
        for P, _ in bodies:
            if not P.variables <= set(amb):
                raise ShapeMismatchError(f"body {P!r} uses variables outside the ambient {amb}")
        if len(amb) != sum(r for _, r in bodies):
            raise ShapeMismatchError(
                f"total multiplicity {sum(r for _, r in bodies)} != ambient dimension {len(amb)}"
            )
        object.__setattr__(self, "bodies", bodies)
        object.__setattr__(self, "ambient", amb)

    @property
    def m(self) -> int:
        return len(self.ambient)  # type: ignore[arg-type]


QueryLike = Union[MixedVolumeQuery, Sequence[Union[PolytopeFamily, tuple[PolytopeFamily, int]]]]


def _as_query(q: QueryLike) -> MixedVolumeQuery:
    if isinstance(q, MixedVolumeQuery):
        return q
    bodies = [item if isinstance(item, tuple) else (item, 1) for item in q]
    return MixedVolumeQuery(tuple(bodies))


def _flatten_sum(P: PolytopeFamily) -> list[PolytopeFamily]:
    if isinstance(P, MinkowskiSum):
        return [x for m in P.members for x in _flatten_sum(m)]
    return [P]


def _expand(bodies: Sequence[tuple[PolytopeFamily, int]]) -> list[tuple[int, tuple[tuple[Form, int], ...]]]:
    """Multilinear expansion of Minkowski-sum bodies into (coefficient, block-form list) terms."""
    terms: list[tuple[int, list[tuple[Form, int]]]] = [(1, [])]
    for P, r in bodies:
        members = _flatten_sum(P)
        if len(members) == 1:
            f = block_form(members[0])
            terms = [(c, acc + [(f, r)]) for c, acc in terms]
            continue
        forms = [block_form(M) for M in members]
        new_terms = []
        for c, acc in terms:
            for t in weak_compositions(r, len(forms)):
                w = multinomial(r, t)
                new_terms.append((c * w, acc + [(f, ti) for f, ti in zip(forms, t) if ti]))
        terms = new_terms
    out = []
    for c, acc in terms:
        merged: dict[Form, int] = {}
        for f, r in acc:
            merged[f] = merged.get(f, 0) + r
        out.append((c, tuple(sorted(merged.items()))))
    return out


def common_partition(forms: Iterable[Form], ambient: Sequence[int]) -> list[Vars]:
    """Coarsest coordinate partition on which every block form is a product.

    Positive blocks of different forms must coincide or be disjoint; ambient
    coordinates not covered by any block become singleton parts.
    """
    parts: list[Vars] = []
    for form in forms:
        for block, _ in form:
            if block in parts:
                continue
            bs = set(block)
            if any(bs & set(p) for p in parts):
                raise UnsupportedFamilyError(
                    "bodies do not share a block structure (overlapping, unequal blocks); "
                    "needs a general interpolation oracle outside the supported classes"
                )
            parts.append(block)
    covered = {v for p in parts for v in p}
    parts += [(v,) for v in ambient if v not in covered]
    return sorted(parts)


def _sides(form: Form, parts: Sequence[Vars]) -> tuple[int, ...]:
    lookup = dict(form)
    return tuple(lookup.get(p, 0) for p in parts)


@lru_cache(maxsize=200_000)
def _assignment_sum(rows: tuple[tuple[tuple[int, ...], int], ...], caps: tuple[int, ...]) -> int:
    """Sum over assignments of body copies to parts (part b receiving exactly caps_b copies)
    of the product of the corresponding sides.  ``rows`` holds (sides, multiplicity)."""
    if not rows:
        return 1 if not any(caps) else 0
    (sides, r), rest = rows[0], rows[1:]
    total = 0
    for t in weak_compositions(r, len(caps)):
        if any(ti > c for ti, c in zip(t, caps)):
            continue
        w = multinomial(r, t)
        for ti, s in zip(t, sides):
            if ti:
                w *= s**ti
                if w == 0:
                    break
        if w == 0:
            continue
        total += w * _assignment_sum(rest, tuple(c - ti for c, ti in zip(caps, t)))
    return total


def _mv_term(forms: tuple[tuple[Form, int], ...], ambient: Vars) -> tuple[Fraction, str]:
    m = len(ambient)
    amb = frozenset(ambient)
    if len(forms) == 1:
        return _form_volume(forms[0][0], amb), "identical bodies: volume"
    parts = common_partition((f for f, _ in forms), ambient)
    rows = tuple((_sides(f, parts), r) for f, r in forms)
    if all(len(p) == 1 for p in parts):
        matrix = [list(s) for s, r in rows for _ in range(r)]
        return Fraction(permanent(matrix), factorial(m)), "boxes: permanent / m!"
    if len(parts) == 1:
        prod = 1
        for (side,), r in rows:
            prod *= side**r
        return Fraction(prod, factorial(m)), "simplices: prod d_i^mult / m!"
    caps = tuple(len(p) for p in parts)
    return Fraction(_assignment_sum(rows, caps), factorial(m)), "block products: block assignment"


def mixed_volume_of_forms(forms: Sequence[tuple[Form, int]], ambient: Sequence[int]) -> Fraction:
    """Mixed volume of block forms with multiplicities (no Minkowski-sum expansion needed)."""
    merged: dict[Form, int] = {}
    for f, r in forms:
        merged[f] = merged.get(f, 0) + r
    return _mv_cached(tuple(sorted(merged.items())), tuple(ambient))


@lru_cache(maxsize=200_000)
def _mv_cached(forms: tuple[tuple[Form, int], ...], ambient: Vars) -> Fraction:
    return _mv_term(forms, ambient)[0]


def mixed_volume_report(q: QueryLike) -> tuple[Fraction, tuple[str, ...]]:
    """Mixed volume together with the evaluation strategies used for each expanded term."""
    q = _as_query(q)
    total = Fraction(0)
    strategies: list[str] = []
    for coef, forms in _expand(q.bodies):
        value, how = _mv_term(forms, q.ambient)  # type: ignore[arg-type]
        total += coef * value
        if how not in strategies:
            strategies.append(how)
    return total, tuple(strategies)


def mixed_volume(q: QueryLike) -> Fraction:
    """Exact mixed volume ``MV(K_1, ..., K_m)`` (bodies repeated by multiplicity).

    Normalised so that ``MV(K, ..., K) = vol(K)``.
    """
    return mixed_volume_report(q)[0]


def mixed_volume_oracle_interpolation(q: QueryLike) -> Fraction:
    """Independent mixed-volume evaluation by finite differences of the volume polynomial.

    ``p(lambda) = vol(sum lambda_i K_i)`` is homogeneous of degree ``m``; its
    mixed difference ``Delta_1 ... Delta_m p`` at ``(1, ..., 1)`` equals the
    coefficient of ``lambda_1 ... lambda_m``, which is ``m! MV``.  Only the
    ``2^m`` grid points in ``{1, 2}^m`` are evaluated.
    """
    q = _as_query(q)
    amb = frozenset(q.ambient)  # type: ignore[arg-type]
    bodies = [block_form(P) for P, r in q.bodies for _ in range(r)]
    m = len(bodies)
    coefficient = Fraction(0)
    for eps in product((0, 1), repeat=m):
        lam = [1 + e for e in eps]
        vol = _form_volume(_merge(zip(bodies, lam)), amb)
        coefficient += vol if (m - sum(eps)) % 2 == 0 else -vol
    return coefficient / factorial(m)


# ---------------------------------------------------------------------------
# box mixed volumes in terms of set partitions


def _check_box_data(d: Sequence[Sequence[int]], alpha: Sequence[int]) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    rows = tuple(tuple(int(x) for x in row) for row in d)
    alpha = tuple(int(a) for a in alpha)
    if not rows:
        raise ShapeMismatchError("empty degree matrix")
    k = len(rows[0])
    if any(len(r) != k for r in rows):
        raise ShapeMismatchError("degree matrix is not rectangular")
    if len(alpha) != len(rows):
        raise ShapeMismatchError(f"alpha has {len(alpha)} entries for {len(rows)} rows")
    if any(a <= 0 for a in alpha) or sum(alpha) != k:
        raise ShapeMismatchError(f"alpha {alpha} must be positive and sum to k={k}")
    return rows, alpha


def _partition_fold(rows, alpha, combine):
    k = len(rows[0])

    @lru_cache(maxsize=None)
    def go(col: int, caps: tuple[int, ...]):
        if col == k:
            return 1
        best = None
        for i, c in enumerate(caps):
            if c == 0:
                continue
            sub = go(col + 1, caps[:i] + (c - 1,) + caps[i + 1 :])
            if sub is None:
                continue
            val = rows[i][col] * sub
            best = val if best is None else combine(best, val)
        return best

    out = go(0, alpha)
    return 0 if out is None else out


def n_refined(d: Sequence[Sequence[int]], alpha: Sequence[int]) -> int:
    """Sum over ordered column partitions ``(J_1, ..., J_l)`` with ``|J_i| = alpha_i``
    of ``prod_i prod_{j in J_i} d[i][j]``.

    Equivalently, the sum over 0/1 matrices with row sums ``alpha`` and unit
    column sums of ``d^A``.  It relates to the true mixed volume of the boxes
    ``B_i = prod_j [0, d[i][j]]`` by ``n_refined * prod(alpha_i!) = k! * MV``.
    """
    rows, alpha = _check_box_data(d, alpha)
    return _partition_fold(rows, alpha, lambda a, b: a + b)


def n_coarse_bound(d: Sequence[Sequence[int]], alpha: Sequence[int]) -> int:
    """Maximum over the same column partitions of ``prod_i prod_{j in J_i} d[i][j]``."""
    rows, alpha = _check_box_data(d, alpha)
    return _partition_fold(rows, alpha, max)
