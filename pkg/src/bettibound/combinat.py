"""Exact combinatorial primitives.

Everything here works over Python integers and :class:`fractions.Fraction`;
no floating point value is ever produced.  Integer-valued functions return
``int`` (which mixes freely with ``Fraction``), rational-valued ones return
``Fraction``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import HypothesisError, ShapeMismatchError

ExactScalar = Union[int, Fraction]

__all__ = [
    "ExactScalar",
    "as_exact",
    "render_exact",
    "parse_exact",
    "factorial",
    "binomial",
    "falling_factorial",
    "multinomial",
    "complete_homogeneous",
    "contingency_count",
    "alternating_binomial_A",
    "compositions",
    "weak_compositions",
]


def as_exact(value: ExactScalar | str) -> Fraction:
    """Return ``value`` as a canonical reduced :class:`Fraction`."""
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted")
    return Fraction(value)


def render_exact(value: ExactScalar) -> str:
    """Render an exact value as ``"n"`` (integers) or ``"p/q"``.

    >>> render_exact(Fraction(6569, 4))
    '6569/4'
    >>> render_exact(Fraction(10, 1))
    '10'
    """
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_exact(text: str) -> Fraction:
    """Inverse of :func:`render_exact`; rejects decimal points and exponents."""
    text = text.strip()
    if any(c in text for c in ".eE"):
        raise ValueError(f"not an exact rational literal: {text!r}")
    return Fraction(text)


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    return math.factorial(n)


@lru_cache(maxsize=4096)
def falling_factorial(n: int, r: int) -> int:
    """n (n-1) ... (n-r+1), defined for any integer ``n`` and ``r >= 0``."""
    if r < 0:
        raise ValueError("r must be non-negative")
    out = 1
    for t in range(r):
        out *= n - t
    return out


@lru_cache(maxsize=65536)
def binomial(n: int, r: int, signed: bool = False) -> int:
    """Binomial coefficient ``C(n, r)``.

    Conventions: ``r < 0`` gives 0, ``r == 0`` gives 1 for every ``n``, and
    ``r > n >= 0`` gives 0.  A negative upper index with ``r > 0`` is only
    evaluated (as ``falling_factorial(n, r) / r!``) when ``signed=True``;
    otherwise it raises, because none of the closed forms built on top of
    this function expect it.
    """
    if r < 0:
        return 0
    if r == 0:
        return 1
    if n < 0:
        if not signed:
            raise ValueError(f"binomial({n}, {r}): negative upper index needs signed=True")
        return falling_factorial(n, r) // factorial(r)
    if r > n:
        return 0
    return math.comb(n, r)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """``n! / prod(parts_i!)``; the parts must be non-negative and sum to ``n``."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ShapeMismatchError(f"multinomial parts must be >= 0, got {parts}")
    if sum(parts) != n:
        raise ShapeMismatchError(f"multinomial parts {parts} do not sum to {n}")
    return _multinomial(parts)


@lru_cache(maxsize=65536)
def _multinomial(parts: tuple[int, ...]) -> int:
    out, acc = 1, 0
    for p in parts:
        acc += p
        out *= math.comb(acc, p)
    return out


def complete_homogeneous(j: int, d: Sequence[int]) -> int:
    """Complete homogeneous symmetric polynomial ``h_j`` evaluated at ``d``.

    Uses the recursion h_j(d_1..d_l) = h_j(d_1..d_{l-1}) + d_l h_{j-1}(d_1..d_l),
    which costs O(j * len(d)) multiplications.
    """
    if j < 0:
        return 0
    return _complete_homogeneous(j, tuple(int(x) for x in d))


@lru_cache(maxsize=65536)
def _complete_homogeneous(j: int, d: tuple[int, ...]) -> int:
    h = [1] + [0] * j
    for x in d:
        for t in range(1, j + 1):
            h[t] += x * h[t - 1]
    return h[j]


def contingency_count(rows: Sequence[int], cols: Sequence[int]) -> int:
    """Number of non-negative integer matrices with the given row and column sums.

    Exact recursion over rows, memoised on the (sorted) residual column margins.
    """
    rows = tuple(int(r) for r in rows)
    cols = tuple(int(c) for c in cols)
    if any(x < 0 for x in rows + cols):
        raise ShapeMismatchError("margins must be non-negative")
    if sum(rows) != sum(cols):
        raise ShapeMismatchError(f"row sum {sum(rows)} != column sum {sum(cols)}")
    return _contingency(tuple(sorted(rows, reverse=True)), tuple(sorted(cols)))


@lru_cache(maxsize=None)
def _contingency(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    if not rows:
        return 1 if all(c == 0 for c in cols) else 0
    first, rest = rows[0], rows[1:]
    total = 0
    for fill in _bounded_fillings(first, cols):
        residual = tuple(sorted(c - f for c, f in zip(cols, fill)))
        total += _contingency(rest, residual)
    return total


def _bounded_fillings(total: int, caps: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    """All vectors x with 0 <= x_i <= caps_i and sum(x) == total."""
    if not caps:
        if total == 0:
            yield ()
        return
    room = sum(caps[1:])
    for x in range(max(0, total - room), min(caps[0], total) + 1):
        for tail in _bounded_fillings(total - x, caps[1:]):
            yield (x,) + tail


@lru_cache(maxsize=None)
def alternating_binomial_A(n: int, p: int) -> int:
    """A(n, p) = sum_{i=0}^{floor((n-p)/2)} C(n - 2i, p), for n >= p >= 0."""
    if not 0 <= p <= n:
        raise HypothesisError("n >= p >= 0", f"n={n}, p={p}")
    return sum(math.comb(n - 2 * i, p) for i in range((n - p) // 2 + 1))


def compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    """Ordered tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if total < parts:
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for tail in compositions(total - first, parts - 1):
            yield (first,) + tail


def weak_compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    """Ordered tuples of ``parts`` non-negative integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for tail in weak_compositions(total - first, parts - 1):
            yield (first,) + tail
