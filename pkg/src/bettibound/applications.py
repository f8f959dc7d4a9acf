"""Betti bounds for images, pull-backs and related constructions of semi-algebraic sets.

Each evaluator rewrites its scenario as a multi-block polynomial system and
sums block-degree bounds (:func:`~bettibound.catalog.g_min`) with the
appropriate number of polynomials.  Fibered powers are rebuilt for every
outer index ``j``: ``j + 1`` copies of the source block followed by the
target block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .catalog import BoundResult, _checked, _g_min
from .combinat import binomial

__all__ = [
    "PullBack",
    "Image",
    "FourierMukai",
    "Transversal",
    "MapScenario",
    "pull_back_bound",
    "image_bound",
    "fourier_mukai_bound",
    "transversal_bound",
    "transversal_dimension",
    "fibered_blocks",
    "evaluate",
]


@dataclass(frozen=True)
class PullBack:
    k: int
    m: int
    d: int
    D: int
    s: int


@dataclass(frozen=True)
class Image:
    k: int
    m: int
    d: int
    D: int
    s: int
    i: int


@dataclass(frozen=True)
class FourierMukai:
    k: int
    m: int
    d: int
    D: int
    s1: int
    s2: int
    i: int


@dataclass(frozen=True)
class Transversal:
    k: int
    kprime: int
    d: int
    s: int
    i: int


MapScenario = Union[PullBack, Image, FourierMukai, Transversal]


def fibered_blocks(j: int, k: int, m: int, d: int, D: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Block degrees and sizes of the ``(j+1)``-fold fibered power: ``(d,...,d,D)``, ``(k,...,k,m)``."""
    return (d,) * (j + 1) + (D,), (k,) * (j + 1) + (m,)


def _closed_sum(degrees: tuple[int, ...], sizes: tuple[int, ...], n_polys: int, alpha: int) -> Fraction:
    """``sum_{h=0}^{alpha} sum_{l=1}^{alpha-h} C(n_polys+1, l) 6^l G_min(degrees, sizes, l)``."""
    return sum(
        (
            binomial(n_polys + 1, ell) * 6**ell * _g_min(degrees, sizes, ell)[0]
            for h in range(alpha + 1)
            for ell in range(1, alpha - h + 1)
        ),
        Fraction(0),
    )


def pull_back_bound(sc: PullBack) -> BoundResult:
    """Inverse image of a set in ``R^m`` (``s`` polynomials of degree ``<= D``) under a polynomial
    map ``R^k -> R^m`` of degree ``<= d``."""
    assumptions = _checked(
        (sc.k >= 0 and sc.m >= 0 and sc.k + sc.m >= 1, "k, m >= 0, k + m >= 1"),
        (sc.d >= 2 and sc.D >= 2, "d, D >= 2"),
        (sc.s >= 0, "s >= 0"),
    )
    value = _closed_sum((sc.d, sc.D), (sc.k, sc.m), sc.m + sc.s, sc.k + sc.m)
    return BoundResult(value, "pull-back", assumptions)


def _image_like(sc, alpha_of, polys_of) -> Fraction:
    total = Fraction(0)
    for j in range(sc.i + 1):
        degrees, sizes = fibered_blocks(j, sc.k, sc.m, sc.d, sc.D)
        total += _closed_sum(degrees, sizes, polys_of(j), alpha_of(j))
    return total


def image_bound(sc: Image) -> BoundResult:
    """``b_i`` of the image in ``R^m`` of a set in ``R^(k+m)`` under the projection."""
    assumptions = _checked(
        (sc.k >= 0 and sc.m >= 0, "k, m >= 0"),
        (0 <= sc.i <= sc.m, "0 <= i <= m"),
        (sc.d >= sc.D >= 2, "d >= D >= 2"),
        (sc.s >= 0, "s >= 0"),
    )
    value = _image_like(
        sc,
        alpha_of=lambda j: (j + 1) * sc.k + sc.m,
        polys_of=lambda j: (j + 1) * (sc.m + sc.s),
    )
    return BoundResult(value, "image", assumptions)


def fourier_mukai_bound(sc: FourierMukai) -> BoundResult:
    """``b_i`` of the transform of a set in ``R^k`` along a kernel in ``R^(k+m)``."""
    assumptions = _checked(
        (sc.k >= 0 and sc.m >= 0, "k, m >= 0"),
        (0 <= sc.i <= sc.m, "0 <= i <= m"),
        (sc.d >= sc.D >= 2, "d >= D >= 2"),
        (sc.s1 >= 0 and sc.s2 >= 0, "s1, s2 >= 0"),
    )
    value = _image_like(
        sc,
        alpha_of=lambda j: (j + 1) * (sc.k + sc.m) + sc.k,
        polys_of=lambda j: (j + 1) * (sc.s1 + sc.s2),
    )
    return BoundResult(value, "fourier-mukai", assumptions)


def transversal_dimension(k: int) -> int:
    """Dimension ``(k+1)(k+2)/2 - 1`` of the space parametrising the transversal family in ``R^k``."""
    return (k + 1) * (k + 2) // 2 - 1


def transversal_bound(sc: Transversal) -> BoundResult:
    """``b_i`` of the set of transversals (of the quadric family) to ``s`` sets of degree ``<= d``."""
    assumptions = _checked(
        (sc.k >= 1, "k >= 1"),
        (0 <= sc.kprime <= sc.k, "0 <= k' <= k"),
        (sc.d >= 2, "d >= 2"),
        (sc.s >= 0, "s >= 0"),
        (sc.i >= 0, "i >= 0"),
    )
    m = transversal_dimension(sc.k)
    total = Fraction(0)
    for j in range(sc.i + 1):
        degrees, sizes = fibered_blocks(j, sc.k, m, sc.d, 2)
        total += _closed_sum(degrees, sizes, (j + 1) * (sc.s + m + 2 * (sc.k + 1)), (j + 1) * sc.k + m)
    return BoundResult(total, "transversal", assumptions)


def evaluate(sc: MapScenario) -> BoundResult:
    """Evaluate whichever scenario is given."""
    if isinstance(sc, PullBack):
        return pull_back_bound(sc)
    if isinstance(sc, Image):
        return image_bound(sc)
    if isinstance(sc, FourierMukai):
        return fourier_mukai_bound(sc)
    if isinstance(sc, Transversal):
        return transversal_bound(sc)
    raise TypeError(f"unknown scenario {sc!r}")

