"""Registry of every evaluator by identifier, with parameter schemas and samplers.

The registry is what the command line and the randomized sanity suite walk
over.  Each :class:`Entry` knows its parameters, whether its value is exact
or a bound, whether it exposes a per-Betti index ``i`` whose sums shrink as
``i`` grows, and how to draw a random valid parameter set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import applications as app
from . import catalog as cat
from . import generic as gen
from .errors import UnknownBoundError

__all__ = ["Param", "Entry", "REGISTRY", "get_entry", "evaluate"]


@dataclass(frozen=True)
class Param:
    name: str
    kind: str = "int"  # int | ints | matrix | str
    required: bool = True
    default: Any = None
    help: str = ""


@dataclass(frozen=True)
class Entry:
    id: str
    func: Callable[..., cat.BoundResult]
    params: tuple[Param, ...]
    summary: str
    sampler: Callable[[random.Random], dict] | None = None
    per_i: bool = False  # sums over j <= k - i: nonincreasing in i
    index_range: Callable[[dict], range] | None = None
    kind: str = "bound"

    @property
    def param_names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.params)


def _exact(value, citation: str, assumptions=()) -> cat.BoundResult:
    return cat.BoundResult(Fraction(value), citation, tuple(assumptions), kind="exact")


def _bound(value, citation: str, assumptions=()) -> cat.BoundResult:
    return cat.BoundResult(Fraction(value), citation, tuple(assumptions), kind="bound")


# -- wrappers turning generic-chi functions into BoundResults -----------------


def _ci_total_distinct(k: int, degrees: list[int]) -> cat.BoundResult:
    return _exact(gen.betti_ci_total_distinct(k, degrees), "ci-total-distinct", ["1 <= l <= k", "d_i >= 1"])


def _one_multi(degrees: list[int]) -> cat.BoundResult:
    return _exact(gen.betti_one_multi(degrees), "one-multi", ["d_i >= 0"])


def _quadrics_projective(k: int, l: int) -> cat.BoundResult:
    return _exact(gen.quadrics_projective(k, l).betti_sum, "quadrics-projective", ["1 <= l < k"])


def _blocks_generic(blocks: list[int], degrees: list[int], l: int) -> cat.BoundResult:
    return _bound(gen.betti_blocks_bound(blocks, degrees, l), "blocks-generic", ["l >= 1", "block sizes >= 1"])


def _pq_generic(d: int, k1: int, k2: int, l: int) -> cat.BoundResult:
    return _bound(gen.betti_partially_quadratic_bound(d, k1, k2, l), "partially-quadratic-generic", ["1 <= l <= k1 + k2", "d >= 1"])


def _sbm_generic(degrees: list[int], k2: int, l: int) -> cat.BoundResult:
    return _bound(
        gen.betti_several_blocks_mixed_bound(degrees, len(degrees), k2, l),
        "several-blocks-generic",
        ["1 <= l <= k1 + k2"],
    )


def _boxes_generic(matrix: list[list[int]]) -> cat.BoundResult:
    return _bound(gen.betti_boxes_generic(matrix), "boxes-generic", ["1 <= l <= k"])


# -- samplers -------------------------------------------------------------------


def _r(rng: random.Random, lo: int, hi: int) -> int:
    return rng.randint(lo, hi)


def _s_multi(rng):
    p = _r(rng, 1, 3)
    return {"degrees": [_r(rng, 2, 5) for _ in range(p)], "blocks": [_r(rng, 1, 2) for _ in range(p)], "s": _r(rng, 1, 4)}


def _s_box(rng):
    k = _r(rng, 1, 3)
    l = _r(rng, 1, 2)
    return {"matrix": [[_r(rng, 2, 4) for _ in range(k)] for _ in range(l)], "s": _r(rng, 1, 3)}


def _s_pq(rng):
    return {"d": _r(rng, 2, 6), "k1": _r(rng, 0, 3), "k2": _r(rng, 1, 3), "s": _r(rng, 1, 4)}


def _s_sbm(rng):
    k1 = _r(rng, 0, 3)
    return {"degrees": [_r(rng, 2, 5) for _ in range(k1)], "k2": _r(rng, 1, 3), "s": _r(rng, 1, 4)}


def _s_bpr(rng):
    k2 = _r(rng, 1, 3)
    return {"s": _r(rng, 0, 3), "m": _r(rng, 0, k2), "d": _r(rng, 1, 4), "k1": _r(rng, 0, 2), "k2": k2}


def _s_bb(rng):
    # the sum runs over j = 1..k'-i, so i = k' or s = 0 gives an empty sum
    d1 = _r(rng, 2, 4)
    k = _r(rng, 2, 6)
    kp = _r(rng, 1, k - 1)
    return {"d1": d1, "d2": _r(rng, d1, 6), "k": k, "kprime": kp, "s": _r(rng, 1, 4), "i": _r(rng, 0, kp - 1)}


def _s_barone(rng):
    d1 = _r(rng, 1, 4)
    k = _r(rng, 1, 6)
    return {"d1": d1, "d2": _r(rng, d1, 8), "k": k, "kprime": _r(rng, 0, k), "s": _r(rng, 0, 4)}


def _s_safey(rng):
    k = _r(rng, 2, 7)
    s = _r(rng, 1, k - 1)
    return {
        "degrees": [_r(rng, 1, 5) for _ in range(s)],
        "k": k,
        "kprime": k - s,
        "variant": rng.choice(["radical", "regular"]),
    }


def _s_image(rng):
    # k = m = 0 leaves nothing to sum over
    m = _r(rng, 0, 2)
    D = _r(rng, 2, 3)
    return {"k": _r(rng, 1 if m == 0 else 0, 2), "m": m, "d": _r(rng, D, 4), "D": D, "s": _r(rng, 0, 3), "i": _r(rng, 0, m)}


def _s_fm(rng):
    m = _r(rng, 0, 1)
    D = _r(rng, 2, 3)
    return {"k": _r(rng, 1 if m == 0 else 0, 2), "m": m, "d": _r(rng, D, 4), "D": D, "s1": _r(rng, 0, 2), "s2": _r(rng, 0, 2), "i": _r(rng, 0, m)}


def _with_i(sampler, K_of):
    def go(rng):
        p = sampler(rng)
        p["i"] = _r(rng, 0, K_of(p) - 1)
        return p

    return go


def _k_box(p):
    return len(p["matrix"][0])


def _k_multi(p):
    return sum(p["blocks"])


def _k_pq(p):
    return p["k1"] + p["k2"]


def _k_sbm(p):
    return len(p["degrees"]) + p["k2"]


def _k_bpr(p):
    return p["k1"] + p["k2"]


_I = Param("i", required=False, help="Betti index; omit for the closed-set total")

_ENTRIES: list[Entry] = [
    Entry("optm", cat.optm_bound, (Param("d"), Param("k")), "d(2d-1)^(k-1) for real varieties of degree <= d",
          lambda r: {"d": _r(r, 1, 8), "k": _r(r, 1, 8)}),
    Entry("b99", cat.b99_bound, (Param("s"), Param("d"), Param("k")), "sign-condition sum with C(s+1, j) 6^j",
          lambda r: {"s": _r(r, 0, 5), "d": _r(r, 1, 6), "k": _r(r, 1, 6)}),
    Entry("gv07", cat.gv07_bound, (Param("s"), Param("d"), Param("k")), "sign-condition sum with C(2ks+1, j) 6^j",
          lambda r: {"s": _r(r, 0, 5), "d": _r(r, 1, 6), "k": _r(r, 1, 6)}),
    Entry("basu-kettner", cat.basu_kettner_bound, (Param("s"), Param("k"), Param("i")), "b_i for s quadrics, s <= k",
          lambda r: (lambda k: {"s": _r(r, 0, k), "k": k, "i": _r(r, 0, k - 1)})(_r(r, 1, 8)), per_i=True,
          index_range=lambda p: range(0, p["k"])),
    Entry("safey-el-din", cat.safey_el_din_bound,
          (Param("degrees", "ints"), Param("k"), Param("kprime"), Param("variant", "str", False, "radical")),
          "components of smooth varieties (radical or regular-sequence variant)", _s_safey),
    Entry("total-degree", lambda d, k, l: cat.total_degree_variety_bound(d, k, l), (Param("d"), Param("k"), Param("l")),
          "variety of l polynomials of degree <= d in R^k (min of two arms)",
          lambda r: {"d": _r(r, 1, 8), "k": _r(r, 1, 6), "l": _r(r, 1, 5)}),
    Entry("g-min", lambda degrees, blocks, l: cat.g_min(degrees, blocks, l), (Param("degrees", "ints"), Param("blocks", "ints"), Param("l")),
          "variety of l polynomials with block degrees",
          lambda r: (lambda p: {"degrees": [_r(r, 2, 5) for _ in range(p)], "blocks": [_r(r, 1, 3) for _ in range(p)], "l": _r(r, 1, 4)})(_r(r, 1, 3))),
    Entry("multi-semi", lambda degrees, blocks, s, i=None: cat.multi_semi_bounds(degrees, blocks, s, i),
          (Param("degrees", "ints"), Param("blocks", "ints"), Param("s"), _I),
          "semi-algebraic sets with block degrees", _with_i(_s_multi, _k_multi), per_i=True,
          index_range=lambda p: range(0, _k_multi(p))),
    Entry("box-variety", lambda matrix: cat.box_variety_bound(matrix), (Param("matrix", "matrix"),), "variety with per-variable degree matrix",
          lambda r: {"matrix": _s_box(r)["matrix"]}),
    Entry("box-semi", lambda matrix, s, i=None: cat.box_bounds(matrix, s, i), (Param("matrix", "matrix"), Param("s"), _I),
          "semi-algebraic sets with per-variable degree matrix", _with_i(_s_box, _k_box), per_i=True,
          index_range=lambda p: range(0, _k_box(p))),
    Entry("partially-quadratic-variety", lambda d, k1, k2, l: cat.partially_quadratic_variety_bound(d, k1, k2, l),
          (Param("d"), Param("k1"), Param("k2"), Param("l")), "degree <= d in k1 variables, <= 2 in k2 variables",
          lambda r: {"d": _r(r, 2, 6), "k1": _r(r, 0, 3), "k2": _r(r, 1, 3), "l": _r(r, 1, 4)}),
    Entry("partially-quadratic-semi", lambda d, k1, k2, s, i=None: cat.partially_quadratic_bounds(d, k1, k2, s, i),
          (Param("d"), Param("k1"), Param("k2"), Param("s"), _I), "semi-algebraic partially quadratic sets",
          _with_i(_s_pq, _k_pq), per_i=True, index_range=lambda p: range(0, _k_pq(p))),
    Entry("projective-quadrics", lambda k, l: cat.projective_quadrics_bound(k, l), (Param("k"), Param("l")),
          "real projective variety of l quadrics in P^k",
          lambda r: {"k": _r(r, 2, 10), "l": _r(r, 1, 6)}),
    Entry("bpr-new", lambda s, m, d, k1, k2, i=None: cat.bpr_new_bounds(s, m, d, k1, k2, i),
          (Param("s"), Param("m"), Param("d"), Param("k1"), Param("k2"), _I),
          "s polynomials partially quadratic plus m quadrics in the quadratic block",
          _with_i(_s_bpr, _k_bpr), per_i=True, index_range=lambda p: range(0, _k_bpr(p))),
    Entry("several-blocks-variety", lambda degrees, k2, l: cat.partially_quadratic_multi_variety_bound(degrees, k2, l),
          (Param("degrees", "ints"), Param("k2"), Param("l")), "per-variable degrees d_i plus a quadratic block",
          lambda r: {"degrees": [_r(r, 2, 5) for _ in range(_r(r, 0, 3))], "k2": _r(r, 1, 3), "l": _r(r, 1, 4)}),
    Entry("several-blocks-semi", lambda degrees, k2, s, i=None: cat.partially_quadratic_multi_bounds(degrees, k2, s, i),
          (Param("degrees", "ints"), Param("k2"), Param("s"), _I), "semi-algebraic version with per-variable degrees",
          _with_i(_s_sbm, _k_sbm), per_i=True, index_range=lambda p: range(0, _k_sbm(p))),
    Entry("barone-basu", cat.barone_basu_bound,
          (Param("d1"), Param("d2"), Param("k"), Param("kprime"), Param("s"), Param("interp", "str", False, "d2")),
          "sign conditions on a k'-dimensional variety of degree <= d1", _s_barone),
    Entry("refined-two-degree", cat.two_degree_variety_bound, (Param("d1"), Param("d2"), Param("k")),
          "F(d1,d2,k) + F(d1,d2,k-1) + 1",
          lambda r: (lambda d1: {"d1": d1, "d2": _r(r, d1, 7), "k": _r(r, 2, 7)})(_r(r, 2, 5))),
    Entry("bb-new", cat.bb_new_bounds,
          (Param("d1"), Param("d2"), Param("k"), Param("kprime"), Param("s"), Param("i")),
          "b_i of sign conditions on a k'-dimensional variety, refined", _s_bb, per_i=True,
          index_range=lambda p: range(0, p["kprime"])),
    Entry("ci-total-distinct", _ci_total_distinct, (Param("k"), Param("degrees", "ints")),
          "exact Betti sum of a generic complete intersection of given degrees",
          lambda r: (lambda k: {"k": k, "degrees": [_r(r, 1, 5) for _ in range(_r(r, 1, k))]})(_r(r, 1, 6)), kind="exact"),
    Entry("one-multi", _one_multi, (Param("degrees", "ints"),), "exact Betti sum of one generic multi-degree polynomial",
          lambda r: {"degrees": [_r(r, 1, 5) for _ in range(_r(r, 1, 5))]}, kind="exact"),
    Entry("quadrics-projective", _quadrics_projective, (Param("k"), Param("l")),
          "exact Betti sum of l generic quadrics in P^k",
          lambda r: (lambda k: {"k": k, "l": _r(r, 1, k - 1)})(_r(r, 2, 12)), kind="exact"),
    Entry("blocks-generic", _blocks_generic, (Param("blocks", "ints"), Param("degrees", "ints"), Param("l")),
          "bound for generic block-degree complete intersections",
          lambda r: (lambda bl: {"blocks": bl, "degrees": [_r(r, 1, 5) for _ in bl], "l": _r(r, 1, min(4, sum(bl)))})([_r(r, 1, 3) for _ in range(_r(r, 1, 3))])),
    Entry("partially-quadratic-generic", _pq_generic, (Param("d"), Param("k1"), Param("k2"), Param("l")),
          "bound for generic partially quadratic complete intersections",
          lambda r: (lambda k1, k2: {"d": _r(r, 1, 6), "k1": k1, "k2": k2, "l": _r(r, 1, k1 + k2)})(_r(r, 0, 3), _r(r, 1, 3))),
    Entry("several-blocks-generic", _sbm_generic, (Param("degrees", "ints"), Param("k2"), Param("l")),
          "bound for generic per-variable-degree partially quadratic complete intersections",
          lambda r: (lambda k1, k2: {"degrees": [_r(r, 1, 5) for _ in range(k1)], "k2": k2, "l": _r(r, 1, k1 + k2)})(_r(r, 0, 3), _r(r, 1, 3))),
    Entry("boxes-generic", _boxes_generic, (Param("matrix", "matrix"),),
          "box-support expression with n_refined as written (see README caveat)",
          lambda r: (lambda k: {"matrix": [[_r(r, 1, 4) for _ in range(k)] for _ in range(_r(r, 1, k))]})(_r(r, 1, 4))),
    Entry("pull-back", lambda k, m, d, D, s: app.pull_back_bound(app.PullBack(k, m, d, D, s)),
          (Param("k"), Param("m"), Param("d"), Param("D"), Param("s")), "inverse image under a polynomial map",
          lambda r: {"k": _r(r, 0, 2), "m": _r(r, 1, 2), "d": _r(r, 2, 4), "D": _r(r, 2, 4), "s": _r(r, 0, 3)}),
    Entry("image", lambda k, m, d, D, s, i: app.image_bound(app.Image(k, m, d, D, s, i)),
          (Param("k"), Param("m"), Param("d"), Param("D"), Param("s"), Param("i")), "b_i of a projection image", _s_image),
    Entry("fourier-mukai", lambda k, m, d, D, s1, s2, i: app.fourier_mukai_bound(app.FourierMukai(k, m, d, D, s1, s2, i)),
          (Param("k"), Param("m"), Param("d"), Param("D"), Param("s1"), Param("s2"), Param("i")),
          "b_i of a transform along a semi-algebraic kernel", _s_fm),
    Entry("transversal", lambda k, kprime, d, s, i: app.transversal_bound(app.Transversal(k, kprime, d, s, i)),
          (Param("k"), Param("kprime"), Param("d"), Param("s"), Param("i")), "b_i of a space of transversals",
          lambda r: {"k": 1, "kprime": _r(r, 0, 1), "d": _r(r, 2, 3), "s": _r(r, 0, 2), "i": _r(r, 0, 1)}),
]

REGISTRY: dict[str, Entry] = {e.id: e for e in _ENTRIES}


def get_entry(id: str) -> Entry:
    try:
        return REGISTRY[id]
    except KeyError:
        raise UnknownBoundError(f"unknown bound id {id!r}; known ids: {', '.join(sorted(REGISTRY))}") from None


def evaluate(id: str, **params) -> cat.BoundResult:
    """Evaluate the registry entry ``id`` with keyword parameters."""
    entry = get_entry(id)
    kwargs = {}
    for p in entry.params:
        if p.name in params and params[p.name] is not None:
            kwargs[p.name] = params[p.name]
        elif not p.required:
            if p.default is not None:
                kwargs[p.name] = p.default
        else:
            from .errors import HypothesisError

            raise HypothesisError(f"parameter {p.name} is required for {id}")
    return entry.func(**kwargs)
