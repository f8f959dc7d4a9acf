"""Cross-check suites: closed forms against the face-sum engine, mixed volumes
against interpolation, combinatorial identities, and catalog sanity.

Every suite returns a :class:`SuiteResult` holding the number of checks run
and the first few counterexamples, so failures can be printed as-is.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial, prod
from typing import Callable

from . import catalog as cat
from . import generic as gen
from .combinat import alternating_binomial_A, binomial, complete_homogeneous, compositions
from .polytope import (
    BlockProduct,
    Box,
    MinkowskiSum,
    MixedVolumeQuery,
    ScaledSimplex,
    mixed_volume,
    mixed_volume_oracle_interpolation,
    n_refined,
)
from .registry import REGISTRY, evaluate

__all__ = [
    "SuiteResult",
    "SUITES",
    "run_suite",
    "random_mv_query",
    "random_box_matrix",
    "quadrics_witness_table",
    "QUADRICS_WITNESS_CONSTANT",
]

MAX_COUNTEREXAMPLES = 10


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, what: Callable[[], str] | str) -> None:
        self.checks += 1
        if not ok and len(self.failures) < MAX_COUNTEREXAMPLES:
            self.failures.append(what() if callable(what) else what)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checks} checks, {len(self.failures)} failures, {self.seconds:.2f}s"


# ---------------------------------------------------------------------------
# random instances


def _random_composition(rng: random.Random, total: int, parts: int) -> list[int]:
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    return [b - a for a, b in zip([0] + cuts, cuts + [total])]


def _random_set_partition(rng: random.Random, m: int) -> list[tuple[int, ...]]:
    labels = [rng.randint(0, m - 1) for _ in range(m)]
    blocks: dict[int, list[int]] = {}
    for v, lab in enumerate(labels, start=1):
        blocks.setdefault(lab, []).append(v)
    return sorted(tuple(b) for b in blocks.values())


def _random_body(rng: random.Random, family: str, blocks: list[tuple[int, ...]]):
    chosen = [b for b in blocks if rng.random() < 0.7] or [rng.choice(blocks)]
    if family == "simplex":
        return ScaledSimplex(rng.randint(1, 4), blocks[0])
    if family == "box":
        return Box(tuple(rng.randint(1, 4) for _ in chosen), tuple(b[0] for b in chosen))
    return BlockProduct(tuple((b, rng.randint(1, 4)) for b in chosen))


def random_mv_query(rng: random.Random, max_dim: int = 5) -> MixedVolumeQuery:
    """A random query over boxes, simplices or block products on ``m <= max_dim`` variables."""
    m = rng.randint(1, max_dim)
    family = rng.choice(["box", "simplex", "blocks"])
    if family == "box":
        blocks = [(v,) for v in range(1, m + 1)]
    elif family == "simplex":
        blocks = [tuple(range(1, m + 1))]
    else:
        blocks = _random_set_partition(rng, m)
    n_bodies = rng.randint(1, m)
    mults = _random_composition(rng, m, n_bodies)
    bodies = []
    for r in mults:
        body = _random_body(rng, family, blocks)
        if rng.random() < 0.2:
            body = MinkowskiSum((body, _random_body(rng, family, blocks)))
        bodies.append((body, r))
    return MixedVolumeQuery(tuple(bodies), ambient=range(1, m + 1))


def random_box_matrix(rng: random.Random, max_k: int = 6, max_side: int = 4) -> list[list[int]]:
    k = rng.randint(1, max_k)
    ell = rng.randint(1, k)
    return [[rng.randint(1, max_side) for _ in range(k)] for _ in range(ell)]


# ---------------------------------------------------------------------------
# suites


def suite_khovanskii_closed_forms() -> SuiteResult:
    res = SuiteResult("khovanskii-closed-forms")
    for k in range(2, 11):
        b = gen.betti_generic(gen.GenericSystem.total_degree(k, [2, 2])).betti_sum
        res.check(b == 2 * k, lambda: f"two quadrics k={k}: b={b}, expected {2 * k}")
    for d in range(1, 6):
        for k in range(1, 7):
            b = gen.betti_generic(gen.GenericSystem.total_degree(k, [d])).betti_sum
            res.check(b == 1 + (d - 1) ** k, lambda: f"hypersurface d={d} k={k}: b={b}")
    for k in range(1, 7):
        for ell in range(1, k + 1):
            for degrees in product(range(1, 5), repeat=ell):
                b = gen.betti_generic(gen.GenericSystem.total_degree(k, degrees)).betti_sum
                closed = gen.betti_ci_total_distinct(k, degrees)
                res.check(b == closed, lambda: f"total degrees k={k} d={degrees}: engine {b}, closed {closed}")
    for k in range(1, 5):
        for degrees in product(range(1, 4), repeat=k):
            b = gen.betti_generic(gen.GenericSystem.boxes([list(degrees)])).betti_sum
            closed = gen.betti_one_multi(degrees)
            res.check(b == closed, lambda: f"one multi-degree d={degrees}: engine {b}, closed {closed}")
    rng = random.Random(20)
    for _ in range(60):
        rows = random_box_matrix(rng, max_k=4, max_side=3)
        b = gen.betti_generic(gen.GenericSystem.boxes(rows)).betti_sum
        w = gen.betti_boxes_weighted(rows)
        res.check(b == w, lambda: f"boxes {rows}: engine {b}, weighted expression {w}")
    return res


def suite_mv_oracles(n_random: int = 200, seed: int = 0) -> SuiteResult:
    res = SuiteResult("mv-oracles")
    rng = random.Random(seed)
    for _ in range(n_random):
        q = random_mv_query(rng)
        a, b = mixed_volume(q), mixed_volume_oracle_interpolation(q)
        res.check(a == b, lambda: f"{q}: primary {a}, interpolation {b}")
    for _ in range(n_random):
        rows = random_box_matrix(rng, max_k=6, max_side=5)
        ell, k = len(rows), len(rows[0])
        for alpha in compositions(k, ell):
            bodies = tuple((Box(tuple(r)), a) for r, a in zip(rows, alpha))
            mv = mixed_volume(MixedVolumeQuery(bodies, ambient=range(1, k + 1)))
            lhs = n_refined(rows, alpha) * prod(factorial(a) for a in alpha)
            res.check(lhs == factorial(k) * mv, lambda: f"n_refined {rows} alpha={alpha}: {lhs} vs k! MV {factorial(k) * mv}")
    return res


def suite_identities() -> SuiteResult:
    res = SuiteResult("identities")
    for n in range(1, 41):
        for p in range(0, min(n, 6) + 1):
            if n - 1 >= p:
                s = alternating_binomial_A(n, p) + alternating_binomial_A(n - 1, p)
                res.check(s == binomial(n + 1, p + 1), lambda: f"A({n},{p}) + A({n - 1},{p}) = {s}")
                if p >= 1:
                    dlt = alternating_binomial_A(n, p) - alternating_binomial_A(n - 1, p)
                    res.check(dlt == alternating_binomial_A(n - 1, p - 1), lambda: f"A({n},{p}) - A({n - 1},{p}) = {dlt}")
    for k in range(1, 9):
        for ell in range(1, k + 1):
            for chi in range(-30, 31, 7):
                b = gen.affine_betti_from_chi(k, ell, chi)
                back = (b - 1 - (-1) ** (k - ell + 1)) * (-1) ** (k - ell)
                res.check(back == chi, lambda: f"affine chi<->b k={k} l={ell} chi={chi}")
                b = gen.projective_betti_from_chi(k, ell, chi)
                back = (b - (1 + (-1) ** (k - ell + 1)) * (k - ell + 1)) * (-1) ** (k - ell)
                res.check(back == chi, lambda: f"projective chi<->b k={k} l={ell} chi={chi}")
    for degrees in [(1,), (2, 3), (2, 2, 5), (3, 1, 4, 1)]:
        for j in range(1, 7):
            lhs = complete_homogeneous(j, degrees)
            rhs = complete_homogeneous(j, degrees[:-1]) + degrees[-1] * complete_homogeneous(j - 1, degrees)
            res.check(lhs == rhs, lambda: f"h_{j}{degrees}: {lhs} vs {rhs}")
    for k in range(2, 9):
        for ell in range(1, k):
            rep = gen.quadrics_projective(k, ell)
            engine = gen.betti_generic(gen.GenericSystem.total_degree(k, [2] * ell), "projective")
            res.check(rep.chi == engine.chi and rep.betti_sum == engine.betti_sum,
                      lambda: f"projective quadrics k={k} l={ell}: closed {rep}, engine {engine}")
    return res


def suite_chern() -> SuiteResult:
    res = SuiteResult("chern")
    for ell in range(1, 4):
        for k in range(ell + 1, 7):
            for degrees in product(range(1, 5), repeat=ell):
                a = gen.lefschetz_chi_affine(k, degrees)
                b = gen.chi_khovanskii(gen.GenericSystem.total_degree(k, degrees))
                res.check(a == b, lambda: f"k={k} d={degrees}: Chern {a}, face sum {b}")
    return res


def _catalog_points(n_points: int, seed: int):
    rng = random.Random(seed)
    ids = sorted(REGISTRY)
    for n in range(n_points):
        entry = REGISTRY[ids[n % len(ids)]]
        yield entry, entry.sampler(rng)


def suite_catalog_sanity(n_points: int = 500, seed: int = 7) -> SuiteResult:
    res = SuiteResult("catalog-sanity")
    for entry, params in _catalog_points(n_points, seed):
        r = evaluate(entry.id, **params)
        v = r.value
        res.check(isinstance(v, (int, Fraction)) and v > 0, lambda: f"{entry.id} {params}: value {v} not positive")
        if entry.kind == "exact" or r.kind == "exact":
            res.check(Fraction(v).denominator == 1, lambda: f"{entry.id} {params}: exact value {v} not integral")
        if entry.per_i and params.get("i") is not None:
            vals = [evaluate(entry.id, **{**params, "i": i}).value for i in entry.index_range(params)]
            res.check(all(a >= b for a, b in zip(vals, vals[1:])), lambda: f"{entry.id} {params}: not nonincreasing in i: {vals}")
    return res


# |b - 2^(l-2) C(k, l-1)| / k^(l-2) stays below this for l = 3, 4, 5 and k <= 40;
# along each parity class of k the ratio is monotone, so it is bounded for all k.
QUADRICS_WITNESS_CONSTANT = Fraction(1)


def quadrics_witness_table(ell: int, k_max: int = 40) -> list[tuple[int, Fraction]]:
    """``(k, |b(k, l) - 2^(l-2) C(k, l-1)| / k^(l-2))`` for the projective quadrics closed form."""
    rows = []
    for k in range(ell + 1, k_max + 1):
        b = gen.quadrics_projective(k, ell).betti_sum
        lead = Fraction(2 ** ell, 4) * binomial(k, ell - 1)
        rows.append((k, abs(b - lead) / Fraction(k) ** (ell - 2)))
    return rows


def suite_regimes() -> SuiteResult:
    res = SuiteResult("regimes")
    for d in range(1, 9):
        for k in range(1, 9):
            half = Fraction(1 + (2 * d - 1) ** k, 2)
            optm = cat.optm_bound(d, k).value
            if d == 1 or k == 1:
                res.check(half == optm, lambda: f"d={d} k={k}: expected equality, {half} vs {optm}")
            else:
                res.check(half < optm, lambda: f"d={d} k={k}: {half} not < {optm}")
    for ell in range(9, 21):
        a, b = cat.leading_coefficient_comparison(ell)
        res.check(a < b, lambda: f"l={ell}: {a} not < {b}")
    for ell in (3, 4, 5):
        table = quadrics_witness_table(ell)
        for parity in (0, 1):
            seq = [c for k, c in table if k % 2 == parity]
            res.check(_monotone(seq), lambda: f"l={ell}, k = {parity} mod 2: scaled gap not monotone: {seq}")
            res.check(max(seq) <= QUADRICS_WITNESS_CONSTANT,
                      lambda: f"l={ell}: scaled gap {max(seq)} exceeds {QUADRICS_WITNESS_CONSTANT}")
    return res


def _monotone(seq: list) -> bool:
    return all(a <= b for a, b in zip(seq, seq[1:])) or all(a >= b for a, b in zip(seq, seq[1:]))


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "khovanskii-closed-forms": suite_khovanskii_closed_forms,
    "mv-oracles": suite_mv_oracles,
    "identities": suite_identities,
    "chern": suite_chern,
    "catalog-sanity": suite_catalog_sanity,
    "regimes": suite_regimes,
}


def run_suite(name: str) -> SuiteResult:
    """Run one named suite, timing it; unknown names raise ``KeyError``."""
    start = time.perf_counter()
    res = SUITES[name]()
    res.seconds = time.perf_counter() - start
    return res
