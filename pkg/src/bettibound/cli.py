"""Command line: evaluate bounds, generic Betti sums and mixed volumes, compare
bounds over grids, run the cross-check suites, and report leading coefficients.

Every subcommand builds a :class:`Table` of strings and writes it as RFC-4180
CSV (the default) or JSON (``{"schema": 1, ...}`` with every value a string).

Parameter values accept grids:

* integers: ``3``, ``2..8`` (inclusive) or ``2,3,5``;
* integer lists (``--degrees``, ``--blocks``): ``2,3``; several lists ``2,3;4,4``;
* matrices (``--matrix``, ``--boxes``): rows separated by ``/``: ``2,2/3,3``;
  several matrices separated by ``;``.

Grid cells are enumerated lexicographically in the order the parameters are
listed by ``bound --list`` (the last parameter varies fastest).

Defaults come from, in decreasing precedence: command-line flags, the
``--config`` JSON file's section for the subcommand, its ``"defaults"``
section, built-in defaults.

Exit codes: 0 ok, 1 suite failure, 2 unknown bound id, 3 hypothesis
violation, 4 unsupported family, 5 shape mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Iterable, Sequence

from . import generic as gen
from .catalog import BoundResult, leading_coefficient_comparison, optm_bound, total_degree_variety_bound
from .combinat import binomial, factorial, render_exact
from .errors import BettiBoundError, HypothesisError, ShapeMismatchError, UnsupportedFamilyError
from .polytope import (
    Box,
    MixedVolumeQuery,
    ScaledSimplex,
    mixed_volume_oracle_interpolation,
    mixed_volume_report,
    n_coarse_bound,
    n_refined,
)
from .registry import REGISTRY, Entry, get_entry
from .verify import SUITES, quadrics_witness_table, run_suite

__all__ = ["main", "build_parser", "Table", "ReportRow", "parse_int_grid", "parse_list_grid", "parse_matrix_grid"]

SCHEMA_VERSION = 1
ENUMERATION_LIMIT = 16
_SIZE_PARAMS = ("k", "l", "k1", "k2", "kprime", "m")
BOUND_FLAGS = ("d", "k", "l", "s", "i", "m", "D", "k1", "k2", "kprime", "d1", "d2", "s1", "s2",
               "degrees", "blocks", "matrix", "variant", "interp")


# ---------------------------------------------------------------------------
# parsing


def parse_int_grid(text: str) -> list[int]:
    """``"3"`` -> [3]; ``"2..5"`` -> [2, 3, 4, 5]; ``"2,7"`` -> [2, 7]."""
    out: list[int] = []
    for piece in str(text).split(","):
        piece = piece.strip()
        try:
            if ".." in piece:
                lo, hi = piece.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(piece))
        except ValueError:
            raise ShapeMismatchError(f"cannot read integer grid {text!r}") from None
    if not out:
        raise ShapeMismatchError(f"empty grid {text!r}")
    return out


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ShapeMismatchError(f"cannot read integer list {text!r}") from None


def parse_list_grid(text: str) -> list[list[int]]:
    """``"2,3;4,4"`` -> [[2, 3], [4, 4]]; an empty item is the empty list."""
    return [_int_list(item) for item in str(text).split(";")]


def parse_matrix_grid(text: str) -> list[list[list[int]]]:
    """``"2,2/3,3"`` -> [[[2, 2], [3, 3]]]; matrices separated by ``;``."""
    return [[_int_list(row) for row in item.split("/")] for item in str(text).split(";")]


def _parse_param(kind: str, text: str) -> list[Any]:
    if kind == "int":
        return parse_int_grid(text)
    if kind == "ints":
        return parse_list_grid(text)
    if kind == "matrix":
        return parse_matrix_grid(text)
    return [t.strip() for t in str(text).split(",")]


def render_value(v: Any) -> str:
    if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
        return render_exact(v)
    if isinstance(v, (list, tuple)):
        if v and isinstance(v[0], (list, tuple)):
            return "/".join(render_value(r) for r in v)
        return ",".join(render_value(x) for x in v)
    return str(v)


def render_params(params: dict) -> str:
    return " ".join(f"{k}={render_value(v)}" for k, v in params.items())


# ---------------------------------------------------------------------------
# output


@dataclass
class Table:
    command: str
    columns: list[str]
    rows: list[list[str]] = field(default_factory=list)

    def add(self, values: Sequence[Any]) -> None:
        self.rows.append([render_value(v) for v in values])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(self.columns)
        w.writerows(self.rows)
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "columns": self.columns,
            "rows": [dict(zip(self.columns, r)) for r in self.rows],
        }
        return json.dumps(doc, indent=2) + "\n"


@dataclass(frozen=True)
class ReportRow:
    """One evaluated bound: id, rendered parameters, exact value and notes."""

    id: str
    params: str
    value: Fraction
    kind: str
    branch: str
    assumptions: tuple[str, ...]
    citation: str
    details: tuple[tuple[str, Fraction], ...] = ()

    COLUMNS = ("id", "params", "value", "kind", "branch", "assumptions", "citation", "details")

    @classmethod
    def from_result(cls, id: str, params: dict, r: BoundResult) -> "ReportRow":
        return cls(id, render_params(params), Fraction(r.value), r.kind, r.branch, tuple(r.assumptions), r.citation,
                   tuple(r.details))

    def cells(self) -> list[str]:
        return [self.id, self.params, render_exact(self.value), self.kind, self.branch,
                "; ".join(self.assumptions), self.citation,
                "; ".join(f"{name}: {render_exact(v)}" for name, v in self.details)]


# ---------------------------------------------------------------------------
# shared helpers


def _guard(params: dict, allow_large: bool) -> None:
    if allow_large:
        return
    sizes = {n: params[n] for n in _SIZE_PARAMS if isinstance(params.get(n), int)}
    if isinstance(params.get("matrix"), list):
        sizes["matrix size"] = max(len(params["matrix"]), len(params["matrix"][0]) if params["matrix"] else 0)
    if isinstance(params.get("blocks"), list):
        sizes["sum of blocks"] = sum(params["blocks"])
    for name, v in sizes.items():
        if v > ENUMERATION_LIMIT:
            raise HypothesisError(f"{name} <= {ENUMERATION_LIMIT}", "pass --allow-large to lift the enumeration guard")


def _grid(entry: Entry, supplied: dict[str, str]) -> list[dict]:
    names, values = [], []
    for p in entry.params:
        text = supplied.get(p.name)
        if text is None:
            if p.required:
                raise HypothesisError(f"--{p.name} is required for {entry.id}")
            if p.default is None:
                continue
            text = str(p.default)
        names.append(p.name)
        values.append(_parse_param(p.kind, text))
    return [dict(zip(names, combo)) for combo in product(*values)]


def _eval_cell(job: tuple[str, dict]) -> BoundResult:
    id, params = job
    return get_entry(id).func(**params)


def _evaluate_all(jobs: list[tuple[str, dict]], n_jobs: int) -> list[BoundResult]:
    if n_jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=n_jobs) as pool:
            return list(pool.map(_eval_cell, jobs, chunksize=max(1, len(jobs) // (4 * n_jobs))))
    return [_eval_cell(j) for j in jobs]


def _supplied(args, names: Iterable[str]) -> dict[str, str]:
    return {n: getattr(args, f"p_{n}") for n in names if getattr(args, f"p_{n}", None) is not None}


# ---------------------------------------------------------------------------
# commands


def cmd_bound(args) -> Table:
    if args.list:
        t = Table("bound", ["id", "kind", "params", "summary"])
        for id, e in sorted(REGISTRY.items()):
            sig = " ".join(p.name if p.required else f"[{p.name}]" for p in e.params)
            t.add([id, e.kind, sig, e.summary])
        return t
    if not args.id:
        raise HypothesisError("--id is required (or --list)")
    entry = get_entry(args.id)
    supplied = _supplied(args, BOUND_FLAGS)
    unused = sorted(set(supplied) - set(entry.param_names))
    if unused:
        raise ShapeMismatchError(f"{entry.id} takes no parameter(s) {', '.join(unused)}; it takes {', '.join(entry.param_names)}")
    cells = _grid(entry, supplied)
    for c in cells:
        _guard(c, args.allow_large)
    results = _evaluate_all([(entry.id, c) for c in cells], args.jobs)
    t = Table("bound", list(ReportRow.COLUMNS))
    for c, r in zip(cells, results):
        t.rows.append(ReportRow.from_result(entry.id, c, r).cells())
    return t


def _family_systems(args) -> list[tuple[str, gen.GenericSystem, Any]]:
    """(description, system, closed-form value or None) for every grid cell of the chosen family."""
    chosen = [f for f in ("quadrics", "simplex_d", "degrees", "multi", "boxes", "blocks", "partially_quadratic",
                          "several_blocks") if getattr(args, f) is not None]
    if len(chosen) != 1:
        raise ShapeMismatchError("choose exactly one family: --quadrics, --simplex-d, --degrees, --multi, --boxes, "
                                 "--blocks, --partially-quadratic or --several-blocks")
    fam = chosen[0]
    ints = lambda name, default=None: parse_int_grid(getattr(args, name)) if getattr(args, name) is not None else (
        [default] if default is not None else None)
    out = []

    def need(name, grid):
        if grid is None:
            raise HypothesisError(f"--{name.replace('_', '-')} is required for this family")
        return grid

    if fam == "quadrics":
        for ell, k in product(parse_int_grid(args.quadrics), need("k", ints("k"))):
            out.append((f"quadrics l={ell} k={k}", gen.GenericSystem.total_degree(k, [2] * ell),
                        gen.betti_ci_total_distinct(k, [2] * ell) if ell <= k else None))
    elif fam == "simplex_d":
        for d, k, ell in product(parse_int_grid(args.simplex_d), need("k", ints("k")), ints("l", 1)):
            out.append((f"simplex d={d} k={k} l={ell}", gen.GenericSystem.total_degree(k, [d] * ell),
                        gen.betti_ci_total_distinct(k, [d] * ell) if ell <= k else None))
    elif fam == "degrees":
        for degrees, k in product(parse_list_grid(args.degrees), need("k", ints("k"))):
            out.append((f"total degrees {render_value(degrees)} k={k}", gen.GenericSystem.total_degree(k, degrees),
                        gen.betti_ci_total_distinct(k, degrees) if 1 <= len(degrees) <= k else None))
    elif fam == "multi":
        for degrees in parse_list_grid(args.multi):
            out.append((f"multi-degree {render_value(degrees)}", gen.GenericSystem.boxes([degrees]),
                        gen.betti_one_multi(degrees)))
    elif fam == "boxes":
        for rows in parse_matrix_grid(args.boxes):
            out.append((f"boxes {render_value(rows)}", gen.GenericSystem.boxes(rows), gen.betti_boxes_weighted(rows)))
    elif fam == "blocks":
        if args.block_degrees is None:
            raise HypothesisError("--block-degrees is required with --blocks")
        for sizes, degrees, ell in product(parse_list_grid(args.blocks), parse_list_grid(args.block_degrees),
                                           need("l", ints("l"))):
            out.append((f"blocks {render_value(sizes)} degrees {render_value(degrees)} l={ell}",
                        gen.GenericSystem.blocks(sizes, degrees, ell), None))
    elif fam == "partially_quadratic":
        for d, k1, k2, ell in product(parse_int_grid(args.partially_quadratic), need("k1", ints("k1")),
                                      need("k2", ints("k2")), need("l", ints("l"))):
            out.append((f"partially quadratic d={d} k1={k1} k2={k2} l={ell}",
                        gen.GenericSystem.partially_quadratic(d, k1, k2, ell), None))
    else:
        for degrees, k2, ell in product(parse_list_grid(args.several_blocks), need("k2", ints("k2")),
                                        need("l", ints("l"))):
            out.append((f"several blocks {render_value(degrees)} k2={k2} l={ell}",
                        gen.GenericSystem.several_blocks_mixed(degrees, k2, ell), None))
    return out


def _generic_rows(args) -> list[tuple[str, gen.GenericSystem, gen.ChiReport, Any]]:
    limit = None if args.allow_large else ENUMERATION_LIMIT
    rows = []
    for desc, system, closed in _family_systems(args):
        if args.setting == "projective" and not all(isinstance(P, ScaledSimplex) for P in system.supports):
            raise UnsupportedFamilyError("the projective setting needs total-degree supports "
                                         "(--quadrics, --simplex-d or --degrees)")
        rep = gen.betti_generic(system, args.setting, limit=limit)
        if args.setting == "projective":
            closed = (gen.quadrics_projective(system.k, system.ell).betti_sum
                      if args.quadrics is not None and system.ell < system.k else None)
        rows.append((desc, system, rep, closed))
    return rows


def cmd_generic(args) -> Table:
    t = Table("generic", ["family", "k", "l", "setting", "b", "chi", "kind", "closed_form", "real_upper_bound"])
    for desc, system, rep, closed in _generic_rows(args):
        t.add([desc, system.k, system.ell, rep.setting, rep.betti_sum, rep.chi, "exact",
               "" if closed is None else closed, "yes" if rep.real_upper_bound else "no"])
    return t


def cmd_chi(args) -> Table:
    t = Table("chi", ["family", "k", "l", "setting", "chi", "b", "conversion", "conversion_holds"])
    for desc, system, rep, _ in _generic_rows(args):
        t.add([desc, system.k, system.ell, rep.setting, rep.chi, rep.betti_sum, rep.conversion,
               "yes" if rep.conversion_holds() else "no"])
    return t


def cmd_mixedvol(args) -> Table:
    if (args.boxes is None) == (args.simplices is None):
        raise ShapeMismatchError("choose exactly one of --boxes or --simplices")
    t = Table("mixedvol", ["bodies", "multiplicities", "mixed_volume", "interpolation", "m_factorial_mv",
                           "n_refined", "n_coarse_bound", "strategies"])
    if args.boxes is not None:
        instances = []
        for rows in parse_matrix_grid(args.boxes):
            k = len(rows[0]) if rows else 0
            if any(len(r) != k for r in rows):
                raise ShapeMismatchError("box rows must have equal length")
            instances.append((rows, [Box(tuple(r)) for r in rows], k))
    else:
        if args.k is None:
            raise HypothesisError("--k is required with --simplices")
        instances = [(degrees, [ScaledSimplex.standard(d, k) for d in degrees], k)
                     for degrees in parse_list_grid(args.simplices) for k in parse_int_grid(args.k)]
    for label, bodies, k in instances:
        mult = _int_list(args.mult) if args.mult else None
        if mult is None:
            if k % len(bodies):
                raise ShapeMismatchError(f"{len(bodies)} bodies cannot share dimension {k} equally; pass --mult")
            mult = [k // len(bodies)] * len(bodies)
        if len(mult) != len(bodies):
            raise ShapeMismatchError(f"{len(mult)} multiplicities for {len(bodies)} bodies")
        if not args.allow_large and k > ENUMERATION_LIMIT:
            raise HypothesisError(f"dimension <= {ENUMERATION_LIMIT}", "pass --allow-large to lift the guard")
        q = MixedVolumeQuery(tuple(zip(bodies, mult)), ambient=range(1, k + 1))
        mv, strategies = mixed_volume_report(q)
        oracle = mixed_volume_oracle_interpolation(q) if k <= 8 else ""
        nr = nc = ""
        if args.boxes is not None:
            nr, nc = n_refined(label, mult), n_coarse_bound(label, mult)
        t.add([render_value(label), render_value(mult), mv, oracle, factorial(k) * mv, nr, nc, "; ".join(strategies)])
    return t


_PRESETS = {
    "total-vs-optm": "total-degree (one equation) against the classical d(2d-1)^(k-1)",
    "one-multi-vs-optm": "one polynomial of degree (d,d) against the classical bound at total degree 2d, k = 2",
}


def _winner(names: list[str], values: list[Fraction]) -> str:
    best = min(values)
    winners = [n for n, v in zip(names, values) if v == best]
    return winners[0] if len(winners) == 1 else "tie"


def _unique_columns(ids: list[str]) -> list[str]:
    seen: dict[str, int] = {}
    out = []
    for i in ids:
        seen[i] = seen.get(i, 0) + 1
        out.append(i if seen[i] == 1 else f"{i}#{seen[i]}")
    return out


def cmd_compare(args) -> Table:
    if args.preset:
        return _compare_preset(args)
    ids = [i.strip() for i in (args.ids or "").split(",") if i.strip()]
    if len(ids) < 2:
        raise ShapeMismatchError("compare needs at least two bound ids (--ids a,b) or --preset")
    entries = [get_entry(i) for i in ids]
    supplied = _supplied(args, BOUND_FLAGS)
    used = set().union(*(e.param_names for e in entries))
    stray = sorted(set(supplied) - used)
    if stray:
        raise ShapeMismatchError(f"parameter(s) {', '.join(stray)} are not taken by any of {', '.join(ids)}")
    for e in entries:
        missing = [p.name for p in e.params if p.required and p.name not in supplied]
        if missing:
            raise ShapeMismatchError(f"incomparable parameter shapes: {e.id} also needs {', '.join(missing)}")
    names = [n for n in BOUND_FLAGS if n in supplied]
    kinds = {p.name: p.kind for e in entries for p in e.params}
    grids = [_parse_param(kinds[n], supplied[n]) for n in names]
    cells = [dict(zip(names, combo)) for combo in product(*grids)]
    jobs = []
    for c in cells:
        _guard(c, args.allow_large)
        for e in entries:
            jobs.append((e.id, {n: c[n] for n in e.param_names if n in c}))
    results = _evaluate_all(jobs, args.jobs)
    cols = _unique_columns(ids)
    t = Table("compare", ["params"] + cols + ["winner"])
    for n, c in enumerate(cells):
        vals = [Fraction(r.value) for r in results[n * len(ids):(n + 1) * len(ids)]]
        t.add([render_params(c)] + vals + [_winner(cols, vals)])
    return t


def _compare_preset(args) -> Table:
    if args.preset == "total-vs-optm":
        ds = parse_int_grid(args.p_d or "2..8")
        ks = parse_int_grid(args.p_k or "2..8")
        t = Table("compare", ["params", "total-degree", "optm", "winner"])
        for d, k in product(ds, ks):
            a, b = total_degree_variety_bound(d, k, 1).value, optm_bound(d, k).value
            t.add([f"d={d} k={k}", a, b, _winner(["total-degree", "optm"], [a, b])])
        return t
    if args.preset == "one-multi-vs-optm":
        ds = parse_int_grid(args.p_d or "1..50")
        t = Table("compare", ["params", "one-multi", "optm", "winner"])
        for d in ds:
            a, b = Fraction(gen.betti_one_multi([d, d])), optm_bound(2 * d, 2).value
            t.add([f"d={d} k=2 total={2 * d}", a, b, _winner(["one-multi", "optm"], [a, b])])
        return t
    raise ShapeMismatchError(f"unknown preset {args.preset!r}; known: {', '.join(_PRESETS)}")


def cmd_verify(args) -> tuple[Table, int]:
    names = list(SUITES) if args.suite in (None, "all") else [s.strip() for s in args.suite.split(",")]
    t = Table("verify", ["suite", "status", "checks", "failures", "counterexamples"])
    failed = False
    for name in names:
        if name not in SUITES:
            raise ShapeMismatchError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
        res = run_suite(name)
        failed |= not res.passed
        t.add([name, "pass" if res.passed else "fail", res.checks, len(res.failures), " | ".join(res.failures)])
        if args.timing:
            print(res.summary(), file=sys.stderr)
    return t, (1 if failed else 0)


def cmd_asymptotic(args) -> Table:
    if args.report == "leading":
        t = Table("asymptotic", ["l", "sum_coefficient", "half_coefficient", "smaller"])
        for ell in parse_int_grid(args.l or "1..20"):
            a, b = leading_coefficient_comparison(ell)
            t.add([ell, a, b, "sum" if a < b else ("half" if b < a else "equal")])
        return t
    t = Table("asymptotic", ["l", "k", "b", "leading_term", "scaled_gap"])
    k_max = int(args.k_max)
    for ell in parse_int_grid(args.l or "3..5"):
        for k, ratio in quadrics_witness_table(ell, k_max):
            b = gen.quadrics_projective(k, ell).betti_sum
            lead = Fraction(2 ** ell, 4) * binomial(k, ell - 1)
            t.add([ell, k, b, lead, ratio])
    return t


# ---------------------------------------------------------------------------
# parser


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default=None, help="output format (default csv)")
    p.add_argument("--out", default=None, help="write to FILE instead of stdout")
    p.add_argument("--config", default=None, help="JSON file with default parameters per subcommand")
    p.add_argument("--allow-large", action="store_true", default=None,
                   help=f"lift the enumeration guard (sizes <= {ENUMERATION_LIMIT})")
    p.add_argument("--jobs", type=int, default=None, help="evaluate grid cells in N worker processes")


def _bound_flags(p: argparse.ArgumentParser) -> None:
    for name in BOUND_FLAGS:
        p.add_argument(f"--{name}", dest=f"p_{name}", default=None, metavar="V")


def _family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--quadrics", default=None, help="number of generic quadrics (grid)")
    p.add_argument("--simplex-d", default=None, help="common total degree of l polynomials")
    p.add_argument("--degrees", default=None, help="distinct total degrees, e.g. 2,3")
    p.add_argument("--multi", default=None, help="one polynomial with per-variable degrees, e.g. 2,2")
    p.add_argument("--boxes", default=None, help="per-variable degree matrix, rows separated by '/'")
    p.add_argument("--blocks", default=None, help="block sizes (with --block-degrees and --l)")
    p.add_argument("--block-degrees", default=None)
    p.add_argument("--partially-quadratic", default=None, help="degree d in k1 variables (with --k1 --k2 --l)")
    p.add_argument("--several-blocks", default=None, help="per-variable degrees (with --k2 --l)")
    p.add_argument("--k", default=None)
    p.add_argument("--l", default=None)
    p.add_argument("--k1", default=None)
    p.add_argument("--k2", default=None)
    p.add_argument("--setting", choices=("affine", "projective"), default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bettibound", description=__doc__.split("\n\n")[0], allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="evaluate one catalog bound over a grid", allow_abbrev=False)
    _common(p)
    p.add_argument("--id", default=None)
    p.add_argument("--list", action="store_true", help="list all bound ids and their parameters")
    _bound_flags(p)

    for name, helptext in (("generic", "exact Betti sum of a generic complete intersection"),
                           ("chi", "Euler characteristic and its conversion to the Betti sum")):
        p = sub.add_parser(name, help=helptext, allow_abbrev=False)
        _common(p)
        _family_flags(p)

    p = sub.add_parser("mixedvol", help="mixed volume of boxes or simplices, with the interpolation oracle",
                       allow_abbrev=False)
    _common(p)
    p.add_argument("--boxes", default=None)
    p.add_argument("--simplices", default=None, help="total degrees of full simplices (with --k)")
    p.add_argument("--k", default=None)
    p.add_argument("--mult", default=None, help="multiplicity of each body, e.g. 1,1")

    p = sub.add_parser("compare", help="compare bounds over a grid; adds a winner column", allow_abbrev=False)
    _common(p)
    p.add_argument("--ids", default=None, help="comma-separated bound ids")
    p.add_argument("--preset", choices=tuple(_PRESETS), default=None)
    _bound_flags(p)

    p = sub.add_parser("verify", help="run cross-check suites", allow_abbrev=False)
    _common(p)
    p.add_argument("--suite", default=None, help=f"one of {', '.join(SUITES)} or all")
    p.add_argument("--timing", action="store_true", default=None, help="print timings to stderr")

    p = sub.add_parser("asymptotic", help="leading-coefficient and quadrics growth tables", allow_abbrev=False)
    _common(p)
    p.add_argument("--report", choices=("leading", "quadrics"), default=None)
    p.add_argument("--l", default=None)
    p.add_argument("--k-max", default=None)
    return parser


_BUILTIN_DEFAULTS = {"format": "csv", "allow_large": False, "jobs": 1, "setting": "affine", "report": "leading",
                     "k_max": "40", "timing": False}


def _apply_config(args: argparse.Namespace) -> None:
    layers: list[dict] = []
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ShapeMismatchError(f"cannot read config {args.config}: {exc}") from None
        layers = [cfg.get(args.command, {}), cfg.get("defaults", {})]
    layers.append(_BUILTIN_DEFAULTS)
    for key in vars(args):
        if getattr(args, key) is not None or key in ("command", "config"):
            continue
        for layer in layers:
            # bound parameters may be given in a config either as "d" or as "p_d"
            plain = key[2:] if key.startswith("p_") else key
            for candidate in (key, plain, plain.replace("_", "-")):
                if candidate in layer:
                    val = layer[candidate]
                    setattr(args, key, val if isinstance(val, (bool, int)) and key in ("allow_large", "jobs", "timing")
                            else str(val))
                    break
            else:
                continue
            break


def _emit(table: Table, args) -> None:
    text = table.to_json() if args.format == "json" else table.to_csv()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


_COMMANDS = {
    "bound": cmd_bound,
    "generic": cmd_generic,
    "chi": cmd_chi,
    "mixedvol": cmd_mixedvol,
    "compare": cmd_compare,
    "verify": cmd_verify,
    "asymptotic": cmd_asymptotic,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _apply_config(args)
        result = _COMMANDS[args.command](args)
        table, code = result if isinstance(result, tuple) else (result, 0)
        _emit(table, args)
        return code
    except BettiBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
