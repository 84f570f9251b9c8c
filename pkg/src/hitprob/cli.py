"""Command-line interface: ``hitprob <command> ...``.

Exit status is 0 on success or match, 1 on a mismatch, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from math import comb
from typing import Any

from . import __version__
from .cache import ResultCache
from .fixtures import FixtureError, load_fixture, verify_fixture
from .gf2 import rank
from .hit import (
    ResourceLimitError,
    cohit_basis,
    cohit_to_json,
    omega_presentation,
    wood_vanishing,
)
from .invariants import gl_generators, invariant_polynomials, invariant_space, sym_generators
from .kameko import kameko_iso_predicate, kameko_matrix
from .monomials import (
    ContractError,
    Weight,
    alpha,
    deg_of_weight,
    format_monomial,
    format_weight,
    minimal_spike,
    monomials_of_weight,
    mu,
    mu_decomposition,
    parse_weight,
    weight_vector,
    weights_of_degree,
)
from .tables import InapplicableError, group_orders, sum_induction, table_mkr, table_mm

# targets above this many matrix columns need --allow-long
LONG_COLUMNS = 20_000

OK, MISMATCH, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def column_estimate(h: int, n: int, floor: Weight | None) -> int:
    """Matrix columns an elimination at (h, n) would use above the given weight floor."""
    if floor is None:
        return comb(n + h - 1, h - 1)
    return sum(len(monomials_of_weight(h, w)) for w in weights_of_degree(h, n) if w >= floor)


def _spike_floor(h: int, n: int) -> Weight | None:
    if wood_vanishing(h, n):
        return (h + 1,)
    return weight_vector(minimal_spike(n, h))


def _gate(columns: int, allow_long: bool, what: str) -> None:
    if columns > LONG_COLUMNS and not allow_long:
        raise UsageError(f"{what} needs {columns} columns (> {LONG_COLUMNS}); pass --allow-long to run it")


def _emit(args: argparse.Namespace, payload: dict, text: str, rows: list[list[Any]] | None = None) -> None:
    fmt = args.format or "text"
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in rows or [[k, v] for k, v in payload.items() if not isinstance(v, (list, dict))]:
            writer.writerow(row)
        print(buf.getvalue(), end="")
    else:
        print(text)


def _cache(args: argparse.Namespace) -> ResultCache:
    return ResultCache(enabled=not args.no_cache)


def cmd_mu(args: argparse.Namespace) -> int:
    n = args.n
    if n < 0:
        raise UsageError("n must be nonnegative")
    r = mu(n)
    payload = {"n": n, "mu": r, "alpha_n_plus_mu": alpha(n + r),
               "decomposition": mu_decomposition(n, r) if n > 0 else []}
    _emit(args, payload, f"mu({n}) = {r}" + (f"  ({n} = " + " + ".join(
        f"(2^{d}-1)" for d in payload["decomposition"]) + ")" if n > 0 else ""))
    return OK


def _stratum_job(job: tuple[int, int, Weight]) -> tuple[Weight, list]:
    h, n, w = job
    return w, omega_presentation(h, n, w).stratum_basis


def _cohit_payload(h: int, n: int, filters: bool, by_weight: bool, jobs: int) -> dict:
    if not by_weight:
        return cohit_to_json(cohit_basis(h, n, use_filters=filters), emit_monomials=True)
    if wood_vanishing(h, n):
        return {"h": h, "n": n, "dim": 0, "strata": []}
    floor = _spike_floor(h, n) if filters else ()
    work = [(h, n, w) for w in weights_of_degree(h, n) if w >= floor]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_stratum_job, work))
    else:
        results = [_stratum_job(j) for j in work]
    strata = [{"omega": format_weight(w), "dim": len(ms), "monomials": [format_monomial(m) for m in ms]}
              for w, ms in results if ms]
    return {"h": h, "n": n, "dim": sum(s["dim"] for s in strata), "strata": strata}


def cmd_cohit(args: argparse.Namespace) -> int:
    h, n = args.vars, args.degree
    if h < 1 or n < 0:
        raise UsageError("need --vars >= 1 and --degree >= 0")
    filters = not args.no_filters
    columns = column_estimate(h, n, _spike_floor(h, n) if filters else None)
    _gate(columns, args.allow_long, f"cohit at h={h}, n={n}")
    key = {"cmd": "cohit", "h": h, "n": n, "filters": filters, "by_weight": bool(args.by_weight)}
    payload = _cache(args).get_or_compute(key, lambda: _cohit_payload(h, n, filters, args.by_weight, args.jobs))
    if not args.emit_monomials:
        payload = {**payload, "strata": [{k: v for k, v in s.items() if k != "monomials"} for s in payload["strata"]]}
    lines = [f"dim QP_{n} in {h} variables = {payload['dim']}"]
    for s in payload["strata"]:
        lines.append(f"  omega ({s['omega']}): {s['dim']}")
        for m in s.get("monomials", []):
            lines.append(f"    {m}")
    rows = [["h", "n", "omega", "dim"]] + [[h, n, s["omega"], s["dim"]] for s in payload["strata"]]
    rows.append([h, n, "total", payload["dim"]])
    _emit(args, payload, "\n".join(lines), rows)
    return OK


def cmd_kameko(args: argparse.Namespace) -> int:
    h, big = args.vars, args.degree
    if h < 1 or big < h or (big - h) % 2:
        raise UsageError(f"degree {big} is not of the form 2m + {h}")
    m = (big - h) // 2
    _gate(column_estimate(h, big, _spike_floor(h, big)), args.allow_long, f"Kameko map at h={h}, n={big}")
    source, target = cohit_basis(h, big), cohit_basis(h, m)
    mat = kameko_matrix(h, m, source, target)
    r = rank(mat)
    iso = kameko_iso_predicate(h, big)
    payload = {"h": h, "degree": big, "target_degree": m, "source_dim": source.dim, "target_dim": target.dim,
               "rank": r, "kernel_dim": source.dim - r, "iso_predicate": iso, "surjective": r == target.dim}
    consistent = payload["surjective"] and (not iso or payload["kernel_dim"] == 0)
    payload["consistent"] = consistent
    text = (f"Kameko QP_{big} -> QP_{m} ({h} variables): {source.dim} -> {target.dim}, rank {r}, "
            f"kernel {source.dim - r}, mu({big}) = {mu(big)}, isomorphism predicted: {iso}")
    _emit(args, payload, text)
    return OK if consistent else MISMATCH


def cmd_invariants(args: argparse.Namespace) -> int:
    h, n = args.vars, args.degree
    omega = parse_weight(args.weight)
    if deg_of_weight(omega) != n:
        raise UsageError(f"weight {args.weight} has degree {deg_of_weight(omega)}, not {n}")
    _gate(column_estimate(h, n, omega), args.allow_long, f"stratum ({args.weight}) at h={h}, n={n}")
    key = {"cmd": "invariants", "h": h, "n": n, "omega": list(omega), "group": args.group}

    def compute() -> dict:
        p = omega_presentation(h, n, omega)
        gens = sym_generators(h) if args.group == "sym" else gl_generators(h)
        vecs = invariant_space(p, gens, nested=not args.flat)
        polys = invariant_polynomials(p, vecs)
        return {"h": h, "n": n, "omega": format_weight(omega), "group": args.group, "dim": len(vecs),
                "stratum_dim": p.dim,
                "invariants": [[format_monomial(m) for m in poly] for poly in polys]}

    payload = _cache(args).get_or_compute(key, compute)
    lines = [f"{'Sigma' if args.group == 'sym' else 'GL'}_{h}-invariants of QP_{n}({payload['omega']}): "
             f"dim {payload['dim']} (stratum dim {payload['stratum_dim']})"]
    for i, poly in enumerate(payload["invariants"], 1):
        lines.append(f"  [{i}] {len(poly)} terms: " + " + ".join(poly[:6]) + (" + ..." if len(poly) > 6 else ""))
    _emit(args, payload, "\n".join(lines))
    return OK


def cmd_tables(args: argparse.Namespace) -> int:
    suite = args.suite
    if suite in ("mm", "mkr"):
        rows = table_mm(args.max_vars) if suite == "mm" else table_mkr(args.max_vars)
        payload = {"suite": suite, "rows": [{"h": r.h, "n": r.n, "formula": r.formula, "computed": r.computed,
                                             "match": r.match} for r in rows]}
        ok = all(r.match for r in rows)
        text = "\n".join([f"{'n':>3} {'h':>3} {'formula':>8} {'computed':>9}  match"] +
                         [f"{r.n:>3} {r.h:>3} {r.formula:>8} {r.computed:>9}  {'yes' if r.match else 'NO'}" for r in rows])
        table = [["n", "h", "formula", "computed", "match"]] + [[r.n, r.h, r.formula, r.computed, r.match] for r in rows]
    elif suite == "induction":
        cases = [(args.vars_h, args.r, args.s)] if args.r is not None else [(3, 1, 2), (3, 1, 3)]
        checks = []
        for h, r, s in cases:
            try:
                checks.append(sum_induction(h, r, s))
            except InapplicableError as exc:
                raise UsageError(f"induction inapplicable: {exc}") from None
        ok = all(c.holds for c in checks)
        payload = {"suite": suite, "rows": [{"h": c.h, "r": c.r, "s": c.s, "n": c.n, "dim_n": c.big,
                                             "dim_r": c.small, "factor": 2 ** c.h - 1, "holds": c.holds}
                                            for c in checks]}
        text = "\n".join(f"h={c.h} r={c.r} s={c.s}: dim QP_{c.n} = {c.big}, "
                         f"{2 ** c.h - 1} * dim QP_{c.r} (h={c.h - 1}) = {(2 ** c.h - 1) * c.small}  "
                         f"{'holds' if c.holds else 'FAILS'}" for c in checks)
        table = [["h", "r", "s", "n", "dim_n", "dim_r", "holds"]] + [[c.h, c.r, c.s, c.n, c.big, c.small, c.holds]
                                                                      for c in checks]
    else:
        recs = [group_orders(h, args.q) for h in range(1, args.max_vars + 1)]
        ok = True
        payload = {"suite": suite, "rows": [vars(g) for g in recs]}
        text = "\n".join(f"h={g.h} q={g.q}: |GL|={g.gl} |B|={g.borel} |B*|={g.unipotent} |GL/B*|={g.gl_over_unipotent}"
                         for g in recs)
        table = [["h", "q", "gl", "borel", "unipotent", "gl_over_unipotent"]] + [
            [g.h, g.q, g.gl, g.borel, g.unipotent, g.gl_over_unipotent] for g in recs]
    payload["match"] = ok
    _emit(args, payload, text, table)
    return OK if ok else MISMATCH


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        fx = load_fixture(args.fixture)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    floor = fx.omega if fx.omega is not None else _spike_floor(fx.h, fx.n)
    _gate(column_estimate(fx.h, fx.n, floor), args.allow_long, f"fixture {args.fixture}")
    report = verify_fixture(fx)
    payload = {"fixture": args.fixture, **report.to_json()}
    lines = [f"{args.fixture}: {report.summary()}"]
    lines += [f"  missing {format_monomial(m)}" for m in report.missing]
    lines += [f"  extra   {format_monomial(m)}" for m in report.extra]
    lines += [f"  note: {note}" for note in report.notes]
    _emit(args, payload, "\n".join(lines))
    return OK if report.matched else MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default=argparse.SUPPRESS)
    common.add_argument("--no-cache", action="store_true", default=argparse.SUPPRESS,
                        help="ignore and do not write the result cache")

    parser = argparse.ArgumentParser(prog="hitprob", description="Admissible monomials and cohit spaces over GF(2).")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--format", choices=["json", "csv", "text"], default=None)
    parser.add_argument("--no-cache", action="store_true", default=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mu", parents=[common], help="mu(n) and its decomposition")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("cohit", parents=[common], help="admissible basis of QP_n")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--by-weight", action="store_true", help="compute stratum by stratum")
    p.add_argument("--emit-monomials", action="store_true")
    p.add_argument("--no-filters", action="store_true", help="eliminate over every monomial")
    p.add_argument("--allow-long", action="store_true")
    p.add_argument("--jobs", type=int, default=1, help="parallel stratum jobs with --by-weight")
    p.set_defaults(func=cmd_cohit)

    p = sub.add_parser("kameko", parents=[common], help="Kameko map QP_n -> QP_(n-h)/2")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--allow-long", action="store_true")
    p.set_defaults(func=cmd_kameko)

    p = sub.add_parser("invariants", parents=[common], help="invariants of one weight stratum")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--group", choices=["sym", "gl"], default="sym")
    p.add_argument("--flat", action="store_true", help="solve all generators at once instead of nesting")
    p.add_argument("--allow-long", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("tables", parents=[common], help="closed formulas against computed dimensions")
    p.add_argument("--suite", choices=["mm", "mkr", "induction", "orders"], required=True)
    p.add_argument("--max-vars", type=int, default=6)
    p.add_argument("--q", type=int, default=2, help="field size for --suite orders")
    p.add_argument("--vars", dest="vars_h", type=int, default=3, help="h for a single induction case")
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--s", type=int, default=2)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", parents=[common], help="check a fixture file")
    p.add_argument("fixture")
    p.add_argument("--allow-long", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ContractError, FixtureError, ResourceLimitError) as exc:
        print(f"hitprob: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
