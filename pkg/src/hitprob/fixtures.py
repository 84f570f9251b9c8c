"""Plain-text fixtures of admissible sets and invariant polynomials, and their verification.

Format::

    h 6
    n 26
    omega 4,5,3            (optional)
    kind admissible        (or: invariant)
    part zero              (optional: all | zero | positive, admissible only)
    group sym              (optional: sym | gl, invariant only)
    m 1,2,2,7,7,7          (one line per monomial)

Invariant polynomials are blocks of ``m`` lines separated by blank lines.
Lines starting with ``#`` are comments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .gf2 import Echelon
from .hit import cohit_basis, omega_presentation, positive_zero_split, reduce_mod_omega
from .invariants import action_matrix, gl_generators, invariant_space, sym_generators
from .monomials import (
    ContractError,
    Monomial,
    Weight,
    deg_of_weight,
    format_monomial,
    format_weight,
    parse_monomial,
    parse_weight,
    weight_vector,
)


class FixtureError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<fixture>"):
        self.line = line
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")


@dataclass
class Fixture:
    h: int
    n: int
    kind: str
    omega: Weight | None = None
    part: str = "all"
    group: str = "sym"
    monomials: list[Monomial] = field(default_factory=list)
    polynomials: list[list[Monomial]] = field(default_factory=list)


_HEADERS = ("h", "n", "omega", "kind", "part", "group")


def parse_fixture(text: str, source: str = "<fixture>") -> Fixture:
    head: dict[str, str] = {}
    blocks: list[list[Monomial]] = [[]]
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            if blocks[-1]:
                blocks.append([])
            continue
        key, _, value = line.partition(" ")
        value = value.strip()
        if key == "m":
            try:
                m = parse_monomial(value)
            except ContractError as exc:
                raise FixtureError(str(exc), lineno, source) from None
            if "h" not in head or "n" not in head:
                raise FixtureError("monomial before the h and n headers", lineno, source)
            h, n = int(head["h"]), int(head["n"])
            if len(m) != h:
                raise FixtureError(f"monomial has {len(m)} exponents, expected {h}", lineno, source)
            if sum(m) != n:
                raise FixtureError(f"monomial has degree {sum(m)}, expected {n}", lineno, source)
            if head.get("kind") == "admissible" and "omega" in head and weight_vector(m) != parse_weight(head["omega"]):
                raise FixtureError(f"monomial weight {format_weight(weight_vector(m))} differs from omega", lineno, source)
            blocks[-1].append(m)
        elif key in _HEADERS:
            if key in head:
                raise FixtureError(f"duplicate header {key!r}", lineno, source)
            if key in ("h", "n") and not value.isdigit():
                raise FixtureError(f"{key} needs a nonnegative integer, got {value!r}", lineno, source)
            if key == "kind" and value not in ("admissible", "invariant"):
                raise FixtureError(f"unknown kind {value!r}", lineno, source)
            if key == "part" and value not in ("all", "zero", "positive"):
                raise FixtureError(f"unknown part {value!r}", lineno, source)
            if key == "group" and value not in ("sym", "gl"):
                raise FixtureError(f"unknown group {value!r}", lineno, source)
            if key == "omega":
                try:
                    parse_weight(value)
                except ContractError as exc:
                    raise FixtureError(str(exc), lineno, source) from None
            head[key] = value
        else:
            raise FixtureError(f"unrecognised line {line!r}", lineno, source)
    for key in ("h", "n", "kind"):
        if key not in head:
            raise FixtureError(f"missing header {key!r}", None, source)
    blocks = [b for b in blocks if b]
    fx = Fixture(int(head["h"]), int(head["n"]), head["kind"],
                 parse_weight(head["omega"]) if "omega" in head else None,
                 head.get("part", "all"), head.get("group", "sym"))
    if fx.omega is not None and deg_of_weight(fx.omega) != fx.n:
        raise FixtureError(f"omega has degree {deg_of_weight(fx.omega)}, expected {fx.n}", None, source)
    if fx.kind == "admissible":
        fx.monomials = [m for b in blocks for m in b]
    else:
        if fx.omega is None:
            raise FixtureError("invariant fixtures need an omega header", None, source)
        fx.polynomials = blocks
    return fx


def load_fixture(path: str | Path) -> Fixture:
    path = Path(path)
    return parse_fixture(path.read_text(), str(path))


def dump_fixture(fx: Fixture) -> str:
    lines = [f"h {fx.h}", f"n {fx.n}"]
    if fx.omega is not None:
        lines.append(f"omega {format_weight(fx.omega)}")
    lines.append(f"kind {fx.kind}")
    if fx.kind == "admissible":
        if fx.part != "all":
            lines.append(f"part {fx.part}")
        lines += [f"m {format_monomial(m)}" for m in fx.monomials]
    else:
        lines.append(f"group {fx.group}")
        for poly in fx.polynomials:
            lines.append("")
            lines += [f"m {format_monomial(m)}" for m in poly]
    return "\n".join(lines) + "\n"


@dataclass
class VerifyReport:
    kind: str
    expected: int
    computed: int
    matched: bool
    mismatch: str | None = None  # "dimension", "set", "span" or "not-invariant"
    missing: list[Monomial] = field(default_factory=list)
    extra: list[Monomial] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def summary(self) -> str:
        if self.matched:
            return f"{self.kind}: {self.expected}/{self.computed} matched"
        return f"{self.kind}: {self.mismatch} mismatch (fixture {self.expected}, computed {self.computed})"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "expected": self.expected,
            "computed": self.computed,
            "matched": self.matched,
            "mismatch": self.mismatch,
            "missing": [format_monomial(m) for m in self.missing],
            "extra": [format_monomial(m) for m in self.extra],
            "notes": self.notes,
        }


def _select(monomials: list[Monomial], part: str) -> list[Monomial]:
    zero, positive = positive_zero_split(monomials)
    return {"all": monomials, "zero": zero, "positive": positive}[part]


def verify_fixture(source: str | Path | Fixture) -> VerifyReport:
    fx = source if isinstance(source, Fixture) else load_fixture(source)
    if fx.kind == "admissible":
        if fx.omega is not None:
            computed = omega_presentation(fx.h, fx.n, fx.omega).stratum_basis
        else:
            computed = cohit_basis(fx.h, fx.n).admissible
        computed = _select(computed, fx.part)
        want, got = set(fx.monomials), set(computed)
        report = VerifyReport("admissible", len(want), len(got), want == got,
                              missing=sorted(want - got), extra=sorted(got - want))
        if len(want) != len(fx.monomials):
            report.notes.append("fixture lists a monomial more than once")
        if not report.matched:
            report.mismatch = "dimension" if len(want) != len(got) else "set"
            if report.mismatch == "set":
                report.notes.append("same dimension, different representatives")
        return report

    p = omega_presentation(fx.h, fx.n, fx.omega)
    gens = sym_generators(fx.h) if fx.group == "sym" else gl_generators(fx.h)
    matrices = {d: action_matrix(d, p) for d in gens}
    space = invariant_space(p, gens, matrices=matrices)
    vectors = [reduce_mod_omega(poly, p) for poly in fx.polynomials]
    report = VerifyReport("invariant", 0, len(space), False)
    for i, v in enumerate(vectors, 1):
        for d in gens:
            if matrices[d].apply(v) != v:
                report.notes.append(f"polynomial {i} is not fixed by generator {d}")
                break
    fixture_span = Echelon(p.dim)
    for v in vectors:
        fixture_span.insert(v)
    report.expected = len(fixture_span)
    if report.notes:
        report.mismatch = "not-invariant"
    elif len(fixture_span) != len(space):
        report.mismatch = "dimension"
    elif not all(fixture_span.contains(v) for v in space):
        report.mismatch = "span"
    else:
        report.matched = True
    return report
