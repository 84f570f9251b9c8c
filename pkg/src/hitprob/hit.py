"""Admissible monomial bases of the cohit spaces QP_n in h variables.

Columns are indexed by monomials in ascending order, so the highest set bit of a
row is its largest monomial. Echelonizing on the highest bit is elimination in
descending monomial order, and the admissible monomials are the non-pivots.

Two sound shortcuts are on by default:

* every monomial whose weight is below that of the minimal spike is hit, so
  those columns are dropped (equivalent to adjoining them as relations);
* Sq^k never creates odd exponents, so sources with too few odd exponents can
  only produce dropped columns and are skipped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from itertools import combinations
from typing import Iterable, Iterator

from .gf2 import Echelon, bits_ascending
from .monomials import (
    ContractError,
    Monomial,
    Polynomial,
    Weight,
    _compositions,
    deg_of_weight,
    format_monomial,
    format_weight,
    minimal_spike,
    monomials_of_weight,
    mu,
    order_key,
    weight_vector,
    weights_of_degree,
)
from .steenrod import sq_monomial, square_degrees

DEFAULT_COLUMN_CAP = 300_000


class ResourceLimitError(RuntimeError):
    pass


class FilterInapplicable(ValueError):
    pass


class OutsideStratumError(ValueError):
    pass


def wood_vanishing(h: int, n: int) -> bool:
    return mu(n) > h


def singer_hit_filter(m: Monomial) -> bool:
    """True when m has smaller weight than the minimal spike of its degree, hence is hit."""
    n, h = sum(m), len(m)
    if mu(n) > h:
        raise FilterInapplicable(f"no spike in degree {n} for h={h}")
    return weight_vector(m) < weight_vector(minimal_spike(n, h))


def _columns_at_least(h: int, n: int, floor: Weight) -> list[Monomial]:
    cols: list[Monomial] = []
    for w in weights_of_degree(h, n):
        if w >= floor:
            cols.extend(monomials_of_weight(h, w))
    cols.sort(key=order_key)
    return cols


def _sources(h: int, d: int, min_odd: int) -> Iterator[Monomial]:
    """Degree-d monomials with at least min_odd odd exponents, as t_S * g^2 by odd set S."""
    if min_odd <= 0:
        yield from _compositions(d, h)
        return
    for s in range(min_odd, min(h, d) + 1):
        if (d - s) % 2:
            continue
        halves = list(_compositions((d - s) // 2, h))
        for odd in combinations(range(h), s):
            flags = [0] * h
            for j in odd:
                flags[j] = 1
            for g in halves:
                yield tuple(2 * b + f for b, f in zip(g, flags))


def _eliminate(h: int, n: int, index: dict[Monomial, int], min_odd: int,
               all_squares: bool = False) -> Echelon:
    ech = Echelon(len(index))
    if n < 1:
        return ech
    for k in square_degrees(n, all_squares):
        for m in _sources(h, n - k, min_odd):
            row = 0
            for t in sq_monomial(k, m, min_odd):
                i = index.get(t)
                if i is not None:
                    row |= 1 << i
            if row:
                ech.insert(row)
    return ech


def _check_cap(count: int, cap: int | None) -> None:
    if cap is not None and count > cap:
        raise ResourceLimitError(f"{count} columns exceed the cap of {cap}; compute per weight stratum instead")


@dataclass
class CohitBasis:
    """Admissible basis of QP_n together with the echelonized hit space.

    ``columns`` lists the monomials the echelon covers, ascending. Monomials of
    weight below ``floor`` are hit and carry no column.
    """

    h: int
    n: int
    admissible: list[Monomial]
    columns: list[Monomial]
    hit_echelon: Echelon
    floor: Weight = ()
    index: dict[Monomial, int] = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.admissible)

    def vector(self, monomials: Iterable[Monomial]) -> int:
        v = 0
        for m in monomials:
            i = self.index.get(m)
            if i is None:
                if len(m) != self.h or sum(m) != self.n:
                    raise ContractError(f"{m} is not a degree-{self.n} monomial in {self.h} variables")
                continue
            v ^= 1 << i
        return v

    def normal_form(self, f: Polynomial | Iterable[Monomial]) -> Polynomial:
        """The unique sum of admissible monomials congruent to f modulo hit elements."""
        terms = f.terms if isinstance(f, Polynomial) else f
        residue = self.hit_echelon.reduce(self.vector(terms))
        return Polynomial._trusted(self.h, self.n, frozenset(self.columns[i] for i in bits_ascending(residue)))

    def is_hit(self, f: Polynomial | Iterable[Monomial]) -> bool:
        terms = f.terms if isinstance(f, Polynomial) else f
        return self.hit_echelon.reduce(self.vector(terms)) == 0


def cohit_basis(h: int, n: int, *, use_filters: bool = True, all_squares: bool = False,
                column_cap: int | None = DEFAULT_COLUMN_CAP) -> CohitBasis:
    if h < 1 or n < 0:
        raise ContractError("need h >= 1 and n >= 0")
    if wood_vanishing(h, n):
        return CohitBasis(h, n, [], [], Echelon(0).finalize(), floor=(h + 1,))
    if use_filters:
        floor = weight_vector(minimal_spike(n, h))
        _check_cap(sum(len(monomials_of_weight(h, w)) for w in weights_of_degree(h, n) if w >= floor), column_cap)
        columns = _columns_at_least(h, n, floor)
    else:
        floor = ()
        _check_cap(comb(n + h - 1, h - 1), column_cap)
        columns = sorted(_compositions(n, h), key=order_key)
    index = {m: i for i, m in enumerate(columns)}
    ech = _eliminate(h, n, index, floor[0] if floor else 0, all_squares)
    ech.finalize()
    free = ((1 << len(columns)) - 1) & ~ech.pivot_mask
    admissible = [columns[i] for i in bits_ascending(free)]
    return CohitBasis(h, n, admissible, columns, ech, floor, index)


def stratify(b: CohitBasis | Iterable[Monomial]) -> dict[Weight, list[Monomial]]:
    strata: dict[Weight, list[Monomial]] = {}
    for m in (b.admissible if isinstance(b, CohitBasis) else b):
        strata.setdefault(weight_vector(m), []).append(m)
    return dict(sorted(strata.items()))


def has_zero(m: Monomial) -> bool:
    return 0 in m


def positive_zero_split(b: CohitBasis | Iterable[Monomial]) -> tuple[list[Monomial], list[Monomial]]:
    monomials = b.admissible if isinstance(b, CohitBasis) else list(b)
    zero = [m for m in monomials if has_zero(m)]
    positive = [m for m in monomials if not has_zero(m)]
    return zero, positive


@dataclass
class QuotientPresentation:
    """The stratum QP_n(omega): weight-omega monomials modulo hit elements of
    P_n(omega) and everything of lower weight.

    ``block`` holds every weight-omega monomial; ``omega_hit_echelon`` lives on
    the block's coordinates (bit i is block[i]).
    """

    h: int
    n: int
    omega: Weight
    stratum_basis: list[Monomial]
    block: list[Monomial]
    omega_hit_echelon: Echelon
    columns: list[Monomial] = field(repr=False)
    index: dict[Monomial, int] = field(repr=False)
    upper_echelon: Echelon = field(repr=False)
    block_start: int = 0
    candidates: list[Monomial] | None = None

    @property
    def dim(self) -> int:
        return len(self.stratum_basis)

    def __post_init__(self) -> None:
        pos = {m: i for i, m in enumerate(self.block)}
        self._basis_position = {pos[m]: j for j, m in enumerate(self.stratum_basis)}

    def polynomial(self, coords: int) -> Polynomial:
        return Polynomial._trusted(self.h, self.n, frozenset(self.stratum_basis[j] for j in bits_ascending(coords)))


def _kameko_candidates(h: int, n: int, omega: Weight) -> tuple[set[Monomial], dict[Monomial, list[Monomial]]] | None:
    """Candidates t_S y^2 with y admissible, plus substitutions for the other block monomials.

    For a block monomial x = t_S y^2 with y inadmissible, y is congruent to its
    normal form z_1 + ... (smaller admissibles), and x is congruent to the sum of
    t_S z_i^2 modulo hit elements and lower odd-exponent counts.
    """
    s = omega[0] if omega else 0
    if (n - s) % 2:
        return None
    lower = cohit_basis(h, (n - s) // 2)
    admissible = set(lower.admissible)
    tail = tuple(omega[1:])
    candidates: set[Monomial] = set()
    substitutes: dict[Monomial, list[Monomial]] = {}
    for x in monomials_of_weight(h, omega):
        odd = [a & 1 for a in x]
        y = tuple(a >> 1 for a in x)
        if y in admissible:
            candidates.add(x)
            continue
        nf = lower.normal_form([y])
        substitutes[x] = [tuple(2 * b + o for b, o in zip(z, odd)) for z in nf.terms if weight_vector(z) == tail]
    return candidates, substitutes


def omega_presentation(h: int, n: int, omega: Iterable[int], *, kameko_shortcut: bool = False,
                       column_cap: int | None = DEFAULT_COLUMN_CAP) -> QuotientPresentation:
    omega = tuple(omega)
    if deg_of_weight(omega) != n:
        raise ContractError(f"weight {omega} has degree {deg_of_weight(omega)}, not {n}")
    if omega and omega[-1] == 0:
        raise ContractError("weight vectors must be given without trailing zeros")
    higher = [w for w in weights_of_degree(h, n) if w > omega]
    block = monomials_of_weight(h, omega)
    _check_cap(len(block) + sum(len(monomials_of_weight(h, w)) for w in higher), column_cap)
    columns = _columns_at_least(h, n, omega)
    index = {m: i for i, m in enumerate(columns)}
    ech = _eliminate(h, n, index, omega[0] if omega else 0)
    start, end = 0, len(block)
    if block:
        start = index[block[0]]
        end = start + len(block)
    block_mask = (1 << len(block)) - 1
    block_ech = Echelon(len(block))
    upper = Echelon(len(columns))
    for p, row in ech.rows.items():
        if p >= end:
            upper.rows[p] = row
            upper.pivot_mask |= 1 << p
        elif p >= start:
            block_ech.insert((row >> start) & block_mask)
    upper.reduced = False

    cand_list = None
    if kameko_shortcut and block:
        found = _kameko_candidates(h, n, omega)
        if found is not None:
            cands, subs = found
            pos = {m: i for i, m in enumerate(block)}
            subs_bits = {pos[x]: sum(1 << pos[z] for z in zs) for x, zs in subs.items()}
            non_cand = sum(1 << i for i in subs_bits)
            pruned = Echelon(len(block))
            for row in block_ech.rows.values():
                rest = row & non_cand
                row ^= rest
                for i in bits_ascending(rest):
                    row ^= subs_bits[i]
                pruned.insert(row)
            # every non-candidate is a pivot through its substitution relation
            for i, zs in subs_bits.items():
                pruned.rows[i] = (1 << i) | zs
                pruned.pivot_mask |= 1 << i
            pruned.reduced = False
            block_ech = pruned
            cand_list = sorted(cands, key=order_key)
    block_ech.finalize()
    free = block_mask & ~block_ech.pivot_mask
    basis = [block[i] for i in bits_ascending(free)]
    if cand_list is not None and not set(basis) <= set(cand_list):
        raise AssertionError("an admissible monomial fell outside the Kameko candidates")
    return QuotientPresentation(h, n, omega, basis, block, block_ech, columns, index, upper, start, cand_list)


def reduce_mod_omega(f: Polynomial | Iterable[Monomial], p: QuotientPresentation) -> int:
    """Coordinates of f in QP_n(omega) as a bitset over p.stratum_basis.

    Lower-weight monomials are dropped. Higher-weight monomials must cancel
    against hit elements; otherwise f does not lie in P_n(omega).
    """
    terms = f.terms if isinstance(f, Polynomial) else f
    v = 0
    for m in terms:
        i = p.index.get(m)
        if i is None:
            if len(m) != p.h or sum(m) != p.n:
                raise ContractError(f"{m} is not a degree-{p.n} monomial in {p.h} variables")
            continue
        v ^= 1 << i
    end = p.block_start + len(p.block)
    rows = p.upper_echelon.rows
    while v >> end:
        top = v.bit_length() - 1
        r = rows.get(top)
        if r is None:
            raise OutsideStratumError(
                f"monomial {p.columns[top]} of weight {weight_vector(p.columns[top])} "
                f"survives: outside P_n({','.join(map(str, p.omega))})")
        v ^= r
    w = p.omega_hit_echelon.reduce((v >> p.block_start) & ((1 << len(p.block)) - 1))
    out = 0
    for i in bits_ascending(w):
        out |= 1 << p._basis_position[i]
    return out


def zero_part_crosscheck(h: int, n: int, omega: Iterable[int]) -> bool:
    """Zero-part stratum dim equals sum_k C(h,k) times the positive-part stratum dim in k variables."""
    omega = tuple(omega)
    zero, _ = positive_zero_split(omega_presentation(h, n, omega).stratum_basis)
    total = 0
    for k in range(1, h):
        if any(c > k for c in omega) or wood_vanishing(k, n):
            continue
        _, pos = positive_zero_split(omega_presentation(k, n, omega).stratum_basis)
        total += comb(h, k) * len(pos)
    return len(zero) == total


def cohit_to_json(b: CohitBasis, emit_monomials: bool = False) -> dict:
    strata = []
    for w, ms in stratify(b).items():
        entry: dict = {"omega": format_weight(w), "dim": len(ms)}
        if emit_monomials:
            entry["monomials"] = [format_monomial(m) for m in ms]
        strata.append(entry)
    return {"h": b.h, "n": b.n, "dim": b.dim, "strata": strata}
