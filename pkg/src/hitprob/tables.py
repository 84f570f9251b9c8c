"""Closed-form dimension formulas checked against elimination, and group orders."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod

from .hit import cohit_basis
from .monomials import alpha, mu

# dim QP_n in h variables = sum_j coeff_j * C(h, j), for 1 <= n <= 9
LOW_DEGREE_COEFFS: dict[int, dict[int, int]] = {
    1: {1: 1},
    2: {2: 1},
    3: {1: 1, 2: 1, 3: 1},
    4: {2: 2, 3: 2, 4: 1},
    5: {3: 3, 4: 3, 5: 1},
    6: {2: 1, 3: 3, 4: 6, 5: 4, 6: 1},
    7: {1: 1, 2: 1, 3: 4, 4: 9, 5: 10, 6: 5, 7: 1},
    8: {2: 3, 3: 6, 4: 13, 5: 19, 6: 15, 7: 6, 8: 1},
    9: {3: 7, 4: 18, 5: 31, 6: 34, 7: 21, 8: 7, 9: 1},
}

DEGREE_TEN_COEFFS = {2: 2, 3: 8, 4: 26, 5: 50, 6: 65, 7: 55, 8: 28, 9: 8, 10: 1}


class InapplicableError(ValueError):
    pass


def binomial_sum(coeffs: dict[int, int], h: int) -> int:
    # math.comb already returns 0 when j > h
    return sum(c * comb(h, j) for j, c in coeffs.items())


def low_degree_formula(h: int, n: int) -> int:
    return binomial_sum(LOW_DEGREE_COEFFS[n], h)


@dataclass
class TableRow:
    h: int
    n: int
    formula: int
    computed: int

    @property
    def match(self) -> bool:
        return self.formula == self.computed


def table_mm(h_max: int) -> list[TableRow]:
    if h_max < 1:
        raise ValueError("h_max must be at least 1")
    return [TableRow(h, n, low_degree_formula(h, n), cohit_basis(h, n).dim)
            for n in range(1, 10) for h in range(1, h_max + 1)]


def table_mkr(h_max: int) -> list[TableRow]:
    if h_max < 1:
        raise ValueError("h_max must be at least 1")
    return [TableRow(h, 10, binomial_sum(DEGREE_TEN_COEFFS, h), cohit_basis(h, 10).dim)
            for h in range(1, h_max + 1)]


@dataclass
class InductionCheck:
    h: int
    r: int
    s: int
    n: int
    big: int
    small: int

    @property
    def holds(self) -> bool:
        return self.big == (2 ** self.h - 1) * self.small


def induction_degree(h: int, r: int, s: int) -> int:
    return (h - 1) * (2 ** s - 1) + r * 2 ** s


def sum_induction(h: int, r: int, s: int) -> InductionCheck:
    """dim QP_n in h variables against (2^h - 1) dim QP_r in h-1 variables.

    The lower bound on mu(r) is h-3; h = 3 is admitted (see the project notes).
    """
    m = mu(r)
    if r < 1 or s < 1 or s < h - 1:
        raise InapplicableError(f"need positive r and s >= h-1 (h={h}, r={r}, s={s})")
    if not (0 <= h - 3 <= m <= h - 2) or m != alpha(r + m):
        raise InapplicableError(f"mu({r})={m} outside [h-3, h-2] or differs from alpha({r + m})")
    n = induction_degree(h, r, s)
    return InductionCheck(h, r, s, n, cohit_basis(h, n).dim, cohit_basis(h - 1, r).dim)


def check_sum_induction(h: int, r: int, s: int) -> bool:
    return sum_induction(h, r, s).holds


@dataclass
class GroupOrders:
    h: int
    q: int
    gl: int
    borel: int
    unipotent: int
    gl_over_unipotent: int


def group_orders(h: int, q: int) -> GroupOrders:
    if h < 1 or q < 2:
        raise ValueError("need h >= 1 and q >= 2")
    top = q ** comb(h, 2)
    quotient = prod(q ** j - 1 for j in range(1, h + 1))
    return GroupOrders(h, q, top * quotient, top * (q - 1) ** h, top, quotient)
