"""Kameko's squaring map QP_{2m+h} -> QP_m and its section psi."""

from __future__ import annotations

from .gf2 import GF2Matrix, rank
from .hit import CohitBasis, cohit_basis
from .monomials import ContractError, Monomial, mu


def kameko_down_monomial(m: Monomial) -> Monomial | None:
    """t_1...t_h y^2 -> y when every exponent is odd, otherwise None (the class maps to 0)."""
    if any(a & 1 == 0 for a in m):
        return None
    return tuple(a >> 1 for a in m)


def kameko_up(m: Monomial) -> Monomial:
    return tuple(2 * a + 1 for a in m)


def kameko_up_iterated(m: Monomial, times: int) -> Monomial:
    for _ in range(times):
        m = kameko_up(m)
    return m


def kameko_iso_predicate(h: int, big_degree: int) -> bool:
    if big_degree < h or (big_degree - h) % 2:
        raise ContractError(f"{big_degree} is not of the form 2m + {h}")
    return mu(big_degree) == h


def kameko_matrix(h: int, m: int, source: CohitBasis | None = None,
                  target: CohitBasis | None = None) -> GF2Matrix:
    """Matrix of the down map on admissible bases.

    Rows follow the degree-m admissible basis, columns the degree-(2m+h) one.
    """
    source = source or cohit_basis(h, 2 * m + h)
    target = target or cohit_basis(h, m)
    position = {u: i for i, u in enumerate(target.admissible)}
    columns = []
    for u in source.admissible:
        y = kameko_down_monomial(u)
        col = 0
        if y is not None:
            for z in target.normal_form([y]).terms:
                col |= 1 << position[z]
        columns.append(col)
    return GF2Matrix.from_columns(target.dim, columns)


def kameko_kernel_dim(h: int, m: int) -> int:
    mat = kameko_matrix(h, m)
    return mat.ncols - rank(mat)
