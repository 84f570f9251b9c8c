"""Action of the generators sigma_1..sigma_h of GL_h on a weight stratum, and fixed points.

sigma_d swaps t_d and t_{d+1} for d < h; sigma_h sends t_1 to t_1 + t_2.
"""

from __future__ import annotations

from typing import Iterable

from .gf2 import GF2Matrix, bits_ascending, kernel_basis
from .hit import QuotientPresentation, reduce_mod_omega
from .monomials import ContractError, Monomial, Polynomial
from .steenrod import binom_mod2


def sigma_monomial(d: int, m: Monomial) -> list[Monomial]:
    h = len(m)
    if not 1 <= d <= h:
        raise ContractError(f"generator index {d} outside [1, {h}]")
    if d < h:
        out = list(m)
        out[d - 1], out[d] = out[d], out[d - 1]
        return [tuple(out)]
    if h < 2:
        raise ContractError("the transvection needs at least two variables")
    a, b = m[0], m[1]
    rest = m[2:]
    # (t1 + t2)^a keeps the terms t1^(a-k) t2^k with k a bit-submask of a
    return [(a - k, b + k) + rest for k in range(a + 1) if binom_mod2(a, k)]


def sigma_apply(d: int, f: Polynomial) -> Polynomial:
    acc: set[Monomial] = set()
    for m in f.terms:
        acc.symmetric_difference_update(sigma_monomial(d, m))
    return Polynomial._trusted(f.h, f.n, frozenset(acc))


def sym_generators(h: int) -> list[int]:
    return list(range(1, h))


def gl_generators(h: int) -> list[int]:
    return list(range(1, h + 1))


def action_matrix(d: int, p: QuotientPresentation) -> GF2Matrix:
    """Column j is the class of sigma_d applied to the j-th stratum basis monomial."""
    columns = [reduce_mod_omega(sigma_monomial(d, m), p) for m in p.stratum_basis]
    return GF2Matrix.from_columns(p.dim, columns)


def _fixed_space(matrices: list[GF2Matrix], dim: int, within: list[int] | None = None) -> list[int]:
    """Basis of vectors fixed by every matrix, optionally inside the span of ``within``."""
    if within is None:
        stacked = []
        for a in matrices:
            stacked.extend(r ^ (1 << i) for i, r in enumerate(a.rows))
        return kernel_basis(GF2Matrix(dim, stacked))
    if not within:
        return []
    # solve for coefficients c with (A - I) (sum c_k v_k) = 0
    images = []
    for v in within:
        img = 0
        for a in matrices:
            img = (img << dim) | (a.apply(v) ^ v)
        images.append(img)
    coeffs = kernel_basis(GF2Matrix.from_columns(dim * len(matrices), images))
    out = []
    for c in coeffs:
        x = 0
        for k in bits_ascending(c):
            x ^= within[k]
        out.append(x)
    return out


def invariant_space(p: QuotientPresentation, generators: Iterable[int], *, nested: bool = True,
                    matrices: dict[int, GF2Matrix] | None = None) -> list[int]:
    """Basis (coordinate bitsets over p.stratum_basis) of classes fixed by the given generators.

    With ``nested``, the symmetric-group generators are solved first and the
    transvection is imposed on that smaller space.
    """
    gens = sorted(set(generators))
    for d in gens:
        if not 1 <= d <= p.h:
            raise ContractError(f"generator index {d} outside [1, {p.h}]")
    if matrices is None:
        matrices = {}
    for d in gens:
        if d not in matrices:
            matrices[d] = action_matrix(d, p)
    swaps = [matrices[d] for d in gens if d < p.h]
    if nested and p.h in gens and swaps:
        sym = _fixed_space(swaps, p.dim)
        return _fixed_space([matrices[p.h]], p.dim, sym)
    return _fixed_space([matrices[d] for d in gens], p.dim)


def invariant_polynomials(p: QuotientPresentation, vectors: list[int]) -> list[Polynomial]:
    return [p.polynomial(v) for v in vectors]
