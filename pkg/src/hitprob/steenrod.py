"""Steenrod squares on F2[t1..th] and generators of the hit subspace."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .monomials import Monomial, Polynomial, enumerate_monomials


def binom_mod2(n: int, k: int) -> int:
    """C(n, k) mod 2 via Lucas: odd exactly when the bits of k sit inside n."""
    if k < 0 or k > n:
        return 0
    return int(k & n == k)


def sq_on_power(a: int, n: int) -> int | None:
    """Exponent of Sq^a(t^n), or None when the square vanishes."""
    if a & n != a:
        return None
    return n + a


@lru_cache(maxsize=4096)
def _submasks(a: int) -> tuple[int, ...]:
    out = []
    s = a
    while True:
        out.append(s)
        if s == 0:
            break
        s = (s - 1) & a
    return tuple(reversed(out))


def sq_monomial(k: int, m: Monomial, min_odd: int = 0) -> list[Monomial]:
    """Terms of Sq^k(m).

    Each surviving composition (k_1..k_h) of k has k_j a bit-submask of a_j, and
    distinct compositions give distinct exponent tuples, so nothing cancels.
    With min_odd > 0, terms with fewer than min_odd odd exponents are skipped
    (an odd a_j stays odd exactly when k_j is even).
    """
    if k == 0:
        return [m] if sum(a & 1 for a in m) >= min_odd else []
    h = len(m)
    headroom = [0] * (h + 1)
    for j in range(h - 1, -1, -1):
        headroom[j] = headroom[j + 1] + m[j]
    if k > headroom[0]:
        return []
    spare = sum(a & 1 for a in m) - min_odd
    if spare < 0:
        return []
    # partial states: (amount used, odd exponents lost, exponent prefix)
    states = [(0, 0, ())]
    for j in range(h):
        a = m[j]
        rest = headroom[j + 1]
        grown = []
        for used, lost, prefix in states:
            need = k - used - rest
            for s in _submasks(a):
                if s < need:
                    continue
                u = used + s
                if u > k:
                    break
                drop = lost + (s & 1)
                if drop > spare:
                    continue
                grown.append((u, drop, prefix + (a + s,)))
        states = grown
    return [prefix for _, _, prefix in states]


def sq(k: int, f: Polynomial) -> Polynomial:
    if k < 0:
        raise ValueError("Sq^k needs k >= 0")
    acc: set[Monomial] = set()
    for m in f.terms:
        acc.symmetric_difference_update(sq_monomial(k, m))
    return Polynomial._trusted(f.h, f.n + k, frozenset(acc))


def square_degrees(n: int, all_squares: bool = False) -> list[int]:
    """Degrees k of the squares Sq^k whose images span the hit part of degree n."""
    if all_squares:
        return list(range(1, n + 1))
    out = []
    k = 1
    while k <= n:
        out.append(k)
        k <<= 1
    return out


def hit_generator_terms(h: int, n: int, all_squares: bool = False) -> Iterator[tuple[int, Monomial, list[Monomial]]]:
    """Yield (k, source, terms of Sq^k(source)) for every nonzero generator of degree n."""
    for k in square_degrees(n, all_squares):
        for m in enumerate_monomials(h, n - k):
            terms = sq_monomial(k, m)
            if terms:
                yield k, m, terms


def hit_generators(h: int, n: int, all_squares: bool = False) -> Iterator[Polynomial]:
    """Sq^{2^i}(m) for all m of degree n - 2^i; their span is the hit subspace in degree n."""
    if n < 1:
        return
    for _, _, terms in hit_generator_terms(h, n, all_squares):
        yield Polynomial._trusted(h, n, frozenset(terms))
