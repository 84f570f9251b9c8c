"""Monomials of F2[t1..th], weight vectors, the monomial order, alpha and mu.

A monomial is a plain tuple of exponents. A homogeneous polynomial over GF(2)
is a set of monomials of one degree; addition is symmetric difference.
"""

from __future__ import annotations

from itertools import combinations, product
from math import comb
from typing import Iterable, Iterator

Monomial = tuple[int, ...]
Weight = tuple[int, ...]

EXPONENT_LIMIT = 1 << 32


class ContractError(ValueError):
    """An operation was called outside its precondition."""


class NoSpikeError(ValueError):
    """No spike exists in the requested degree for the requested variable count."""


def make_monomial(exponents: Iterable[int]) -> Monomial:
    m = tuple(int(a) for a in exponents)
    if not m:
        raise ContractError("a monomial needs at least one variable")
    for a in m:
        if a < 0 or a >= EXPONENT_LIMIT:
            raise ContractError(f"exponent {a} outside [0, 2^32)")
    return m


def degree(m: Monomial) -> int:
    return sum(m)


def weight_vector(m: Monomial) -> Weight:
    """Count, for each bit position, how many exponents have that bit set.

    The result never ends in a zero because the largest exponent owns the top bit.
    """
    top = max(m, default=0)
    out = []
    bit = 1
    while bit <= top:
        out.append(sum(1 for a in m if a & bit))
        bit <<= 1
    return tuple(out)


def canonical_weight(w: Iterable[int]) -> Weight:
    w = list(w)
    while w and w[-1] == 0:
        w.pop()
    return tuple(w)


def deg_of_weight(w: Iterable[int]) -> int:
    return sum(c << i for i, c in enumerate(w))


def order_key(m: Monomial) -> tuple[Weight, Monomial]:
    """Sort key realising the monomial order within one (h, n).

    Canonical weights compare correctly as Python tuples: a shorter canonical
    vector is a zero-padded prefix of any longer one that extends it.
    """
    return weight_vector(m), m


def compare(m: Monomial, m2: Monomial) -> int:
    """Return -1, 0 or 1 as m is smaller than, equal to or larger than m2."""
    if len(m) != len(m2):
        raise ContractError(f"variable counts differ: {len(m)} vs {len(m2)}")
    if sum(m) != sum(m2):
        raise ContractError(f"degrees differ: {sum(m)} vs {sum(m2)}")
    k1, k2 = order_key(m), order_key(m2)
    return (k1 > k2) - (k1 < k2)


def alpha(n: int) -> int:
    return bin(n).count("1")


def mu(n: int) -> int:
    if n < 0:
        raise ContractError("mu is defined on nonnegative integers")
    k = 0
    while alpha(n + k) > k:
        k += 1
    return k


def mu_decomposition(n: int, r: int) -> list[int]:
    """Exponents d_1 > ... > d_{r-1} >= d_r > 0 with n = sum(2^d_i - 1), where r = mu(n)."""
    if n <= 0:
        raise ContractError("mu_decomposition needs a positive degree")
    if r != mu(n):
        raise ContractError(f"r={r} but mu({n})={mu(n)}")
    total = n + r
    bits = [i for i in range(total.bit_length() - 1, -1, -1) if total >> i & 1]
    while len(bits) < r:
        # the smallest power splits into two equal halves
        low = bits.pop()
        bits += [low - 1, low - 1]
    if len(bits) != r or bits[-1] <= 0:
        raise AssertionError(f"no decomposition of {n} into {r} terms")
    if any(a <= b for a, b in zip(bits, bits[1:-1])) or (r > 1 and bits[-2] < bits[-1]):
        raise AssertionError(f"decomposition {bits} of {n} violates the ordering")
    return bits


def is_spike(m: Monomial) -> bool:
    return all(a & (a + 1) == 0 for a in m)


def minimal_spike(n: int, h: int) -> Monomial:
    r = mu(n)
    if r > h:
        raise NoSpikeError(f"mu({n})={r} exceeds h={h}: every degree-{n} monomial is hit")
    if n == 0:
        return (0,) * h
    return tuple((1 << d) - 1 for d in mu_decomposition(n, r)) + (0,) * (h - r)


def monomial_count(h: int, n: int) -> int:
    return comb(n + h - 1, h - 1)


def _compositions(n: int, h: int) -> Iterator[Monomial]:
    if h == 1:
        yield (n,)
        return
    for a in range(n, -1, -1):
        for rest in _compositions(n - a, h - 1):
            yield (a,) + rest


def enumerate_monomials(h: int, n: int) -> list[Monomial]:
    """All monomials of degree n in h variables, ascending in the monomial order."""
    if h < 1 or n < 0:
        raise ContractError("need h >= 1 and n >= 0")
    return sorted(_compositions(n, h), key=order_key)


def weights_of_degree(h: int, n: int) -> list[Weight]:
    """Every canonical weight vector of degree n with entries in [0, h], ascending."""
    out: list[Weight] = []

    def extend(prefix: list[int], remaining: int, place: int) -> None:
        if remaining == 0:
            out.append(canonical_weight(prefix))
            return
        # entries at this bit position must match the parity of what is left
        for c in range(remaining % 2, min(h, remaining) + 1, 2):
            extend(prefix + [c], (remaining - c) // 2, place + 1)

    extend([], n, 0)
    return sorted(set(out))


def monomials_of_weight(h: int, w: Weight) -> list[Monomial]:
    """All monomials in h variables with weight vector w, ascending."""
    if any(c > h or c < 0 for c in w):
        return []
    planes = [list(combinations(range(h), c)) for c in w]
    out = []
    for choice in product(*planes):
        exps = [0] * h
        for bit, members in enumerate(choice):
            for j in members:
                exps[j] |= 1 << bit
        out.append(tuple(exps))
    out.sort()
    return out


def format_monomial(m: Monomial) -> str:
    return ",".join(str(a) for a in m)


def parse_monomial(text: str) -> Monomial:
    try:
        return make_monomial(int(x) for x in text.strip().split(","))
    except ValueError as exc:
        raise ContractError(f"bad monomial text {text!r}: {exc}") from None


def format_weight(w: Weight) -> str:
    return ",".join(str(c) for c in w)


def parse_weight(text: str) -> Weight:
    text = text.strip()
    if not text:
        return ()
    try:
        return canonical_weight(int(x) for x in text.split(","))
    except ValueError:
        raise ContractError(f"bad weight text {text!r}") from None


def pretty_monomial(m: Monomial) -> str:
    parts = []
    for j, a in enumerate(m, 1):
        if a == 1:
            parts.append(f"t{j}")
        elif a > 1:
            parts.append(f"t{j}^{a}")
    return "*".join(parts) or "1"


class Polynomial:
    """Homogeneous polynomial over GF(2) in h variables."""

    __slots__ = ("h", "n", "terms")

    def __init__(self, h: int, n: int, terms: Iterable[Monomial] = ()):
        acc: set[Monomial] = set()
        for m in terms:
            if len(m) != h or sum(m) != n:
                raise ContractError(f"monomial {m} is not of shape h={h}, n={n}")
            acc ^= {m}
        self.h = h
        self.n = n
        self.terms = frozenset(acc)

    @classmethod
    def monomial(cls, m: Iterable[int]) -> "Polynomial":
        m = make_monomial(m)
        return cls(len(m), sum(m), (m,))

    @classmethod
    def _trusted(cls, h: int, n: int, terms: frozenset) -> "Polynomial":
        p = cls.__new__(cls)
        p.h, p.n, p.terms = h, n, terms
        return p

    def _check(self, other: "Polynomial") -> None:
        if self.h != other.h or self.n != other.n:
            raise ContractError(f"shape mismatch ({self.h},{self.n}) vs ({other.h},{other.n})")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial._trusted(self.h, self.n, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.h != other.h:
            raise ContractError("variable counts differ")
        acc: set[Monomial] = set()
        for a in self.terms:
            for b in other.terms:
                acc ^= {tuple(x + y for x, y in zip(a, b))}
        return Polynomial._trusted(self.h, self.n + other.n, frozenset(acc))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.h, self.n, self.terms) == (other.h, other.n, other.terms)

    def __hash__(self) -> int:
        return hash((self.h, self.n, self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(sorted(self.terms, key=order_key))

    def __contains__(self, m: object) -> bool:
        return m in self.terms

    def __repr__(self) -> str:
        body = " + ".join(pretty_monomial(m) for m in self) or "0"
        return f"Polynomial(h={self.h}, n={self.n}: {body})"
