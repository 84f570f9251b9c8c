"""Dense GF(2) linear algebra on bit-packed rows.

Rows are Python ints used as bitsets: bit j holds the entry in column j, so a
row XOR is one C-level operation over packed machine words.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def bits_descending(x: int) -> Iterator[int]:
    while x:
        b = x.bit_length() - 1
        yield b
        x ^= 1 << b


def bits_ascending(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Echelon:
    """Incremental echelon basis whose pivots are the highest set bit of each row.

    Insertion keeps plain echelon form; ``finalize`` back-substitutes to the
    reduced form so each pivot column has a single 1 and reduction is one pass.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, int] = {}
        self.pivot_mask = 0
        self.reduced = True

    def __len__(self) -> int:
        return len(self.rows)

    def insert(self, v: int) -> bool:
        rows = self.rows
        while v:
            b = v.bit_length() - 1
            r = rows.get(b)
            if r is None:
                rows[b] = v
                self.pivot_mask |= 1 << b
                self.reduced = False
                return True
            v ^= r
        return False

    def finalize(self) -> "Echelon":
        if self.reduced:
            return self
        rows = self.rows
        mask = self.pivot_mask
        for b in sorted(rows):
            r = rows[b]
            x = (r & mask) ^ (1 << b)
            while x:
                c = x.bit_length() - 1
                r ^= rows[c]
                x ^= 1 << c
            rows[b] = r
        self.reduced = True
        return self

    def reduce(self, v: int) -> int:
        """Residue of v: zero on every pivot column, equal to v modulo the row space."""
        rows = self.rows
        mask = self.pivot_mask
        if self.reduced:
            x = v & mask
            while x:
                c = x.bit_length() - 1
                v ^= rows[c]
                x ^= 1 << c
            return v
        x = v & mask
        while x:
            v ^= rows[x.bit_length() - 1]
            x = v & mask
        return v

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def pivots(self) -> list[int]:
        return sorted(self.rows, reverse=True)


class GF2Matrix:
    """r x c matrix over GF(2); row i is an int whose bit j is entry (i, j)."""

    __slots__ = ("ncols", "rows")

    def __init__(self, ncols: int, rows: Iterable[int] = ()):
        self.ncols = ncols
        self.rows = list(rows)
        limit = 1 << ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError(f"row {r:#x} does not fit in {ncols} columns")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_strings(cls, rows: Sequence[str], ncols: int | None = None) -> "GF2Matrix":
        """Build from strings such as "110"; character j is column j."""
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(ncols, (string_to_row(s) for s in rows))

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls(n, (1 << i for i in range(n)))

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[int]) -> "GF2Matrix":
        """Matrix whose column j is the bitset columns[j] over row indices."""
        rows = [0] * nrows
        for j, col in enumerate(columns):
            for i in bits_ascending(col):
                rows[i] |= 1 << j
        return cls(len(columns), rows)

    def to_strings(self) -> list[str]:
        return [row_to_string(r, self.ncols) for r in self.rows]

    def get(self, i: int, j: int) -> int:
        return self.rows[i] >> j & 1

    def column(self, j: int) -> int:
        return sum(1 << i for i, r in enumerate(self.rows) if r >> j & 1)

    def transpose(self) -> "GF2Matrix":
        return GF2Matrix(self.nrows, (self.column(j) for j in range(self.ncols)))

    def apply(self, x: int) -> int:
        """M x, as a bitset over row indices."""
        out = 0
        for i, r in enumerate(self.rows):
            if (r & x).bit_count() & 1:
                out |= 1 << i
        return out

    def __matmul__(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions differ")
        out = []
        for r in self.rows:
            acc = 0
            for k in bits_ascending(r):
                acc ^= other.rows[k]
            out.append(acc)
        return GF2Matrix(other.ncols, out)

    def __add__(self, other: "GF2Matrix") -> "GF2Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shapes differ")
        return GF2Matrix(self.ncols, (a ^ b for a, b in zip(self.rows, other.rows)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        return self.ncols == other.ncols and self.rows == other.rows

    def __repr__(self) -> str:
        return f"GF2Matrix({self.nrows}x{self.ncols})"


def string_to_row(s: str) -> int:
    return int(s[::-1], 2) if s else 0


def row_to_string(r: int, ncols: int) -> str:
    return format(r, f"0{ncols}b")[::-1] if ncols else ""


def _permute(row: int, target: Sequence[int]) -> int:
    out = 0
    for j in bits_ascending(row):
        out |= 1 << target[j]
    return out


def echelonize(m: GF2Matrix, column_order: Sequence[int] | None = None) -> tuple[GF2Matrix, list[int]]:
    """Reduced row-echelon form with pivots picked greedily along column_order.

    Returns the nonzero reduced rows, sorted so their pivots follow column_order,
    and the pivot columns in that same order.
    """
    c = m.ncols
    order = list(range(c)) if column_order is None else list(column_order)
    if sorted(order) != list(range(c)):
        raise ValueError("column_order must be a permutation of the columns")
    # the first column in the order becomes the highest bit
    position = [0] * c
    for idx, col in enumerate(order):
        position[col] = c - 1 - idx
    ech = Echelon(c)
    for r in m.rows:
        ech.insert(_permute(r, position))
    ech.finalize()
    back = [order[c - 1 - b] for b in range(c)]
    pivots = [back[b] for b in ech.pivots()]
    rows = [_permute(ech.rows[b], back) for b in ech.pivots()]
    return GF2Matrix(c, rows), pivots


def rank(m: GF2Matrix) -> int:
    ech = Echelon(m.ncols)
    for r in m.rows:
        ech.insert(r)
    return len(ech)


def kernel_basis(m: GF2Matrix) -> list[int]:
    """Basis of {x : M x = 0}, each vector a bitset over column indices."""
    ech = Echelon(m.ncols)
    for r in m.rows:
        ech.insert(r)
    ech.finalize()
    basis = []
    free = ((1 << m.ncols) - 1) & ~ech.pivot_mask
    for f in bits_ascending(free):
        x = 1 << f
        for p, r in ech.rows.items():
            if r >> f & 1:
                x |= 1 << p
        basis.append(x)
    return basis


def reduce_vector(v: int, reduced: GF2Matrix, pivots: Sequence[int]) -> int:
    """Residue of v against a reduced echelon matrix with the given pivot columns."""
    for r, p in zip(reduced.rows, pivots):
        if v >> p & 1:
            v ^= r
    return v


def constrained_span(m: GF2Matrix, forbidden_columns: Iterable[int]) -> list[int]:
    """Basis of the row-space elements that vanish on every forbidden column."""
    forbidden = sorted(set(forbidden_columns))
    blocked = set(forbidden)
    order = forbidden + [j for j in range(m.ncols) if j not in blocked]
    reduced, pivots = echelonize(m, order)
    return [r for r, p in zip(reduced.rows, pivots) if p not in blocked]
