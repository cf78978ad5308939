"""Shared domain types and exact-arithmetic primitives.

Counts are plain Python ints (arbitrary precision).  Intermediate values of
the closed-form evaluators are ``fractions.Fraction``, so every result is
exact; no counting path ever touches a float.  All types here are immutable
values and all operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Biadjacency",
    "ConsistencyError",
    "CountingError",
    "DomainError",
    "Family",
    "LimitExceeded",
    "NonIntegerResult",
    "binomial",
    "factorial",
    "rational_to_count",
]


class CountingError(Exception):
    """Base class for errors raised by this package."""


class NonIntegerResult(CountingError):
    """An exact rational that had to be an integer was not.

    Raised when a formula evaluates to a non-integral rational, which means
    either an implementation bug or an input outside the formula's domain.
    """


class LimitExceeded(CountingError):
    """A configured enumeration or canonicalization budget was exceeded."""


class DomainError(CountingError):
    """Arguments outside the defined domain of an operation."""


class ConsistencyError(CountingError):
    """Two evaluation paths that must agree produced different values."""


class Family(str, Enum):
    """The four equivalence regimes for (n, r)-bipartite graphs.

    U   unlabeled: arbitrary permutations of left and right vertices.
    X   left-set-labeled: as U, but the set of left vertices with nonzero
        degree must additionally be equal.
    Y   right-set-labeled: mirror of X for the right side.
    XY  set-labeled: both nonzero-degree vertex sets must be equal.
    """

    U = "u"
    X = "x"
    Y = "y"
    XY = "xy"


def binomial(a: int, b: int) -> int:
    """C(a, b), with the convention that an out-of-range b gives 0.

    Sums whose index range degenerates can then be written without guards.
    """
    if a < 0:
        raise DomainError(f"binomial requires a >= 0, got a={a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def factorial(k: int) -> int:
    if k < 0:
        raise DomainError(f"factorial requires k >= 0, got k={k}")
    return math.factorial(k)


def rational_to_count(x: Fraction) -> int:
    """Convert an exact rational to a count, insisting on integrality."""
    if x.denominator != 1:
        raise NonIntegerResult(f"expected an integer value, got {x}")
    if x.numerator < 0:
        raise DomainError(f"expected a non-negative count, got {x}")
    return x.numerator


@dataclass(frozen=True)
class Biadjacency:
    """An n x r 0/1 matrix recording edges between n left and r right vertices.

    Row i is stored as an r-bit integer with column 0 in the most significant
    bit, so integer order on row values coincides with lexicographic order on
    their bit strings.
    """

    n: int
    r: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or self.r < 0:
            raise DomainError(f"matrix shape must be non-negative, got {self.n}x{self.r}")
        if len(self.rows) != self.n:
            raise DomainError(f"expected {self.n} rows, got {len(self.rows)}")
        limit = 1 << self.r
        for row in self.rows:
            if not 0 <= row < limit:
                raise DomainError(f"row value {row} does not fit in {self.r} columns")

    @classmethod
    def from_bits(cls, n: int, r: int, bits: Iterable[int]) -> "Biadjacency":
        """Build from n*r entries in row-major order."""
        flat = list(bits)
        if len(flat) != n * r:
            raise DomainError(f"expected {n * r} bits, got {len(flat)}")
        rows = []
        for i in range(n):
            v = 0
            for j in range(r):
                v = (v << 1) | (1 if flat[i * r + j] else 0)
            rows.append(v)
        return cls(n, r, tuple(rows))

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "Biadjacency":
        """Build from one '0'/'1' string per row, e.g. ["01", "10"]."""
        n = len(rows)
        r = len(rows[0]) if rows else 0
        if any(len(s) != r for s in rows):
            raise DomainError("all rows must have the same length")
        return cls.from_bits(n, r, (int(ch) for s in rows for ch in s))

    def bit(self, i: int, j: int) -> int:
        return (self.rows[i] >> (self.r - 1 - j)) & 1

    @property
    def bits(self) -> tuple[int, ...]:
        """All entries, row-major."""
        return tuple(self.bit(i, j) for i in range(self.n) for j in range(self.r))

    def bit_string(self) -> str:
        return "".join(
            format(row, "b").zfill(self.r) if self.r else "" for row in self.rows
        )

    def transpose(self) -> "Biadjacency":
        cols = []
        for j in range(self.r):
            v = 0
            for i in range(self.n):
                v = (v << 1) | self.bit(i, j)
            cols.append(v)
        return Biadjacency(self.r, self.n, tuple(cols))

    def row_support(self) -> frozenset[int]:
        """Indices of rows with at least one edge."""
        return frozenset(i for i, row in enumerate(self.rows) if row)

    def col_support(self) -> frozenset[int]:
        """Indices of columns with at least one edge."""
        used = 0
        for row in self.rows:
            used |= row
        return frozenset(j for j in range(self.r) if (used >> (self.r - 1 - j)) & 1)

    def submatrix(self, rows_keep: Sequence[int], cols_keep: Sequence[int]) -> "Biadjacency":
        """Restriction to the given row and column indices, kept in order."""
        new_rows = []
        for i in rows_keep:
            v = 0
            for j in cols_keep:
                v = (v << 1) | self.bit(i, j)
            new_rows.append(v)
        return Biadjacency(len(rows_keep), len(cols_keep), tuple(new_rows))
