"""Exact unlabeled counts via the orbit-average over permutation pairs.

The number of n x r 0/1 matrices distinct up to independent row and column
permutations is the average, over all pairs (row permutation, column
permutation), of the number of matrices fixed by the pair.  A pair fixes
2^(number of joint cycles) matrices, where two cycles of lengths k and l
contribute gcd(k, l) joint cycles.  The fixed-point count depends only on
the cycle types, so the sum runs over partition pairs weighted by conjugacy
class sizes.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .core import DomainError, LimitExceeded, NonIntegerResult, factorial

__all__ = ["CycleType", "burnside_unlabeled", "partitions"]

DEFAULT_PARTITION_LIMIT = 60


@dataclass(frozen=True)
class CycleType:
    """A conjugacy class of the symmetric group on sum(parts) points.

    ``parts`` is a weakly decreasing tuple of cycle lengths; ``class_size``
    is the number of permutations with that cycle structure.
    """

    parts: tuple[int, ...]
    class_size: int

    @property
    def order(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """Map cycle length -> number of cycles of that length."""
        return dict(Counter(self.parts))


def _class_size(parts: tuple[int, ...]) -> int:
    # m! / prod_k (k^c_k * c_k!) where c_k counts parts of size k
    m = sum(parts)
    denom = 1
    for k, c in Counter(parts).items():
        denom *= k**c * math.factorial(c)
    size, rem = divmod(math.factorial(m), denom)
    if rem:
        raise NonIntegerResult(f"class size of {parts} is not integral")
    return size


@lru_cache(maxsize=None)
def partitions(m: int) -> tuple[CycleType, ...]:
    """All integer partitions of m, each with its conjugacy class size."""
    if m < 0:
        raise DomainError(f"partitions requires m >= 0, got {m}")
    out: list[CycleType] = []

    def descend(remaining: int, cap: int, acc: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(CycleType(acc, _class_size(acc)))
            return
        for part in range(min(cap, remaining), 0, -1):
            descend(remaining - part, part, acc + (part,))

    descend(m, m, ())
    return tuple(out)


@lru_cache(maxsize=None)
def _burnside(n: int, r: int) -> int:
    row_types = [(t.class_size, tuple(t.multiplicities().items())) for t in partitions(n)]
    col_types = [(t.class_size, tuple(t.multiplicities().items())) for t in partitions(r)]
    gcd = [[math.gcd(k, l) for l in range(r + 1)] for k in range(n + 1)]
    total = 0
    for row_size, row_mult in row_types:
        for col_size, col_mult in col_types:
            exponent = 0
            for k, ck in row_mult:
                gk = gcd[k]
                for l, cl in col_mult:
                    exponent += gk[l] * ck * cl
            total += row_size * col_size * (1 << exponent)
    count, rem = divmod(total, factorial(n) * factorial(r))
    if rem:
        raise NonIntegerResult(f"orbit average for ({n}, {r}) is not integral")
    return count


def burnside_unlabeled(
    n: int, r: int, *, partition_limit: int = DEFAULT_PARTITION_LIMIT
) -> int:
    """Exact count of n x r matrices up to row and column permutations.

    Raises LimitExceeded when n + r exceeds ``partition_limit``, beyond which
    the number of partition pairs makes the double sum infeasible.
    """
    if n < 0 or r < 0:
        raise DomainError(f"shape must be non-negative, got ({n}, {r})")
    if n + r > partition_limit:
        raise LimitExceeded(
            f"n + r = {n + r} exceeds the partition limit {partition_limit}"
        )
    return _burnside(n, r)
