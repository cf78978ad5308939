"""Closed forms and recurrences for all four counting families.

Counts with at most three vertices on one side have polynomial closed forms
(with alternating-sign and mod-3 branch corrections); everything else is
reached through two recurrences:

  * left-labeled counts decompose over the size of the nonzero-degree left
    set, whose classes are unlabeled counts with no zero row, obtained as a
    difference of unlabeled counts;
  * set-labeled counts decompose over both nonzero-degree set sizes, whose
    classes are differences of the no-zero-row counts.

Unlabeled counts outside the closed-form range come from the orbit-average
engine.  Wherever a closed form overlaps the recurrence path, both are
evaluated and must agree; a mismatch raises ConsistencyError.

All fractional constants are exact rationals, and powers of two with a
negative exponent (which appear for small n) are evaluated as exact
rationals as well, so each formula is valid on its whole stated domain.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from . import polya
from .core import ConsistencyError, DomainError, Family, binomial, rational_to_count

__all__ = [
    "Method",
    "count",
    "count_left_labeled",
    "count_right_labeled",
    "count_set_labeled",
    "count_unlabeled",
    "count_via_burnside",
    "left_labeled_closed_form",
    "reduced_both",
    "reduced_left",
    "set_labeled_closed_form",
    "unlabeled_closed_form",
]


class Method(str, Enum):
    """Which computation produced a count."""

    CLOSED_FORM = "closed_form"
    RECURRENCE = "recurrence"
    BURNSIDE = "burnside"
    BRUTE_FORCE = "brute"


def _alt(k: int) -> int:
    """(-1)^k."""
    return 1 if k % 2 == 0 else -1


def _pow2(e: int) -> Fraction:
    """2^e as an exact rational, valid for negative e."""
    return Fraction(1 << e) if e >= 0 else Fraction(1, 1 << -e)


# ---------------------------------------------------------------------------
# closed forms, named by the shape they cover (_2xr = two rows, any r; etc.)

def _unlabeled_2xr(r: int) -> Fraction:
    s = _alt(r)
    return (Fraction(2 * r**3 + 15 * r**2 + 34 * r) + Fraction(45, 2) + Fraction(3, 2) * s) / 24


def _unlabeled_3xr_head(r: int) -> Fraction:
    s = _alt(r)
    poly = 2 * r**4 + 32 * r**3 + 172 * r**2 + 352 * r + 15 * s + 225
    return binomial(r + 7, 7) + Fraction(3 * (r + 4) * poly, 960)


def _unlabeled_3xr_tail(r: int) -> Fraction:
    if r % 3 == 0:
        return Fraction(2 * (r**3 + 12 * r**2 + 45 * r + 54), 54)
    if r % 3 == 1:
        return Fraction(2 * (r**3 + 12 * r**2 + 45 * r + 50), 54)
    return Fraction(2 * (r**3 + 12 * r**2 + 39 * r + 28), 54)


def _unlabeled_3xr(r: int) -> Fraction:
    return (_unlabeled_3xr_head(r) + _unlabeled_3xr_tail(r)) / 6


def _left_2xr(r: int) -> Fraction:
    s = _alt(r)
    return (Fraction(2 * r**3 + 15 * r**2 + 58 * r) + Fraction(45, 2) + Fraction(3, 2) * s) / 24


def _left_3xr(r: int) -> Fraction:
    s = _alt(r)
    extra = Fraction(4 * r**3 + 30 * r**2 + 68 * r - 3 + 3 * s, 24)
    return _unlabeled_3xr(r) + extra


def _left_nx2(n: int) -> Fraction:
    return n * (n + 1) * _pow2(n - 4) + n * _pow2(n - 1) + 7 * _pow2(n - 3)


def _left_nx3(n: int) -> Fraction:
    # valid for n >= 2 only; at n = 1 the value r + 1 applies instead
    p = 1 << n
    head = 3 * p * n**6 + 171 * p * n**5 + 3765 * p * n**4 + 41265 * p * n**3 + 14787 * 16 * p * n**2
    if n % 3 == 0:
        s = _alt(n // 3)
        head += 12 * (2560 * s + 55077 * p) * n + 880 * (128 * s + 763 * p)
    elif n % 3 == 1:
        s = _alt((n + 2) // 3)
        head += 165231 * 4 * p * n - 80 * (1280 * s - 8393 * p)
    else:
        s = _alt((n + 1) // 3)
        head += 12 * (2560 * s + 55077 * p) * n + 80 * (128 * s + 8393 * p)
    return Fraction(head, 829440)


def _nozero_rows_ix2(i: int) -> Fraction:
    return Fraction(6 * i**2 + 24 * i + 21 + 3 * _alt(i), 24)


def _nozero_rows_ix3(i: int) -> Fraction:
    s = _alt(i)
    head = binomial(i + 6, 6) + Fraction(
        10 * i**4 + 140 * i**3 + 680 * i**2 + 1330 * i + 30 * i * s + 105 * s + 855, 320
    )
    if i % 3 == 0:
        tail = Fraction(6 * i**2 + 54 * i + 108, 54)
    elif i % 3 == 1:
        tail = Fraction(6 * i**2 + 42 * i + 60, 54)
    else:
        tail = Fraction(6 * i**2 + 30 * i + 24, 54)
    return (head + tail) / 6


def _nozero_both_ix2(i: int) -> Fraction:
    return Fraction(6 * i**2 + 24 * i - 3 + 3 * _alt(i), 24)


def _set_nx2(n: int) -> Fraction:
    return Fraction(15, 8) * (1 << n) + n * _pow2(n - 1) + n * (n + 1) * _pow2(n - 4) - 1


def _set_nx3(n: int) -> Fraction:
    # valid for n >= 2 only, like the three-column left-labeled form
    p = 1 << n
    head = 3 * p * n**6 + 171 * p * n**5 + 3765 * p * n**4 + 41265 * p * n**3 + 21267 * 16 * p * n**2
    if n % 3 == 0:
        s = _alt(n // 3)
        head += 12 * (2560 * s + 132837 * p) * n + 80 * (1408 * s + 26537 * p - 20736)
    elif n % 3 == 1:
        s = _alt((n + 2) // 3)
        head += 398511 * 4 * p * n - 80 * (1280 * s - 26537 * p + 20736)
    else:
        s = _alt((n + 1) // 3)
        head += 12 * (2560 * s + 132837 * p) * n + 80 * (128 * s + 26537 * p - 20736)
    return Fraction(head, 829440)


# ---------------------------------------------------------------------------
# public counting operations

def unlabeled_closed_form(n: int, r: int) -> int:
    """Closed-form unlabeled count; defined when min(n, r) <= 3."""
    if n < 0 or r < 0:
        raise DomainError(f"shape must be non-negative, got ({n}, {r})")
    small, large = min(n, r), max(n, r)
    if small == 0:
        return 1
    if small == 1:
        return large + 1
    if small == 2:
        return rational_to_count(_unlabeled_2xr(large))
    if small == 3:
        return rational_to_count(_unlabeled_3xr(large))
    raise DomainError(f"no closed form for unlabeled ({n}, {r}): min side exceeds 3")


def count_unlabeled(
    n: int, r: int, *, partition_limit: int = polya.DEFAULT_PARTITION_LIMIT
) -> int:
    """Exact unlabeled count for any shape.

    Uses the closed forms when one side has at most three vertices (counts
    are transpose-symmetric, so the smaller side plays that role) and the
    orbit-average engine otherwise.
    """
    if n < 0 or r < 0:
        raise DomainError(f"shape must be non-negative, got ({n}, {r})")
    if min(n, r) <= 3:
        return unlabeled_closed_form(n, r)
    return polya.burnside_unlabeled(n, r, partition_limit=partition_limit)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ConsistencyError(message)


def reduced_left(
    i: int, r: int, *, partition_limit: int = polya.DEFAULT_PARTITION_LIMIT
) -> int:
    """Unlabeled (i, r) classes in which every left vertex has an edge.

    Computed as the difference of consecutive unlabeled counts; the two- and
    three-column closed forms are asserted against it where they apply.
    """
    if i < 1:
        raise DomainError(f"reduced_left requires i >= 1, got {i}")
    if r < 0:
        raise DomainError(f"reduced_left requires r >= 0, got {r}")
    value = count_unlabeled(i, r, partition_limit=partition_limit) - count_unlabeled(
        i - 1, r, partition_limit=partition_limit
    )
    if r == 2:
        _require(
            value == rational_to_count(_nozero_rows_ix2(i)),
            f"two-column no-zero-row closed form disagrees at i={i}",
        )
    elif r == 3:
        _require(
            value == rational_to_count(_nozero_rows_ix3(i)),
            f"three-column no-zero-row closed form disagrees at i={i}",
        )
    return value


def left_labeled_closed_form(n: int, r: int) -> int:
    """Closed-form left-labeled count; defined for n <= 3 (any r) and for
    r <= 3 (any n, except r = 3 with n < 2 where no form is stated)."""
    if n < 0 or r < 0:
        raise DomainError(f"shape must be non-negative, got ({n}, {r})")
    if n == 0 or r == 0:
        return 1
    if n == 1:
        return r + 1
    if n == 2:
        return rational_to_count(_left_2xr(r))
    if n == 3:
        return rational_to_count(_left_3xr(r))
    if r == 1:
        return 1 << n
    if r == 2:
        return rational_to_count(_left_nx2(n))
    if r == 3:
        return rational_to_count(_left_nx3(n))
    raise DomainError(f"no closed form for left-labeled ({n}, {r})")


def count_left_labeled(
    n: int, r: int, *, partition_limit: int = polya.DEFAULT_PARTITION_LIMIT
) -> int:
    """Exact left-labeled count: one empty graph plus, for each choice of
    the nonzero-degree left set, the no-zero-row classes of that size."""
    if n < 0 or r < 0:
        raise DomainError(f"shape must be non-negative, got ({n}, {r})")
    if n == 0 or r == 0:
        return 1
    total = 1 + sum(
        binomial(n, i) * reduced_left(i, r, partition_limit=partition_limit)
        for i in range(1, n + 1)
    )
    if n <= 3 or r <= 2 or (r == 3 and n >= 2):
        _require(
            total == left_labeled_closed_form(n, r),
            f"left-labeled closed form disagrees with the recurrence at ({n}, {r})",
        )
    return total


def count_right_labeled(
    n: int, r: int, *, partition_limit: int = polya.DEFAULT_PARTITION_LIMIT
) -> int:
    """Exact right-labeled count.

    Transposing matrices swaps the two sides and exchanges the roles of the
    degree supports, so this is the left-labeled count of the mirror shape.
    """
    return count_left_labeled(r, n, partition_limit=partition_limit)


def reduced_both(
    i: int, j: int, *, partition_limit: int = polya.DEFAULT_PARTITION_LIMIT
) -> int:
    """Unlabeled (i, j) classes with no zero-degree vertex on either side,
    as a difference of consecutive no-zero-row counts."""
    if i < 1 or j < 1:
        raise DomainError(f"reduced_both requires i, j >= 1, got ({i}, {j})")
    if j == 1:
        value = reduced_left(i, 1, partition_limit=partition_limit)
    else:
        value = reduced_left(i, j, partition_limit=partition_limit) - reduced_left(
            i, j - 1, partition_limit=partition_limit
        )
    if j == 2:
        _require(
            value == rational_to_count(_nozero_both_ix2(i)),
            f"two-column fully-reduced closed form disagrees at i={i}",
        )
    return value


def set_labeled_closed_form(n: int, r: int) -> int:
    """Closed-form set-labeled count; defined when either side is 2, or
    either side is 3 with the other side at least 2."""
    if n < 0 or r < 0:
        raise DomainError(f"shape must be non-negative, got ({n}, {r})")
    if n == 0 or r == 0:
        return 1
    small, large = min(n, r), max(n, r)
    if small == 2 or large == 2:
        free = large if small == 2 else small
        return rational_to_count(_set_nx2(free))
    if (small == 3 or large == 3) and min(n, r) >= 2:
        free = large if small == 3 else small
        return rational_to_count(_set_nx3(free))
    raise DomainError(f"no closed form for set-labeled ({n}, {r})")


def count_set_labeled(
    n: int, r: int, *, partition_limit: int = polya.DEFAULT_PARTITION_LIMIT
) -> int:
    """Exact set-labeled count: one empty graph plus, for each choice of both
    nonzero-degree sets, the fully reduced classes of that shape."""
    if n < 0 or r < 0:
        raise DomainError(f"shape must be non-negative, got ({n}, {r})")
    if n == 0 or r == 0:
        return 1
    total = 1
    for i in range(1, n + 1):
        ni = binomial(n, i)
        for j in range(1, r + 1):
            total += ni * binomial(r, j) * reduced_both(i, j, partition_limit=partition_limit)
    if 2 in (n, r) or (3 in (n, r) and min(n, r) >= 2):
        _require(
            total == set_labeled_closed_form(n, r),
            f"set-labeled closed form disagrees with the recurrence at ({n}, {r})",
        )
    return total


def count_via_burnside(
    family: Family, n: int, r: int, *, partition_limit: int = polya.DEFAULT_PARTITION_LIMIT
) -> int:
    """Count any family with the orbit-average engine as the only base case.

    This bypasses every closed form, giving a computation path that shares
    nothing with the closed-form evaluators beyond the recurrences.
    """
    if n < 0 or r < 0:
        raise DomainError(f"shape must be non-negative, got ({n}, {r})")

    def bu(a: int, b: int) -> int:
        return polya.burnside_unlabeled(a, b, partition_limit=partition_limit)

    if family is Family.U:
        return bu(n, r)
    if family is Family.Y:
        n, r = r, n
        family = Family.X
    if n == 0 or r == 0:
        return 1
    if family is Family.X:
        return 1 + sum(
            binomial(n, i) * (bu(i, r) - bu(i - 1, r)) for i in range(1, n + 1)
        )
    if family is Family.XY:
        def no_zero_rows(i: int, j: int) -> int:
            return bu(i, j) - bu(i - 1, j)

        total = 1
        for i in range(1, n + 1):
            ni = binomial(n, i)
            for j in range(1, r + 1):
                cell = no_zero_rows(i, j) - (no_zero_rows(i, j - 1) if j > 1 else 0)
                total += ni * binomial(r, j) * cell
        return total
    raise DomainError(f"unknown family {family!r}")


def count(
    family: Family, n: int, r: int, *, partition_limit: int = polya.DEFAULT_PARTITION_LIMIT
) -> tuple[int, Method]:
    """Count one family, reporting which method produced the value."""
    if family is Family.U:
        if min(n, r) <= 3:
            return count_unlabeled(n, r), Method.CLOSED_FORM
        return (
            polya.burnside_unlabeled(n, r, partition_limit=partition_limit),
            Method.BURNSIDE,
        )
    if n < 0 or r < 0:
        raise DomainError(f"shape must be non-negative, got ({n}, {r})")
    if n == 0 or r == 0:
        return 1, Method.CLOSED_FORM
    if family is Family.X:
        return count_left_labeled(n, r, partition_limit=partition_limit), Method.RECURRENCE
    if family is Family.Y:
        return count_right_labeled(n, r, partition_limit=partition_limit), Method.RECURRENCE
    if family is Family.XY:
        return count_set_labeled(n, r, partition_limit=partition_limit), Method.RECURRENCE
    raise DomainError(f"unknown family {family!r}")
