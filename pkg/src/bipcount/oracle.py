"""Brute-force ground truth: enumerate every matrix and count classes directly.

For small shapes, all 2^(n*r) biadjacency matrices are generated and grouped
by a canonical key computed straight from the equivalence definitions.  This
is deliberately independent of the formula and orbit-average modules so it
can arbitrate disagreements.

Canonical forms minimize over the permutations of the smaller side (the
matrix is transposed first when that side is the row side), which keeps the
cost at (min side)! per matrix and makes shapes like 2 x 8 feasible.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .core import Biadjacency, DomainError, Family, LimitExceeded

__all__ = [
    "CanonicalKey",
    "CellCounts",
    "DEFAULT_BIT_BUDGET",
    "DEFAULT_PERM_BUDGET",
    "canonical_form",
    "class_representatives",
    "classify",
    "enumerate_cell",
    "enumerate_counts",
    "enumerate_reduced",
]

DEFAULT_BIT_BUDGET = 16
DEFAULT_PERM_BUDGET = 720  # 6!

REDUCED_KINDS = ("left-reduced", "both-reduced")


@lru_cache(maxsize=None)
def _perm_tables(c: int) -> tuple[tuple[int, ...], ...]:
    """For each permutation of c columns, a lookup from any c-bit row value
    to the value with its columns rearranged by that permutation."""
    tables = []
    for perm in itertools.permutations(range(c)):
        tbl = []
        for v in range(1 << c):
            w = 0
            for target, source in enumerate(perm):
                if (v >> (c - 1 - source)) & 1:
                    w |= 1 << (c - 1 - target)
            tbl.append(w)
        tables.append(tuple(tbl))
    return tuple(tables)


def _transpose_rows(rows: tuple[int, ...], ncols: int) -> tuple[int, ...]:
    nrows = len(rows)
    out = []
    for j in range(ncols):
        v = 0
        for i, row in enumerate(rows):
            if (row >> (ncols - 1 - j)) & 1:
                v |= 1 << (nrows - 1 - i)
        out.append(v)
    return tuple(out)


def _canon_oriented(rows: tuple[int, ...], ncols: int):
    """Minimum over column permutations of the row-sorted matrix.

    Rows are returned as bytes when they fit (one byte per row), otherwise
    as a tuple; both compare lexicographically by row value.
    """
    tables = _perm_tables(ncols)
    if ncols <= 8:
        return min(bytes(sorted(map(t.__getitem__, rows))) for t in tables)
    return min(tuple(sorted(map(t.__getitem__, rows))) for t in tables)


def _canon_rows(rows: tuple[int, ...], ncols: int, perm_budget: int):
    """Canonicalize, orienting so the permuted side is the smaller one."""
    if len(rows) < ncols:
        rows, ncols = _transpose_rows(rows, ncols), len(rows)
    if math.factorial(ncols) > perm_budget:
        raise LimitExceeded(
            f"canonicalization over {ncols}! column permutations exceeds the "
            f"budget of {perm_budget}"
        )
    return _canon_oriented(rows, ncols)


def canonical_form(m: Biadjacency, *, perm_budget: int = DEFAULT_PERM_BUDGET) -> Biadjacency:
    """Canonical representative of m under row and column permutations.

    The input is transposed first when that makes the permuted side smaller,
    so the result may have the transposed shape; inputs of equal shape are
    equivalent exactly when their canonical forms are identical.  The result
    is idempotent: canonicalizing it again returns it unchanged.
    """
    work = m.transpose() if m.n < m.r else m
    canon = _canon_rows(work.rows, work.r, perm_budget)
    return Biadjacency(work.n, work.r, tuple(canon))


@dataclass(frozen=True)
class CanonicalKey:
    """Complete invariant for one matrix under one family's equivalence.

    Two matrices of the same shape are equivalent under ``family`` if and
    only if their keys are equal: any equivalence maps zero-degree vertices
    to zero-degree vertices, so the support sets (where the family pins
    them) plus the canonical form of the support-restricted matrix capture
    the relation exactly.
    """

    family: Family
    support_rows: frozenset[int] | None
    support_cols: frozenset[int] | None
    canon: Biadjacency


def classify(
    m: Biadjacency, family: Family, *, perm_budget: int = DEFAULT_PERM_BUDGET
) -> CanonicalKey:
    rs = sorted(m.row_support())
    cs = sorted(m.col_support())
    if family is Family.U:
        sub = m
    elif family is Family.X:
        sub = m.submatrix(rs, range(m.r))
    elif family is Family.Y:
        sub = m.submatrix(range(m.n), cs)
    elif family is Family.XY:
        sub = m.submatrix(rs, cs)
    else:
        raise DomainError(f"unknown family {family!r}")
    return CanonicalKey(
        family=family,
        support_rows=frozenset(rs) if family in (Family.X, Family.XY) else None,
        support_cols=frozenset(cs) if family in (Family.Y, Family.XY) else None,
        canon=canonical_form(sub, perm_budget=perm_budget),
    )


@dataclass(frozen=True)
class CellCounts:
    """Class counts for one (n, r) shape, all families plus reduced variants."""

    u: int
    x: int
    y: int
    xy: int
    left_reduced: int
    both_reduced: int

    def for_family(self, family: Family) -> int:
        return {Family.U: self.u, Family.X: self.x, Family.Y: self.y, Family.XY: self.xy}[
            family
        ]


def _check_budgets(n: int, r: int, bit_budget: int, perm_budget: int) -> None:
    if n < 0 or r < 0:
        raise DomainError(f"shape must be non-negative, got ({n}, {r})")
    if n * r > bit_budget:
        raise LimitExceeded(f"{n}x{r} needs {n * r} bits, budget is {bit_budget}")
    if math.factorial(min(n, r)) > perm_budget:
        raise LimitExceeded(
            f"min side {min(n, r)} needs {math.factorial(min(n, r))} permutations, "
            f"budget is {perm_budget}"
        )


@lru_cache(maxsize=None)
def _scan_cell(n: int, r: int, perm_budget: int) -> CellCounts:
    # One pass over all 2^(n*r) matrices.  Every family key is derived from
    # the support sets plus the canonical form of the core (the submatrix of
    # nonzero rows and columns): an equivalence maps isolated vertices to
    # isolated vertices and acts freely inside the core, so within a fixed
    # (n, r) the tuples below separate classes exactly as the definitions do.
    u_keys: set = set()
    x_keys: set = set()
    y_keys: set = set()
    xy_keys: set = set()
    left_keys: set = set()
    both_keys: set = set()

    full_rows = (1 << n) - 1
    full_cols = (1 << r) - 1
    mask = (1 << r) - 1
    canon_memo: dict = {}
    col_positions: dict[int, tuple[int, ...]] = {}

    for code in range(1 << (n * r)):
        rows = tuple((code >> (i * r)) & mask for i in range(n))

        row_mask = 0
        col_mask = 0
        for i, row in enumerate(rows):
            if row:
                row_mask |= 1 << i
                col_mask |= row

        core = tuple(row for row in rows if row)
        if col_mask != full_cols:
            positions = col_positions.get(col_mask)
            if positions is None:
                positions = tuple(j for j in range(r) if (col_mask >> (r - 1 - j)) & 1)
                col_positions[col_mask] = positions
            width = len(positions)
            compressed = []
            for row in core:
                v = 0
                for j in positions:
                    v = (v << 1) | ((row >> (r - 1 - j)) & 1)
                compressed.append(v)
            core = tuple(compressed)
        else:
            width = r

        core_key = (len(core), width, core)
        canon = canon_memo.get(core_key)
        if canon is None:
            canon = _canon_rows(core, width, perm_budget)
            canon_memo[core_key] = canon

        u_key = (len(core), width, canon)
        u_keys.add(u_key)
        x_keys.add((row_mask, width, canon))
        y_keys.add((col_mask, len(core), canon))
        xy_keys.add((row_mask, col_mask, canon))
        if row_mask == full_rows:
            left_keys.add(u_key)
            if col_mask == full_cols:
                both_keys.add(canon)

    return CellCounts(
        u=len(u_keys),
        x=len(x_keys),
        y=len(y_keys),
        xy=len(xy_keys),
        left_reduced=len(left_keys),
        both_reduced=len(both_keys),
    )


def enumerate_cell(
    n: int,
    r: int,
    *,
    bit_budget: int = DEFAULT_BIT_BUDGET,
    perm_budget: int = DEFAULT_PERM_BUDGET,
) -> CellCounts:
    """Class counts for every family and reduced variant at one shape."""
    _check_budgets(n, r, bit_budget, perm_budget)
    return _scan_cell(n, r, perm_budget)


def enumerate_counts(
    n: int,
    r: int,
    family: Family,
    *,
    bit_budget: int = DEFAULT_BIT_BUDGET,
    perm_budget: int = DEFAULT_PERM_BUDGET,
) -> int:
    """Number of equivalence classes among all 2^(n*r) matrices."""
    return enumerate_cell(n, r, bit_budget=bit_budget, perm_budget=perm_budget).for_family(
        family
    )


def enumerate_reduced(
    i: int,
    j: int,
    kind: str,
    *,
    bit_budget: int = DEFAULT_BIT_BUDGET,
    perm_budget: int = DEFAULT_PERM_BUDGET,
) -> int:
    """Unlabeled class count over matrices with no zero row (left-reduced)
    or with neither a zero row nor a zero column (both-reduced)."""
    if kind not in REDUCED_KINDS:
        raise DomainError(f"kind must be one of {REDUCED_KINDS}, got {kind!r}")
    cell = enumerate_cell(i, j, bit_budget=bit_budget, perm_budget=perm_budget)
    return cell.left_reduced if kind == "left-reduced" else cell.both_reduced


def _representative(key: CanonicalKey, n: int, r: int) -> Biadjacency:
    """Embed the canonical support-restricted matrix back into an n x r frame."""
    rs = sorted(key.support_rows) if key.support_rows is not None else list(range(n))
    cs = sorted(key.support_cols) if key.support_cols is not None else list(range(r))
    sub = key.canon
    if (sub.n, sub.r) != (len(rs), len(cs)):
        sub = sub.transpose()
    rows = [0] * n
    for a, i in enumerate(rs):
        v = 0
        for b, j in enumerate(cs):
            if sub.bit(a, b):
                v |= 1 << (r - 1 - j)
        rows[i] = v
    return Biadjacency(n, r, tuple(rows))


def class_representatives(
    n: int,
    r: int,
    family: Family,
    *,
    bit_budget: int = DEFAULT_BIT_BUDGET,
    perm_budget: int = DEFAULT_PERM_BUDGET,
) -> list[dict]:
    """One canonical representative per class, as JSON-ready records.

    Records carry the family tag, shape, pinned support sets (null where the
    family ignores them) and the representative's row-major bit string.
    """
    _check_budgets(n, r, bit_budget, perm_budget)
    mask = (1 << r) - 1
    seen: dict[CanonicalKey, Biadjacency] = {}
    for code in range(1 << (n * r)):
        m = Biadjacency(n, r, tuple((code >> (i * r)) & mask for i in range(n)))
        key = classify(m, family, perm_budget=perm_budget)
        if key not in seen:
            seen[key] = _representative(key, n, r)
    records = []
    for key, rep in seen.items():
        records.append(
            {
                "family": family.value,
                "n": n,
                "r": r,
                "supportRows": sorted(key.support_rows)
                if key.support_rows is not None
                else None,
                "supportCols": sorted(key.support_cols)
                if key.support_cols is not None
                else None,
                "bits": rep.bit_string(),
            }
        )
    records.sort(key=lambda rec: (rec["supportRows"] or [], rec["supportCols"] or [], rec["bits"]))
    return records
