"""Dense binary matrices over GF(2) with bit-packed rows.

Each row is a Python int whose bit ``j`` holds column ``j``.  Conversions to
and from numpy go through ``packbits`` so large incidence matrices never touch
per-entry Python loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, PairBudgetExceeded, RowCountMismatch

PAIR_BUDGET = 10**7


def _row_to_bits(row: int, ncols: int) -> np.ndarray:
    raw = np.frombuffer(row.to_bytes((ncols + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:ncols]


class BinMatrix:
    """Immutable binary matrix; rows are packed ints (bit j = column j)."""

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows: Iterable[int], ncols: int):
        rows = tuple(int(r) for r in rows)
        if not rows or ncols < 1:
            raise ValueError("a BinMatrix needs at least one row and one column")
        limit = 1 << ncols
        for r in rows:
            if r < 0 or r >= limit:
                raise ValueError(f"row {r:#x} does not fit in {ncols} columns")
        self._rows = rows
        self._ncols = ncols

    @classmethod
    def from_dense(cls, dense) -> "BinMatrix":
        arr = np.asarray(dense)
        if arr.ndim != 2:
            raise ValueError("expected a 2-d array")
        if np.any((arr != 0) & (arr != 1)):
            raise ValueError("entries must be 0 or 1")
        packed = np.packbits(arr.astype(np.uint8), axis=1, bitorder="little")
        return cls((int.from_bytes(row.tobytes(), "little") for row in packed), arr.shape[1])

    @classmethod
    def from_supports(cls, supports: Iterable[Iterable[int]], ncols: int) -> "BinMatrix":
        rows = []
        for sup in supports:
            r = 0
            for j in sup:
                r |= 1 << j
            rows.append(r)
        return cls(rows, ncols)

    @classmethod
    def identity(cls, n: int) -> "BinMatrix":
        return cls((1 << i for i in range(n)), n)

    @classmethod
    def ones(cls, nrows: int, ncols: int = 1) -> "BinMatrix":
        return cls([(1 << ncols) - 1] * nrows, ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BinMatrix":
        return cls([0] * nrows, ncols)

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return len(self._rows), self._ncols

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not 0 <= j < self._ncols:
            raise IndexError(j)
        return (self._rows[i] >> j) & 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinMatrix):
            return NotImplemented
        return self._ncols == other._ncols and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._ncols, self._rows))

    def __repr__(self) -> str:
        return f"BinMatrix({self.nrows}x{self.ncols})"

    def __str__(self) -> str:
        return "\n".join("".join(str(b) for b in row) for row in self.to_dense())

    def to_dense(self) -> np.ndarray:
        """Return a uint8 array of shape (nrows, ncols)."""
        nbytes = (self._ncols + 7) // 8
        buf = b"".join(r.to_bytes(nbytes, "little") for r in self._rows)
        raw = np.frombuffer(buf, dtype=np.uint8).reshape(self.nrows, nbytes)
        return np.unpackbits(raw, axis=1, bitorder="little")[:, : self._ncols]

    @property
    def T(self) -> "BinMatrix":
        return transpose(self)

    def row_support(self, i: int) -> list[int]:
        r, out = self._rows[i], []
        while r:
            low = r & -r
            out.append(low.bit_length() - 1)
            r ^= low
        return out

    def row_weights(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def col_weights(self) -> list[int]:
        return self.to_dense().sum(axis=0, dtype=np.int64).tolist()

    def columns(self) -> list[int]:
        """Columns packed as ints, bit i = row i."""
        return list(transpose(self).rows)


def compose_blocks(blocks: Sequence[BinMatrix]) -> BinMatrix:
    """Concatenate matrices left to right."""
    if not blocks:
        raise ValueError("need at least one block")
    nrows = blocks[0].nrows
    for b in blocks[1:]:
        if b.nrows != nrows:
            raise RowCountMismatch(f"block has {b.nrows} rows, expected {nrows}")
    rows = [0] * nrows
    offset = 0
    for b in blocks:
        for i, r in enumerate(b.rows):
            rows[i] |= r << offset
        offset += b.ncols
    return BinMatrix(rows, offset)


def block_diag(a: BinMatrix, b: BinMatrix) -> BinMatrix:
    rows = list(a.rows) + [r << a.ncols for r in b.rows]
    return BinMatrix(rows, a.ncols + b.ncols)


def transpose(a: BinMatrix) -> BinMatrix:
    return BinMatrix.from_dense(a.to_dense().T)


def matmul(a: BinMatrix, b: BinMatrix) -> BinMatrix:
    """Product over GF(2)."""
    if a.ncols != b.nrows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    brows = b.rows
    out = []
    for r in a.rows:
        acc = 0
        while r:
            low = r & -r
            acc ^= brows[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return BinMatrix(out, b.ncols)


def rank(a: BinMatrix) -> int:
    """Rank over GF(2); each pivot is keyed by its lowest set bit."""
    pivots: dict[int, int] = {}
    for r in a.rows:
        while r:
            low = r & -r
            p = pivots.get(low)
            if p is None:
                pivots[low] = r
                break
            r ^= p
    return len(pivots)


def rref(a: BinMatrix) -> tuple[list[int], list[int]]:
    """Reduced row echelon form: (nonzero rows, pivot columns ascending)."""
    rows = [r for r in a.rows if r]
    pivot_cols = []
    top = 0
    for col in range(a.ncols):
        bit = 1 << col
        for i in range(top, len(rows)):
            if rows[i] & bit:
                rows[top], rows[i] = rows[i], rows[top]
                break
        else:
            continue
        piv = rows[top]
        for i in range(len(rows)):
            if i != top and rows[i] & bit:
                rows[i] ^= piv
        pivot_cols.append(col)
        top += 1
        if top == len(rows):
            break
    return rows[:top], pivot_cols


def kernel_basis(a: BinMatrix) -> list[int]:
    """Packed basis of {v : a v = 0}, one vector per non-pivot column."""
    rows, pivot_cols = rref(a)
    pivot_set = set(pivot_cols)
    basis = []
    for f in range(a.ncols):
        if f in pivot_set:
            continue
        v = 1 << f
        fbit = 1 << f
        for r, pc in zip(rows, pivot_cols):
            if r & fbit:
                v |= 1 << pc
        basis.append(v)
    return basis


def nullspace_basis(a: BinMatrix) -> np.ndarray:
    """Kernel basis as a uint8 array of shape (ncols - rank, ncols)."""
    basis = kernel_basis(a)
    out = np.zeros((len(basis), a.ncols), dtype=np.uint8)
    for i, v in enumerate(basis):
        out[i] = _row_to_bits(v, a.ncols)
    return out


def overlap_matrix(a: BinMatrix, pair_budget: int = PAIR_BUDGET) -> np.ndarray:
    """Integer Gram matrix a a^T; diagonal entries are row weights."""
    if comb(a.nrows, 2) > pair_budget:
        raise PairBudgetExceeded(f"{comb(a.nrows, 2)} row pairs exceed budget {pair_budget}")
    d = a.to_dense().astype(np.float64)
    return np.rint(d @ d.T).astype(np.int64)


def overlap_histogram(a: BinMatrix, pair_budget: int = PAIR_BUDGET) -> dict[int, int]:
    """Map shared-column count -> number of unordered row pairs with that count."""
    if a.nrows < 2:
        raise ValueError("overlap histogram needs at least two rows")
    g = overlap_matrix(a, pair_budget)
    upper = g[np.triu_indices(a.nrows, k=1)]
    values, counts = np.unique(upper, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


@dataclass(frozen=True)
class SelfOrthReport:
    ok: bool
    violating_pairs: tuple[tuple[int, int], ...]
    odd_weight_rows: tuple[int, ...]

    @property
    def violation_count(self) -> int:
        return len(self.violating_pairs) + len(self.odd_weight_rows)


def self_orth_check(a: BinMatrix, pair_budget: int = PAIR_BUDGET) -> SelfOrthReport:
    """Check a a^T = O, listing every odd-weight row and odd-overlap row pair."""
    g = overlap_matrix(a, pair_budget) & 1
    odd_rows = tuple(int(i) for i in np.flatnonzero(np.diag(g)))
    iu, ju = np.nonzero(np.triu(g, k=1))
    pairs = tuple((int(i), int(j)) for i, j in zip(iu, ju))
    return SelfOrthReport(not odd_rows and not pairs, pairs, odd_rows)


@dataclass(frozen=True)
class RegularityMetrics:
    row_weights: tuple[int, ...]
    col_weights: tuple[int, ...]
    four_cycle_free: bool

    @property
    def is_regular(self) -> bool:
        return len(set(self.row_weights)) == 1 and len(set(self.col_weights)) == 1


def regularity_metrics(a: BinMatrix, pair_budget: int = PAIR_BUDGET) -> RegularityMetrics:
    if a.nrows < 2:
        free = True
    else:
        free = max(overlap_histogram(a, pair_budget)) <= 1
    return RegularityMetrics(tuple(a.row_weights()), tuple(a.col_weights()), free)
