"""Measured parameters of constructed codes and verdicts on claimed ones.

Two independent minimum-distance routes are provided:

* :func:`exact_distance` enumerates every nonzero kernel vector from a
  nullspace basis (vectorized, Gray-code over the high basis vectors);
* :func:`verify_distance_floor` enumerates column subsets by weight and
  checks whether their columns sum to zero.

Both break ties the same way: among minimum-weight codewords the witness is
the lexicographically smallest 0/1 tuple read from column 0 onward.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from operator import xor
from typing import Iterable, Sequence

import numpy as np

from .builder import ClaimedParams, CssCode, Family, build_code, claimed_params, class_count
from .errors import CapExceeded, EGQLDPCError
from .geometry import EuclideanGeometry
from .gf2 import (
    BinMatrix,
    RegularityMetrics,
    SelfOrthReport,
    kernel_basis,
    overlap_histogram,
    rank,
    regularity_metrics,
    self_orth_check,
)

DIM_CAP = 26
WEIGHT_BUDGET = 10**8
EMPTY_CODE = math.inf  # distance of a code with no nonzero codeword

CONFIRMED = "CONFIRMED"
REFUTED = "REFUTED"
UNVERIFIED = "UNVERIFIED"

_TABLE_BITS = 18


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of a distance search.

    ``kind`` is ``exact`` (value is the minimum weight, witness holds the
    support of a codeword achieving it), ``lower-bound-verified`` (no nonzero
    codeword of weight < value exists) or ``inconclusive``.
    """

    kind: str
    value: float
    work: int
    witness: tuple[int, ...] | None = None


def _pack_msb(v: int, ncols: int, nwords: int) -> np.ndarray:
    """Pack a column-bit int so that column 0 is the most significant bit of word 0."""
    bits = np.zeros(nwords * 64, dtype=np.uint8)
    for j in range(ncols):
        if (v >> j) & 1:
            bits[j] = 1
    return np.frombuffer(np.packbits(bits).tobytes(), dtype=">u8").astype(np.uint64)


def _unpack_msb(words: np.ndarray, ncols: int) -> tuple[int, ...]:
    bits = np.unpackbits(np.asarray(words, dtype=">u8").view(np.uint8))
    return tuple(int(j) for j in np.flatnonzero(bits[:ncols]))


def _lex_key(support: Iterable[int], ncols: int) -> int:
    return sum(1 << (ncols - 1 - j) for j in support)


def exact_distance(h: BinMatrix, dim_cap: int = DIM_CAP) -> DistanceResult:
    """Minimum weight of ker(h) by enumerating all 2^dim - 1 nonzero codewords."""
    basis = kernel_basis(h)
    dim, n = len(basis), h.ncols
    if dim > dim_cap:
        raise CapExceeded(f"kernel dimension {dim} exceeds cap {dim_cap}")
    if dim == 0:
        return DistanceResult("exact", EMPTY_CODE, 0)
    nwords = (n + 63) // 64
    vecs = np.stack([_pack_msb(v, n, nwords) for v in basis])
    low = min(dim, _TABLE_BITS)
    table = np.zeros((1, nwords), dtype=np.uint64)
    for v in vecs[:low]:
        table = np.concatenate([table, table ^ v])
    high = vecs[low:]

    best_w = n + 1
    best_word = None
    offset = np.zeros(nwords, dtype=np.uint64)
    for step in range(1 << len(high)):
        if step:
            # Gray code: flip the basis vector at the lowest set bit of step
            offset = offset ^ high[(step & -step).bit_length() - 1]
        block = table ^ offset
        weights = np.bitwise_count(block).sum(axis=1, dtype=np.int64)
        if step == 0:
            weights[0] = n + 1
        w = int(weights.min())
        if w > best_w:
            continue
        cands = block[weights == w]
        first = cands[np.lexsort(tuple(cands[:, i] for i in reversed(range(nwords))))[0]]
        if w < best_w or tuple(first.tolist()) < tuple(best_word.tolist()):
            best_w, best_word = w, first.copy()
    return DistanceResult("exact", best_w, (1 << dim) - 1, _unpack_msb(best_word, n))


def verify_distance_floor(h: BinMatrix, w: int, budget: int = WEIGHT_BUDGET) -> DistanceResult:
    """Search every vector of weight <= w for a nonzero codeword of ker(h).

    Returns ``exact`` with the smallest weight found, ``lower-bound-verified``
    with value w + 1 if there is none, or ``inconclusive`` when the number of
    candidate vectors exceeds ``budget``.
    """
    n = h.ncols
    w = min(w, n)
    if sum(math.comb(n, j) for j in range(w + 1)) > budget:
        return DistanceResult("inconclusive", 0, 0)
    cols = h.columns()
    where: dict[int, list[int]] = {}
    for j, c in enumerate(cols):
        where.setdefault(c, []).append(j)
    work = 1
    for weight in range(1, w + 1):
        work += math.comb(n, weight)
        found = []
        for head in combinations(range(n), weight - 1):
            x = reduce(xor, (cols[j] for j in head), 0)
            last = head[-1] if head else -1
            found.extend(head + (t,) for t in where.get(x, ()) if t > last)
        if found:
            witness = min(found, key=lambda s: _lex_key(s, n))
            return DistanceResult("exact", weight, work, witness)
    return DistanceResult("lower-bound-verified", w + 1, work)


def computed_dimension(code: CssCode) -> tuple[int, int]:
    """(rank of h_orth, n - 2 * rank)."""
    r = rank(code.h_orth)
    return r, code.n - 2 * r


@dataclass(frozen=True)
class RegularityReport:
    core: RegularityMetrics
    rho: int | None  # column weight of the core, if constant
    lam: int | None  # row weight of the core, if constant
    h_orth_overlaps: dict[int, int]

    @property
    def regular(self) -> bool:
        return self.core.is_regular

    @property
    def four_cycle_free(self) -> bool:
        return self.core.four_cycle_free


def regularity_report(code: CssCode) -> RegularityReport:
    metrics = regularity_metrics(code.core)
    rho = metrics.col_weights[0] if len(set(metrics.col_weights)) == 1 else None
    lam = metrics.row_weights[0] if len(set(metrics.row_weights)) == 1 else None
    hist = overlap_histogram(code.h_orth) if code.gen_rows >= 2 else {}
    return RegularityReport(metrics, rho, lam, hist)


@dataclass(frozen=True)
class ClaimReport:
    family: Family
    m: int
    q: int
    class_index: int | None
    case_label: str
    recipe: str
    claimed: ClaimedParams
    n: int
    gen_rows: int
    rank: int
    k_computed: int
    self_orth: SelfOrthReport
    distance: DistanceResult
    verdicts: dict[str, str]
    reasons: dict[str, str] = field(default_factory=dict)

    @property
    def all_confirmed(self) -> bool:
        return all(v == CONFIRMED for v in self.verdicts.values())

    @property
    def params(self) -> tuple[int, int, float]:
        return self.n, self.k_computed, self.distance.value


def _distance_for_claim(h: BinMatrix, claimed: ClaimedParams, kernel_dim: int,
                        dim_cap: int, budget: int) -> DistanceResult:
    if kernel_dim <= dim_cap:
        return exact_distance(h, dim_cap)
    w = claimed.d_bound if claimed.d_kind == "exact" else claimed.d_bound - 1
    return verify_distance_floor(h, w, budget)


def _distance_verdict(d: DistanceResult, claimed: ClaimedParams) -> tuple[str, str]:
    if d.kind == "inconclusive":
        return UNVERIFIED, "search budget exceeded"
    if claimed.d_kind == "exact":
        if d.kind == "exact" and d.value == claimed.d_bound:
            return CONFIRMED, ""
        if d.kind == "exact":
            return REFUTED, f"minimum distance is {d.value}, not {claimed.d_bound}"
        return REFUTED, f"no codeword of weight <= {int(d.value) - 1}"
    if d.value >= claimed.d_bound:
        return CONFIRMED, ""
    if d.kind == "exact":
        return REFUTED, f"codeword of weight {d.value} < {claimed.d_bound}"
    return UNVERIFIED, f"only d >= {d.value} verified"


def claim_check(family: Family, m: int, q: int, class_index: int | None = None, *,
                dim_cap: int = DIM_CAP, budget: int = WEIGHT_BUDGET,
                geometry: EuclideanGeometry | None = None) -> ClaimReport:
    """Build the code and adjudicate its claimed [[n, k, d]]."""
    code = build_code(family, m, q, class_index, geometry)
    claimed = claimed_params(family, m, q)
    r, k = computed_dimension(code)
    orth = self_orth_check(code.h_orth)
    dist = _distance_for_claim(code.h_orth, claimed, code.n - r, dim_cap, budget)

    verdicts, reasons = {}, {}
    verdicts["length"] = CONFIRMED if claimed.n == code.n else REFUTED
    if claimed.n != code.n:
        reasons["length"] = f"constructed length {code.n} != {claimed.n}"
    verdicts["self_orthogonality"] = CONFIRMED if orth.ok else REFUTED
    if not orth.ok:
        reasons["self_orthogonality"] = (
            f"{len(orth.violating_pairs)} odd-overlap row pairs, {len(orth.odd_weight_rows)} odd-weight rows"
        )
    if k != claimed.k:
        verdicts["dimension"] = REFUTED
        reasons["dimension"] = f"n - 2*rank = {k} != {claimed.k}"
    elif not orth.ok:
        verdicts["dimension"] = REFUTED
        reasons["dimension"] = "generators do not commute, so no code is defined"
    else:
        verdicts["dimension"] = CONFIRMED
    verdicts["distance"], why = _distance_verdict(dist, claimed)
    if why:
        reasons["distance"] = why

    return ClaimReport(
        family=family, m=m, q=q, class_index=class_index,
        case_label=code.recipe.case_label, recipe=str(code.recipe), claimed=claimed,
        n=code.n, gen_rows=code.gen_rows, rank=r, k_computed=k,
        self_orth=orth, distance=dist, verdicts=verdicts, reasons=reasons,
    )


@dataclass(frozen=True)
class SweepEntry:
    family: Family
    m: int
    q: int
    class_index: int | None
    report: ClaimReport | None = None
    error: str | None = None


@dataclass
class SweepResult:
    entries: list[SweepEntry]
    # (m, q) -> whether every parallel-class code shares (n, rank, k, distance)
    class_consistency: dict[tuple[int, int], bool]


def sweep(families: Sequence[Family], cases: Sequence[tuple[int, int]], *,
          dim_cap: int = DIM_CAP, budget: int = WEIGHT_BUDGET) -> SweepResult:
    """Claim-check every (family, m, q); failures are recorded, never raised."""
    entries: list[SweepEntry] = []
    consistency: dict[tuple[int, int], bool] = {}
    for family in families:
        for m, q in cases:
            try:
                geometry = EuclideanGeometry.of(m, q)
                indices = range(class_count(m, q)) if family is Family.PARALLEL else [None]
            except (EGQLDPCError, ValueError) as exc:
                entries.append(SweepEntry(family, m, q, None, error=_error_text(exc)))
                continue
            signatures = set()
            for i in indices:
                try:
                    rep = claim_check(family, m, q, i, dim_cap=dim_cap, budget=budget, geometry=geometry)
                except (EGQLDPCError, ValueError) as exc:
                    entries.append(SweepEntry(family, m, q, i, error=_error_text(exc)))
                    continue
                entries.append(SweepEntry(family, m, q, i, report=rep))
                signatures.add((rep.n, rep.rank, rep.k_computed, rep.distance.kind, rep.distance.value))
            if family is Family.PARALLEL and signatures:
                consistency[(m, q)] = len(signatures) == 1
    return SweepResult(entries, consistency)


def _error_text(exc: Exception) -> str:
    return f"{type(exc).__name__}: {exc}"
