"""CSS codes from EG(m, q) incidence structures.

Three families are supported:

``PUNCTURED``  nonzero points x lines avoiding the origin (core = H1^T)
``FULL``       all points x all lines (core = H2^T)
``PARALLEL``   lines of one parallel class x all points (core = A_i)

Each family augments its core with an all-ones column and/or identity blocks
so that every row has even weight; which blocks are appended depends on the
parity of q and m.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidClassIndex, NonpositiveDimension
from .field import prime_power
from .geometry import EuclideanGeometry
from .gf2 import BinMatrix, block_diag, compose_blocks


class Family(enum.Enum):
    PUNCTURED = "h1"
    FULL = "h2"
    PARALLEL = "parallel"

    @property
    def title(self) -> str:
        return {"h1": "PuncturedEG", "h2": "FullEG", "parallel": "ParallelClassCode"}[self.value]


class Block(enum.Enum):
    CORE = "C"
    ONES = "1"
    IDENTITY = "I"


@dataclass(frozen=True)
class OrthRecipe:
    case_label: str
    blocks: tuple[Block, ...]

    def __str__(self) -> str:
        return "[" + ",".join(b.value for b in self.blocks) + "]"


@dataclass(frozen=True)
class ClaimedParams:
    n: int
    k: int
    d_bound: int
    d_kind: str  # "exact" or "lower"

    def __str__(self) -> str:
        d = f">={self.d_bound}" if self.d_kind == "lower" else str(self.d_bound)
        return f"[[{self.n},{self.k},{d}]]"


@dataclass(frozen=True)
class CssCode:
    family: Family
    m: int
    q: int
    class_index: int | None
    core: BinMatrix
    recipe: OrthRecipe
    h_orth: BinMatrix

    @property
    def n(self) -> int:
        return self.h_orth.ncols

    @property
    def gen_rows(self) -> int:
        return self.h_orth.nrows

    @property
    def stabilizer(self) -> BinMatrix:
        return assemble_stabilizer(self)


def b_coefficient(t: int, q: int) -> int:
    """1 + q + ... + q^(t-1), i.e. (q^t - 1) / (q - 1)."""
    if t < 0 or q < 2:
        raise ValueError("need t >= 0 and q >= 2")
    return (q**t - 1) // (q - 1)


def _recipe(family: Family, m: int, q: int) -> OrthRecipe:
    C, ONE, I = Block.CORE, Block.ONES, Block.IDENTITY
    q_even, m_even = q % 2 == 0, m % 2 == 0
    if family is Family.PUNCTURED:
        if not q_even and m == 2:
            return OrthRecipe("odd-q-m2", (C, ONE, I, I))
        if not q_even and m_even:
            return OrthRecipe("odd-q-even-m", (C, ONE))
        return OrthRecipe("even-q-or-odd-m", (C, ONE, I))
    if family is Family.FULL:
        if q_even and m == 2:
            return OrthRecipe("even-q-m2", (C, ONE, I, I))
        if not q_even and m_even:
            return OrthRecipe("odd-q-even-m", (C, ONE, I))
        return OrthRecipe("even-q-m3+-or-odd-m", (C, ONE))
    if q == 2:
        return OrthRecipe("q2", (C, I, I))
    if q_even:
        return OrthRecipe("even-q4+", (C,))
    return OrthRecipe("odd-q", (C, I))


def _formula(family: Family, m: int, q: int, label: str) -> ClaimedParams:
    B = b_coefficient
    qm = q**m
    if family is Family.PUNCTURED:
        if label == "odd-q-m2":
            return ClaimedParams(3 * q * q - 2, q * q, 2, "exact")
        if label == "odd-q-even-m":
            return ClaimedParams((qm - 1) * B(m - 1, q) + 1, (qm - 1) * (B(m - 1, q) - 2) + 1, q + 1, "lower")
        return ClaimedParams((qm - 1) * (B(m - 1, q) + 1) + 1, (qm - 1) * (B(m - 1, q) - 1) + 1, q + 1, "lower")
    if family is Family.FULL:
        lines = q ** (m - 1) * B(m, q)
        if label == "even-q-m2":
            return ClaimedParams(3 * q * q + q + 1, q * q + q + 1, 2, "exact")
        if label == "odd-q-even-m":
            return ClaimedParams(lines + qm + 1, lines - qm + 1, q + 1, "lower")
        return ClaimedParams(lines + 1, lines - 2 * qm + 1, q + 1, "lower")
    if label == "q2":
        return ClaimedParams(2 ** (m + 1), 2**m, 2, "exact")
    if label == "even-q4+":
        return ClaimedParams(qm, qm - 2 * q ** (m - 1), 2, "exact")
    return ClaimedParams(qm + q ** (m - 1), qm - q ** (m - 1), 2, "exact")


def _validate(m: int, q: int) -> None:
    if m < 2:
        raise ValueError(f"dimension m must be >= 2, got {m}")
    prime_power(q)


def select_recipe(family: Family, m: int, q: int) -> OrthRecipe:
    """Pick the augmentation that makes every row of the core even."""
    _validate(m, q)
    recipe = _recipe(family, m, q)
    if _formula(family, m, q, recipe.case_label).k <= 0:
        raise NonpositiveDimension(f"{family.title} m={m} q={q}: claimed dimension is not positive")
    return recipe


def claimed_params(family: Family, m: int, q: int) -> ClaimedParams:
    """Closed-form [[n, k, d]] claimed for the family at (m, q)."""
    recipe = select_recipe(family, m, q)
    return _formula(family, m, q, recipe.case_label)


def build_core(family: Family, m: int, q: int, class_index: int | None = None,
               geometry: EuclideanGeometry | None = None) -> BinMatrix:
    _validate(m, q)
    g = geometry or EuclideanGeometry.of(m, q)
    if family is Family.PARALLEL:
        n_classes = len(g.directions)
        if class_index is None or not 0 <= class_index < n_classes:
            raise InvalidClassIndex(f"class index must be in [0, {n_classes}), got {class_index}")
        lines = [i for i, ln in enumerate(g.lines()) if ln.class_id == class_index]
        return g.incidence(lines=lines)
    if class_index is not None:
        raise InvalidClassIndex(f"{family.title} takes no class index")
    if family is Family.FULL:
        return g.incidence().T
    lines = [i for i, ln in enumerate(g.lines()) if not ln.passes_origin]
    return g.incidence(lines=lines, points=range(1, g.n_points)).T


def build_code(family: Family, m: int, q: int, class_index: int | None = None,
               geometry: EuclideanGeometry | None = None) -> CssCode:
    """Core plus appended blocks; orthogonality is not asserted here."""
    recipe = select_recipe(family, m, q)
    core = build_core(family, m, q, class_index, geometry)
    r = core.nrows
    parts = {Block.CORE: core, Block.ONES: BinMatrix.ones(r), Block.IDENTITY: BinMatrix.identity(r)}
    h_orth = compose_blocks([parts[b] for b in recipe.blocks])
    return CssCode(family, m, q, class_index, core, recipe, h_orth)


def assemble_stabilizer(code: CssCode) -> BinMatrix:
    """diag(H, H): X-type generators first, then Z-type."""
    return block_diag(code.h_orth, code.h_orth)


def class_count(m: int, q: int) -> int:
    return b_coefficient(m, q)
