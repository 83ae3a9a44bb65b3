"""Points, lines and parallel classes of the affine geometry EG(m, q).

Ordering conventions (ordering version 1):

* a point's index is its coordinate vector read as a base-q number, first
  coordinate most significant, so the origin has index 0;
* a line is stored with its direction scaled so the first nonzero coordinate
  is 1 and with its smallest-index point as base;
* directions are sorted by index and a line's class id is its direction's
  position in that list; lines are ordered by (class id, base index).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import CoincidentPoints, UnsupportedGeometry
from .field import FieldSpec, field_of_order
from .gf2 import BinMatrix

ORDERING_VERSION = 1
DEFAULT_SIZE_CAP = 4096


def size_cap() -> int:
    return int(os.environ.get("EGQLDPC_SIZE_CAP", DEFAULT_SIZE_CAP))


@dataclass(frozen=True)
class Point:
    coords: tuple[int, ...]
    index: int


@dataclass(frozen=True)
class Line:
    direction: tuple[int, ...]
    base: Point
    points: tuple[int, ...]
    class_id: int

    def __contains__(self, point) -> bool:
        idx = point.index if isinstance(point, Point) else point
        return idx in self.points

    @property
    def passes_origin(self) -> bool:
        return self.base.index == 0


@dataclass(frozen=True)
class ParallelClass:
    class_id: int
    direction: tuple[int, ...]
    lines: tuple[Line, ...]


@dataclass(frozen=True)
class GeometryStats:
    n_points: int
    n_lines: int
    n_classes: int
    lines_per_point: int
    points_per_line: int
    parallels_per_line: int

    @classmethod
    def closed_form(cls, m: int, q: int) -> "GeometryStats":
        directions = (q**m - 1) // (q - 1)
        return cls(
            n_points=q**m,
            n_lines=q ** (m - 1) * directions,
            n_classes=directions,
            lines_per_point=directions,
            points_per_line=q,
            parallels_per_line=q ** (m - 1) - 1,
        )

    def __str__(self) -> str:
        return (
            f"points={self.n_points} lines={self.n_lines} classes={self.n_classes} "
            f"lines/point={self.lines_per_point} points/line={self.points_per_line} "
            f"parallels/line={self.parallels_per_line}"
        )


class EuclideanGeometry:
    """EG(m, q) over a given field."""

    def __init__(self, m: int, field: FieldSpec, cap: int | None = None):
        if m < 2:
            raise ValueError(f"dimension m must be >= 2, got {m}")
        cap = size_cap() if cap is None else cap
        if field.q**m > cap:
            raise UnsupportedGeometry(f"q^m = {field.q**m} exceeds the size cap {cap}")
        self.m = m
        self.field = field
        self.q = field.q
        self.n_points = self.q**m

    @classmethod
    def of(cls, m: int, q: int, cap: int | None = None) -> "EuclideanGeometry":
        return cls(m, field_of_order(q), cap)

    def __repr__(self) -> str:
        return f"EG({self.m},{self.q})"

    # points -----------------------------------------------------------

    @cached_property
    def _coords(self) -> np.ndarray:
        idx = np.arange(self.n_points)
        powers = self.q ** np.arange(self.m - 1, -1, -1)
        out = (idx[:, None] // powers) % self.q
        out.setflags(write=False)
        return out

    @cached_property
    def _powers(self) -> np.ndarray:
        return self.q ** np.arange(self.m - 1, -1, -1)

    def point(self, key) -> Point:
        """Point from an index or a coordinate tuple."""
        if isinstance(key, Point):
            return key
        if isinstance(key, (int, np.integer)):
            idx = int(key)
            if not 0 <= idx < self.n_points:
                raise IndexError(idx)
            return Point(tuple(int(c) for c in self._coords[idx]), idx)
        coords = tuple(int(c) for c in key)
        if len(coords) != self.m or any(not 0 <= c < self.q for c in coords):
            raise ValueError(f"{coords} is not a point of {self!r}")
        return Point(coords, int(np.dot(coords, self._powers)))

    def points(self) -> list[Point]:
        return [self.point(i) for i in range(self.n_points)]

    # lines ------------------------------------------------------------

    @cached_property
    def directions(self) -> tuple[tuple[int, ...], ...]:
        """Normalized directions in ascending index order."""
        out = []
        for row in self._coords[1:]:
            nz = row[row != 0]
            if nz[0] == 1:
                out.append(tuple(int(c) for c in row))
        return tuple(out)

    @cached_property
    def _class_of_direction(self) -> dict[tuple[int, ...], int]:
        return {d: i for i, d in enumerate(self.directions)}

    def _orbit(self, start: np.ndarray, direction: Sequence[int]) -> np.ndarray:
        """Indices of start + c*direction for every scalar c; shape (q, len(start))."""
        add, mul = self.field.add_table, self.field.mul_table
        d = np.asarray(direction)
        base = self._coords[start]
        out = np.empty((self.q, len(start)), dtype=np.int64)
        for c in range(self.q):
            out[c] = add[base, mul[c, d]] @ self._powers
        return out

    @cached_property
    def _line_table(self) -> tuple[np.ndarray, np.ndarray]:
        """(points per line sorted ascending, class id per line) in line order."""
        all_pts = np.arange(self.n_points)
        blocks, classes = [], []
        for cid, d in enumerate(self.directions):
            orbit = self._orbit(all_pts, d)
            bases = np.unique(orbit.min(axis=0))
            blocks.append(np.sort(orbit[:, bases], axis=0).T)
            classes.append(np.full(len(bases), cid))
        pts = np.concatenate(blocks)
        pts.setflags(write=False)
        return pts, np.concatenate(classes)

    @cached_property
    def _lines(self) -> tuple[Line, ...]:
        pts, classes = self._line_table
        return tuple(
            Line(self.directions[c], self.point(int(row[0])), tuple(int(i) for i in row), int(c))
            for row, c in zip(pts, classes)
        )

    def lines(self) -> list[Line]:
        return list(self._lines)

    def line_index(self, line: Line) -> int:
        return self._line_position[(line.class_id, line.base.index)]

    @cached_property
    def _line_position(self) -> dict[tuple[int, int], int]:
        return {(ln.class_id, ln.base.index): i for i, ln in enumerate(self._lines)}

    def canonical_line(self, point, direction: Sequence[int]) -> Line:
        """The line through ``point`` with the given (not necessarily normalized) direction."""
        p = self.point(point)
        d = [int(c) for c in direction]
        lead = next((c for c in d if c), 0)
        if not lead:
            raise ValueError("direction must be nonzero")
        inv = self.field.inv(lead)
        d = tuple(self.field.mul(inv, c) for c in d)
        members = np.sort(self._orbit(np.array([p.index]), d)[:, 0])
        return Line(d, self.point(int(members[0])), tuple(int(i) for i in members), self._class_of_direction[d])

    def line_through(self, a, b) -> Line:
        a, b = self.point(a), self.point(b)
        if a.index == b.index:
            raise CoincidentPoints(f"{a.coords} and {b.coords} coincide")
        diff = [self.field.sub(y, x) for x, y in zip(a.coords, b.coords)]
        return self.canonical_line(a, diff)

    def lines_through_point(self, a) -> list[Line]:
        a = self.point(a)
        return [self.canonical_line(a, d) for d in self.directions]

    def parallel_classes(self) -> list[ParallelClass]:
        groups: dict[int, list[Line]] = {}
        for ln in self._lines:
            groups.setdefault(ln.class_id, []).append(ln)
        return [ParallelClass(cid, self.directions[cid], tuple(groups[cid])) for cid in range(len(self.directions))]

    # incidence --------------------------------------------------------

    def incidence(self, lines: Sequence[int] | None = None, points: Sequence[int] | None = None) -> BinMatrix:
        """Line-by-point incidence matrix restricted to the given line and point indices."""
        pts, _ = self._line_table
        lines = np.arange(len(pts)) if lines is None else np.asarray(lines, dtype=np.int64)
        points = np.arange(self.n_points) if points is None else np.asarray(points, dtype=np.int64)
        col_of = np.full(self.n_points, -1, dtype=np.int64)
        col_of[points] = np.arange(len(points))
        dense = np.zeros((len(lines), len(points)), dtype=np.uint8)
        cols = col_of[pts[lines]]
        rows = np.repeat(np.arange(len(lines)), pts.shape[1])
        keep = cols.ravel() >= 0
        dense[rows[keep], cols.ravel()[keep]] = 1
        return BinMatrix.from_dense(dense)

    def stats(self) -> GeometryStats:
        """Counts measured on the enumeration."""
        pts, classes = self._line_table
        per_point = np.bincount(pts.ravel(), minlength=self.n_points)
        per_class = np.bincount(classes)
        return GeometryStats(
            n_points=self.n_points,
            n_lines=len(pts),
            n_classes=len(self.directions),
            lines_per_point=_uniform(per_point, "lines per point"),
            points_per_line=pts.shape[1],
            parallels_per_line=_uniform(per_class[classes] - 1, "parallels per line"),
        )


def _uniform(values: np.ndarray, what: str) -> int:
    vals = np.unique(values)
    if len(vals) != 1:
        raise AssertionError(f"{what} is not constant: {vals.tolist()}")
    return int(vals[0])
