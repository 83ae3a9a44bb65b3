from itertools import combinations

import pytest

from egqldpc.errors import CoincidentPoints, UnsupportedGeometry
from egqldpc.geometry import EuclideanGeometry, GeometryStats

CENSUS = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2), (2, 7), (2, 8), (2, 9), (3, 4), (5, 2)]
SMALL = [(m, q) for m, q in CENSUS if q**m <= 256]

# the six lines of EG(2,2) as printed, l1..l6
EG22_LINES = {
    "l1": {(0, 0), (0, 1)},
    "l2": {(0, 0), (1, 0)},
    "l3": {(0, 0), (1, 1)},
    "l4": {(1, 0), (1, 1)},
    "l5": {(0, 1), (1, 1)},
    "l6": {(0, 1), (1, 0)},
}


def point_set(g, line):
    return {g.point(i).coords for i in line.points}


def test_eg22_points():
    g = EuclideanGeometry.of(2, 2)
    assert [p.coords for p in g.points()] == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_point_counts_and_origin_first():
    assert len(EuclideanGeometry.of(2, 3).points()) == 9
    pts = EuclideanGeometry.of(3, 2).points()
    assert len(pts) == 8
    assert pts[0].coords == (0, 0, 0) and pts[0].index == 0


def test_eg22_lines_match_listing():
    g = EuclideanGeometry.of(2, 2)
    got = [point_set(g, ln) for ln in g.lines()]
    order = ["l1", "l4", "l2", "l5", "l3", "l6"]  # (class, base) order
    assert got == [EG22_LINES[name] for name in order]


@pytest.mark.parametrize("m,q,count", [(2, 3, 12), (3, 2, 28)])
def test_line_counts(m, q, count):
    assert len(EuclideanGeometry.of(m, q).lines()) == count


def test_line_through_examples():
    g = EuclideanGeometry.of(2, 2)
    assert point_set(g, g.line_through((0, 1), (1, 1))) == EG22_LINES["l5"]
    assert point_set(g, g.line_through((0, 0), (1, 1))) == EG22_LINES["l3"]
    g3 = EuclideanGeometry.of(2, 3)
    a, b = g3.point((0, 1)), g3.point((0, 2))
    brute = [ln for ln in g3.lines() if a in ln and b in ln]
    assert len(brute) == 1
    ln = g3.line_through(a, b)
    assert ln == brute[0]
    assert ln.direction == (0, 1) and ln.base.index == 0
    with pytest.raises(CoincidentPoints):
        g.line_through((1, 0), (1, 0))


@pytest.mark.parametrize("m,q,count", [(2, 2, 3), (2, 3, 4), (3, 2, 7)])
def test_lines_through_point(m, q, count):
    g = EuclideanGeometry.of(m, q)
    for p in g.points():
        lines = g.lines_through_point(p)
        assert len(lines) == count
        assert all(p in ln for ln in lines)
        order = [g.line_index(ln) for ln in lines]
        assert order == sorted(order)
    if (m, q) == (2, 3):
        assert all(ln.base.index == 0 for ln in g.lines_through_point(0))


def test_parallel_classes_eg22():
    g = EuclideanGeometry.of(2, 2)
    classes = [[point_set(g, ln) for ln in pc.lines] for pc in g.parallel_classes()]
    assert classes == [
        [EG22_LINES["l1"], EG22_LINES["l4"]],
        [EG22_LINES["l2"], EG22_LINES["l5"]],
        [EG22_LINES["l3"], EG22_LINES["l6"]],
    ]


@pytest.mark.parametrize("m,q,n_classes,per_class", [(2, 3, 4, 3), (3, 2, 7, 4)])
def test_parallel_class_sizes(m, q, n_classes, per_class):
    classes = EuclideanGeometry.of(m, q).parallel_classes()
    assert len(classes) == n_classes
    assert all(len(pc.lines) == per_class for pc in classes)


@pytest.mark.parametrize("m,q", CENSUS)
def test_census(m, q):
    g = EuclideanGeometry.of(m, q)
    assert g.stats() == GeometryStats.closed_form(m, q)
    lines = g.lines()
    assert all(len(set(ln.points)) == q for ln in lines)
    classes = g.parallel_classes()
    covered = sorted(i for pc in classes for ln in pc.lines for i in ln.points)
    assert len(covered) == len(classes) * q**m
    for pc in classes:
        pts = sorted(i for ln in pc.lines for i in ln.points)
        assert pts == list(range(q**m))
    assert sum(len(pc.lines) for pc in classes) == len(lines)


@pytest.mark.parametrize("m,q", SMALL)
def test_line_invariants(m, q):
    g = EuclideanGeometry.of(m, q)
    f = g.field
    for ln in g.lines():
        lead = next(c for c in ln.direction if c)
        assert lead == 1
        assert ln.base.index == min(ln.points)
        assert ln.passes_origin == (0 in ln.points)
        # every point is base + c * direction
        expected = set()
        for c in range(q):
            coords = tuple(f.add(b, f.mul(c, d)) for b, d in zip(ln.base.coords, ln.direction))
            expected.add(g.point(coords).index)
        assert expected == set(ln.points)
        # canonicalization is idempotent from any member point
        for i in ln.points:
            assert g.canonical_line(i, ln.direction) == ln


@pytest.mark.parametrize("m,q", SMALL)
def test_lines_meet_in_at_most_one_point(m, q):
    sets = [set(ln.points) for ln in EuclideanGeometry.of(m, q).lines()]
    assert all(len(a & b) <= 1 for a, b in combinations(sets, 2))


@pytest.mark.parametrize("m,q", SMALL)
def test_two_points_one_line(m, q):
    g = EuclideanGeometry.of(m, q)
    lines_of = {}
    for li, ln in enumerate(g.lines()):
        for i in ln.points:
            lines_of.setdefault(i, set()).add(li)
    for a, b in combinations(range(q**m), 2):
        common = lines_of[a] & lines_of[b]
        assert len(common) == 1
        assert g.line_index(g.line_through(a, b)) in common


def test_size_cap(monkeypatch):
    monkeypatch.setenv("EGQLDPC_SIZE_CAP", "16")
    EuclideanGeometry.of(2, 4)
    with pytest.raises(UnsupportedGeometry):
        EuclideanGeometry.of(2, 5)


def test_incidence_shape():
    g = EuclideanGeometry.of(2, 3)
    inc = g.incidence()
    assert inc.shape == (12, 9)
    assert set(inc.row_weights()) == {3}
    assert set(inc.col_weights()) == {4}
