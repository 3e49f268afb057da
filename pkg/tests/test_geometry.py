import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from segguard.geometry import (
    CanonicalLine,
    Hit,
    NoNoncollinearLineError,
    Orientation,
    Point,
    canonical_line,
    eta_and_diameter,
    intersect,
    orientation,
    point_line_distance_sq,
    pt,
    seg,
    spanned_lines,
)

coord = st.integers(-20, 20)
points = st.builds(pt, coord, coord)


@pytest.mark.parametrize(
    "p,q,r,expected",
    [
        ((0, 0), (1, 0), (2, 0), Orientation.COLLINEAR),
        ((0, 0), (1, 0), (1, 1), Orientation.LEFT),
        ((0, 0), (1, 0), (1, -1), Orientation.RIGHT),
    ],
)
def test_orientation_examples(p, q, r, expected):
    assert orientation(pt(*p), pt(*q), pt(*r)) is expected


def test_intersect_examples():
    assert intersect(seg(0, 0, 2, 2), seg(0, 2, 2, 0)) == (Hit.POINT, pt(1, 1))
    assert intersect(seg(0, 0, 1, 1), seg(2, 2, 3, 3)).kind is Hit.EMPTY
    assert intersect(seg(0, 0, 2, 0), seg(1, 0, 3, 0)).kind is Hit.OVERLAP
    assert intersect(seg(0, 0, 2, 0), seg(2, 0, 4, 1)) == (Hit.SHARED_ENDPOINT, pt(2, 0))


def test_intersect_touching_and_parallel():
    # endpoint of one inside the other counts as a plain point
    assert intersect(seg(0, 0, 4, 0), seg(2, 0, 2, 3)) == (Hit.POINT, pt(2, 0))
    assert intersect(seg(0, 0, 4, 0), seg(0, 1, 4, 1)).kind is Hit.EMPTY
    # collinear, touching end to end
    assert intersect(seg(0, 0, 1, 1), seg(1, 1, 3, 3)) == (Hit.SHARED_ENDPOINT, pt(1, 1))
    # rational crossing
    assert intersect(seg(0, 0, 3, 1), seg(0, 1, 3, 0)) == (Hit.POINT, pt(Fraction(3, 2), Fraction(1, 2)))


def test_canonical_line_examples():
    assert canonical_line(seg(0, 0, 2, 2)) == CanonicalLine("sloped", m=Fraction(1), b=Fraction(0))
    assert canonical_line(seg(1, 0, 1, 5)) == CanonicalLine("vertical", a=Fraction(1))
    line = canonical_line(seg(0, 1, 4, 3))
    assert (line.m, line.b) == (Fraction(1, 2), Fraction(1))
    assert line.m.denominator == 2 and line.m.numerator == 1


def test_point_line_distance_examples():
    diag = CanonicalLine.through(pt(1, 0), pt(0, 1))
    assert point_line_distance_sq(pt(0, 0), diag) == Fraction(1, 2)
    assert point_line_distance_sq(pt(3, 0), CanonicalLine("vertical", a=Fraction(1))) == 4
    assert point_line_distance_sq(pt(5, -4), diag) == 0


def test_eta_unit_square():
    square = [pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)]
    lines = spanned_lines(square)
    assert len(lines) == 6
    # brute force: distance from each corner to each line through two others
    expected = min(
        point_line_distance_sq(p, CanonicalLine.through(a, b))
        for p in square
        for a, b in itertools.combinations([q for q in square if q != p], 2)
        if not CanonicalLine.through(a, b).contains(p)
    )
    assert expected == Fraction(1, 2)
    eta_sq, diam_sq = eta_and_diameter(square, lines)
    assert (eta_sq, diam_sq) == (Fraction(1, 2), 2)
    assert eta_sq * diam_sq >= 1


def test_eta_collinear_raises():
    pts = [pt(0, 0), pt(1, 0), pt(2, 0)]
    with pytest.raises(NoNoncollinearLineError):
        eta_and_diameter(pts, spanned_lines(pts))


@given(points, points, points)
def test_orientation_antisymmetric(p, q, r):
    assert orientation(p, q, r) == -orientation(p, r, q)


@given(points, points, points, coord, coord)
def test_orientation_translation_invariant(p, q, r, dx, dy):
    t = lambda a: Point(a.x + dx, a.y + dy)
    assert orientation(t(p), t(q), t(r)) == orientation(p, q, r)


@given(points, points, points, points)
def test_intersect_symmetric(a, b, c, d):
    if a == b or c == d:
        return
    s, t = seg(*a, *b), seg(*c, *d)
    assert intersect(s, t) == intersect(t, s)
    hit = intersect(s, t)
    if hit.point is not None:
        assert s.contains(hit.point) and t.contains(hit.point)


@given(points, points, st.integers(-5, 5), st.integers(-5, 5))
def test_canonical_line_is_geometric(a, b, i, j):
    if a == b or i == j:
        return
    s = seg(*a, *b)
    assert canonical_line(s) == canonical_line(s.reversed())
    d = (b.x - a.x, b.y - a.y)
    p = pt(a.x + i * d[0], a.y + i * d[1])
    q = pt(a.x + j * d[0], a.y + j * d[1])
    assert canonical_line(seg(*p, *q)) == canonical_line(s)


@given(st.lists(st.builds(pt, st.integers(0, 100), st.integers(0, 100)), min_size=3, max_size=8, unique=True))
def test_eta_times_diameter_at_least_one(pts):
    if all(orientation(pts[0], pts[1], p) == 0 for p in pts[2:]):
        return
    eta_sq, diam_sq = eta_and_diameter(pts)
    assert eta_sq * diam_sq >= 1
