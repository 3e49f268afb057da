"""Exact planar predicates over rationals.

Everything here works on ``fractions.Fraction`` coordinates; nothing ever
touches a float, so collinearity and incidence tests are decisions, not
estimates. Distances are returned squared to stay inside the rationals.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __str__(self):
        return f"({fmt_rational(self.x)}, {fmt_rational(self.y)})"


def pt(x, y) -> Point:
    """Build a point, coercing ints/strings/fractions to ``Fraction``."""
    return Point(Fraction(x), Fraction(y))


def fmt_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    # Fraction() also accepts decimals like "0.5"; those are exact too.
    return Fraction(text)


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point
    id: int = 0

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a, self.id)

    @property
    def endpoints(self):
        return (self.a, self.b)

    def is_degenerate(self) -> bool:
        return self.a == self.b

    def contains(self, p: Point) -> bool:
        return orientation(self.a, self.b, p) is Orientation.COLLINEAR and on_closed_box(self.a, self.b, p)

    def param(self, p: Point) -> Fraction:
        """Position of ``p`` along the segment, 0 at ``a`` and 1 at ``b``."""
        dx, dy = self.b.x - self.a.x, self.b.y - self.a.y
        return ((p.x - self.a.x) * dx + (p.y - self.a.y) * dy) / (dx * dx + dy * dy)


def seg(x1, y1, x2, y2, id: int = 0) -> Segment:
    return Segment(pt(x1, y1), pt(x2, y2), id)


class Orientation(enum.IntEnum):
    RIGHT = -1
    COLLINEAR = 0
    LEFT = 1


def cross(o: Point, p: Point, q: Point) -> Fraction:
    return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    c = cross(p, q, r)
    if c > 0:
        return Orientation.LEFT
    if c < 0:
        return Orientation.RIGHT
    return Orientation.COLLINEAR


def on_closed_box(a: Point, b: Point, p: Point) -> bool:
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def dist_sq(p: Point, q: Point) -> Fraction:
    return (p.x - q.x) ** 2 + (p.y - q.y) ** 2


class Hit(enum.Enum):
    EMPTY = "empty"
    POINT = "point"
    SHARED_ENDPOINT = "shared-endpoint"
    OVERLAP = "overlap"


class Intersection(NamedTuple):
    kind: Hit
    point: Optional[Point] = None


def intersect(s1: Segment, s2: Segment) -> Intersection:
    """Classify how two closed segments meet.

    ``POINT`` covers proper crossings and touching (an endpoint of one lying
    inside the other); ``SHARED_ENDPOINT`` is reserved for a point that is an
    endpoint of both. Collinear segments sharing more than one point give
    ``OVERLAP``.
    """
    a, b, c, d = s1.a, s1.b, s2.a, s2.b
    o1, o2 = orientation(a, b, c), orientation(a, b, d)
    o3, o4 = orientation(c, d, a), orientation(c, d, b)

    if o1 == 0 and o2 == 0:
        lo = max(min(a, b), min(c, d))
        hi = min(max(a, b), max(c, d))
        if lo > hi:
            return Intersection(Hit.EMPTY)
        if lo == hi:
            return Intersection(Hit.SHARED_ENDPOINT, lo)
        return Intersection(Hit.OVERLAP)

    if o1 * o2 > 0 or o3 * o4 > 0:
        return Intersection(Hit.EMPTY)

    # Lines are not parallel here, so the denominator is nonzero.
    den = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x)
    t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / den
    p = Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
    if p in (a, b) and p in (c, d):
        return Intersection(Hit.SHARED_ENDPOINT, p)
    return Intersection(Hit.POINT, p)


@dataclass(frozen=True)
class CanonicalLine:
    """A line as ``y = m*x + b`` or ``x = a``, with coefficients in lowest terms.

    Equality is geometric: two segments on the same line produce equal values.
    """

    kind: str  # "vertical" or "sloped"
    m: Optional[Fraction] = None
    b: Optional[Fraction] = None
    a: Optional[Fraction] = None

    @classmethod
    def through(cls, p: Point, q: Point) -> "CanonicalLine":
        if p == q:
            raise ValueError("a line needs two distinct points")
        if p.x == q.x:
            return cls("vertical", a=Fraction(p.x))
        m = Fraction(q.y - p.y) / (q.x - p.x)
        return cls("sloped", m=m, b=p.y - m * p.x)

    def contains(self, p: Point) -> bool:
        if self.kind == "vertical":
            return p.x == self.a
        return p.y == self.m * p.x + self.b

    def sort_key(self):
        # Vertical lines sort after every sloped one.
        if self.kind == "vertical":
            return (1, self.a, 0)
        return (0, self.m, self.b)

    def __str__(self):
        if self.kind == "vertical":
            return f"x = {fmt_rational(self.a)}"
        return f"y = {fmt_rational(self.m)}*x + {fmt_rational(self.b)}"


def canonical_line(s: Segment) -> CanonicalLine:
    return CanonicalLine.through(s.a, s.b)


def point_line_distance_sq(p: Point, line: CanonicalLine) -> Fraction:
    if line.kind == "vertical":
        return (p.x - line.a) ** 2
    r = line.m * p.x + line.b - p.y
    return r * r / (line.m * line.m + 1)


class NoNoncollinearLineError(ValueError):
    """Every line passes through every point, so eta is undefined."""


def spanned_lines(points: Sequence[Point]) -> list[CanonicalLine]:
    """Distinct lines through pairs of distinct points, in canonical order."""
    lines = {CanonicalLine.through(p, q) for p, q in itertools.combinations(set(points), 2)}
    return sorted(lines, key=CanonicalLine.sort_key)


def diameter_sq(points: Iterable[Point]) -> Fraction:
    pts = list(points)
    return max((dist_sq(p, q) for p, q in itertools.combinations(pts, 2)), default=Fraction(0))


def eta_and_diameter(points: Sequence[Point], lines: Optional[Sequence[CanonicalLine]] = None):
    """Return ``(eta_sq, diam_sq)`` for a point set.

    ``eta_sq`` is the smallest squared distance from a point to a line (from
    ``lines``, default: all lines spanned by point pairs) that does not pass
    through it. Incidence is decided exactly. For integer points
    ``eta_sq * diam_sq >= 1``.
    """
    if len(points) < 2:
        raise ValueError("need at least two points")
    if lines is None:
        lines = spanned_lines(points)
    eta_sq = None
    for line in lines:
        for p in points:
            if line.contains(p):
                continue
            d = point_line_distance_sq(p, line)
            if eta_sq is None or d < eta_sq:
                eta_sq = d
    if eta_sq is None:
        raise NoNoncollinearLineError("every line contains every point")
    return eta_sq, diameter_sq(points)
