"""Slow, independent reference computations.

None of these share code paths with the library's fast routines beyond the
``Point``/``Segment`` containers, so they can be used to check them.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .geometry import Point, Segment


def _on_segment(s: Segment, p: Point) -> bool:
    ax, ay, bx, by = s.a.x, s.a.y, s.b.x, s.b.y
    if (bx - ax) * (p.y - ay) != (by - ay) * (p.x - ax):
        return False
    dot = (p.x - ax) * (bx - ax) + (p.y - ay) * (by - ay)
    return 0 <= dot <= (bx - ax) ** 2 + (by - ay) ** 2


def _crossing_point(s: Segment, t: Segment):
    # Solve a + u*(b-a) = c + w*(d-c) by Cramer's rule.
    rx, ry = s.b.x - s.a.x, s.b.y - s.a.y
    qx, qy = t.b.x - t.a.x, t.b.y - t.a.y
    det = rx * (-qy) - ry * (-qx)
    if det == 0:
        return None
    hx, hy = t.a.x - s.a.x, t.a.y - s.a.y
    u = Fraction(hx * (-qy) - hy * (-qx)) / det
    w = Fraction(rx * hy - ry * hx) / det
    if 0 <= u <= 1 and 0 <= w <= 1:
        return Point(s.a.x + u * rx, s.a.y + u * ry)
    return None


def brute_force_signature(segments: Sequence[Segment]):
    """Arrangement of ``segments`` built the slow way, in ``Arrangement.signature`` form."""
    pts_on = {}
    for s in segments:
        found = {s.a, s.b}
        for t in segments:
            if t is s:
                continue
            for p in (t.a, t.b):
                if _on_segment(s, p):
                    found.add(p)
            x = _crossing_point(s, t)
            if x is not None:
                found.add(x)
        pts_on[s.id] = found

    def along(s):
        # Sort by the coordinate that varies most, oriented from a to b.
        if s.a.x != s.b.x:
            sign = 1 if s.b.x > s.a.x else -1
            return lambda p: sign * p.x
        sign = 1 if s.b.y > s.a.y else -1
        return lambda p: sign * p.y

    edges_on = {}
    for s in segments:
        ordered = sorted(pts_on[s.id], key=along(s))
        edges_on[s.id] = tuple((frozenset((p, q)), s.id) for p, q in zip(ordered, ordered[1:]))

    vertices = frozenset().union(*pts_on.values()) if segments else frozenset()
    seg_at = {v: frozenset(s.id for s in segments if v in pts_on[s.id]) for v in vertices}
    all_edges = frozenset(e for es in edges_on.values() for e in es)
    incident = {v: frozenset(e for e in all_edges if v in e[0]) for v in vertices}
    visible = {v: frozenset(e for s in seg_at[v] for e in edges_on[s]) for v in vertices}
    return {
        "vertices": vertices,
        "intersections": frozenset(v for v in vertices if len(seg_at[v]) >= 2),
        "edges": all_edges,
        "edges_on_segment": edges_on,
        "segments_at_vertex": seg_at,
        "incident_edges": incident,
        "visible_edges": visible,
    }


def min_set_cover_size(universe: Iterable[int], family: Mapping[int, Iterable[int]]) -> int:
    """Exact minimum cover size by breadth-first search over covered subsets.

    Exponential in ``len(universe)``; intended for universes of at most ~16.
    """
    items = sorted(set(universe))
    if not items:
        return 0
    bit = {x: 1 << i for i, x in enumerate(items)}
    masks = set()
    for members in family.values():
        m = 0
        for x in members:
            m |= bit.get(x, 0)
        if m:
            masks.add(m)
    full = (1 << len(items)) - 1
    seen = {0}
    frontier = [0]
    size = 0
    while frontier:
        size += 1
        nxt = []
        for state in frontier:
            for m in masks:
                t = state | m
                if t == full:
                    return size
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    raise ValueError("family does not cover the universe")


def min_vertex_cover(n: int, edges: Iterable[tuple[int, int]]) -> int:
    """Minimum vertex cover size by enumerating vertex subsets smallest first."""
    edges = list(edges)
    for k in range(n + 1):
        for chosen in itertools.combinations(range(n), k):
            c = set(chosen)
            if all(u in c or v in c for u, v in edges):
                return k
    raise AssertionError("unreachable")


def min_guards_brute_force(segments: Sequence[Segment]) -> int:
    """Minimum guard count with every arrangement vertex as a candidate."""
    sig = brute_force_signature(segments)
    return min_set_cover_size((s.id for s in segments), sig["segments_at_vertex"])
