"""The plane graph of a set of segments.

Vertices are all segment endpoints plus all intersection points; edges are
the pieces of each segment between consecutive vertices on it. Besides the
graph itself an :class:`Arrangement` keeps, for every segment, its ordered
edge list and, for every vertex, the segments through it and its incident
edges. The edges a vertex sees are the edges of the segments through it.
"""

from __future__ import annotations

import copy
import itertools
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from .geometry import Hit, Point, Segment, fmt_rational, intersect


class InstanceError(ValueError):
    """Raised when a segment set violates the input assumptions.

    ``problems`` lists ``(code, segment_ids)`` pairs, codes being
    ``degenerate``, ``duplicate-segment`` and ``overlap-collinear``.
    """

    def __init__(self, problems):
        self.problems = list(problems)
        msg = "; ".join(f"{code} {ids}" for code, ids in self.problems)
        super().__init__(msg or "invalid instance")


class ArrangementError(ValueError):
    pass


class NotATreeError(ArrangementError):
    pass


def validate_instance(segments: Sequence[Segment]) -> list[tuple[str, tuple[int, ...]]]:
    """Return the list of problems with ``segments``; empty means valid."""
    problems = []
    for s in segments:
        if s.is_degenerate():
            problems.append(("degenerate", (s.id,)))
    ids = [s.id for s in segments]
    if len(set(ids)) != len(ids):
        problems.append(("duplicate-id", tuple(sorted(i for i in set(ids) if ids.count(i) > 1))))
    good = [s for s in segments if not s.is_degenerate()]
    for s, t in itertools.combinations(good, 2):
        if {s.a, s.b} == {t.a, t.b}:
            problems.append(("duplicate-segment", (s.id, t.id)))
        elif intersect(s, t).kind is Hit.OVERLAP:
            problems.append(("overlap-collinear", (s.id, t.id)))
    return problems


def check_instance(segments: Sequence[Segment]) -> None:
    problems = validate_instance(segments)
    if problems:
        raise InstanceError(problems)


@dataclass
class GssInstance:
    segments: list[Segment]
    arrangement: Optional["Arrangement"] = None

    @classmethod
    def from_segments(cls, segments: Iterable) -> "GssInstance":
        """Renumber segments densely from 0, accepting ``Segment`` or 2-point pairs."""
        out = []
        for i, s in enumerate(segments):
            if isinstance(s, Segment):
                out.append(Segment(s.a, s.b, i))
            else:
                a, b = s
                out.append(Segment(Point(*a), Point(*b), i))
        return cls(out)

    def __len__(self):
        return len(self.segments)


class Edge(NamedTuple):
    id: int
    u: int
    v: int
    segment: int

    def other(self, w: int) -> int:
        return self.v if w == self.u else self.u


@dataclass
class Arrangement:
    segments: dict[int, Segment]
    vertices: dict[int, Point]
    edges: dict[int, Edge]
    edges_on_segment: dict[int, list[int]]
    segments_at_vertex: dict[int, set[int]]
    incident_edges: dict[int, set[int]]
    next_edge_id: int = 0
    point_index: dict[Point, int] = field(default_factory=dict, repr=False)

    @property
    def intersections(self) -> set[int]:
        """Vertex ids lying on at least two segments."""
        return {v for v, ss in self.segments_at_vertex.items() if len(ss) >= 2}

    @property
    def n(self) -> int:
        return len(self.segments)

    @property
    def p(self) -> int:
        return len(self.vertices)

    def vertex_id(self, point) -> int:
        return self.point_index[Point(*point)]

    def segment_vertices(self, s: int) -> list[int]:
        """Vertices along segment ``s`` in order from its ``a`` end."""
        es = self.edges_on_segment[s]
        first = self.edges[es[0]]
        order = [first.u, first.v]
        for e in es[1:]:
            order.append(self.edges[e].other(order[-1]))
        return order

    def visible_edges(self, v: int) -> set[int]:
        self._check_vertex(v)
        return {e for s in self.segments_at_vertex[v] for e in self.edges_on_segment[s]}

    def degree(self, v: int) -> int:
        return len(self.incident_edges[v])

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.edges[e].other(v) for e in self.incident_edges[v])

    def copy(self) -> "Arrangement":
        return copy.deepcopy(self)

    def _check_vertex(self, v: int) -> None:
        if v not in self.vertices:
            raise ArrangementError(f"unknown vertex id {v}")

    # -- mutation -------------------------------------------------------

    def remove_segments(self, ids: Iterable[int]) -> set[int]:
        """Delete whole segments with their edges, then tidy the vertex sets.

        Vertices left on no segment disappear. A vertex left inside a single
        surviving segment is merged away, so the result matches the
        arrangement built from the surviving segments alone. Returns the
        surviving segments that lost a vertex or an edge neighbour.
        """
        touched = set()
        for s in sorted(set(ids)):
            for e in self.edges_on_segment.pop(s):
                edge = self.edges.pop(e)
                for w in (edge.u, edge.v):
                    self.incident_edges[w].discard(e)
                    touched.add(w)
            del self.segments[s]
        affected = set()
        for w in sorted(touched):
            self.segments_at_vertex[w] = {s for s in self.segments_at_vertex[w] if s in self.segments}
            affected |= self.segments_at_vertex[w]
            if not self.segments_at_vertex[w]:
                self._drop_vertex(w)
            elif self._is_interior_single(w):
                self.merge_collinear_chain(w)
        return affected

    def _is_interior_single(self, v: int) -> bool:
        ss = self.segments_at_vertex[v]
        if len(ss) != 1:
            return False
        s = self.segments[next(iter(ss))]
        return self.vertices[v] not in (s.a, s.b)

    def _drop_vertex(self, v: int) -> None:
        del self.point_index[self.vertices.pop(v)]
        del self.segments_at_vertex[v]
        del self.incident_edges[v]

    def merge_collinear_chain(self, v: int) -> "Arrangement":
        """Replace the two edges ``(p, v), (v, q)`` of one segment by ``(p, q)``."""
        self._check_vertex(v)
        ss = self.segments_at_vertex[v]
        inc = sorted(self.incident_edges[v])
        if len(ss) != 1 or len(inc) != 2:
            raise ArrangementError(
                f"vertex {v} lies on {len(ss)} segments with {len(inc)} incident edges; need 1 and 2"
            )
        (s,) = ss
        e1, e2 = (self.edges[e] for e in inc)
        if e1.segment != s or e2.segment != s:
            raise ArrangementError(f"edges at vertex {v} are not both on segment {s}")
        order = self.edges_on_segment[s]
        i = order.index(e1.id)
        j = order.index(e2.id)
        if abs(i - j) != 1:
            raise ArrangementError(f"edges at vertex {v} are not consecutive on segment {s}")
        i = min(i, j)
        p, q = e1.other(v), e2.other(v)
        if order[i] == e2.id:
            p, q = q, p
        new = Edge(self.next_edge_id, p, q, s)
        self.next_edge_id += 1
        self.edges[new.id] = new
        del self.edges[e1.id], self.edges[e2.id]
        order[i : i + 2] = [new.id]
        for w in (p, q):
            self.incident_edges[w] -= {e1.id, e2.id}
            self.incident_edges[w].add(new.id)
        self._drop_vertex(v)
        return self

    # -- comparison / output -------------------------------------------

    def signature(self):
        """Id-free description of the arrangement, for equality tests."""
        P = self.vertices
        ekey = {e.id: (frozenset((P[e.u], P[e.v])), e.segment) for e in self.edges.values()}
        return {
            "vertices": frozenset(P.values()),
            "intersections": frozenset(P[v] for v in self.intersections),
            "edges": frozenset(ekey.values()),
            "edges_on_segment": {
                s: tuple(ekey[e] for e in es) for s, es in self.edges_on_segment.items()
            },
            "segments_at_vertex": {P[v]: frozenset(ss) for v, ss in self.segments_at_vertex.items()},
            "incident_edges": {P[v]: frozenset(ekey[e] for e in es) for v, es in self.incident_edges.items()},
            "visible_edges": {P[v]: frozenset(ekey[e] for e in self.visible_edges(v)) for v in P},
        }

    def serialize(self) -> str:
        lines = [
            f"V {v} {fmt_rational(p.x)} {fmt_rational(p.y)}" for v, p in sorted(self.vertices.items())
        ]
        lines += [f"E {e.id} {e.u} {e.v} {e.segment}" for _, e in sorted(self.edges.items())]
        return "\n".join(lines) + "\n"


def build_arrangement(inst) -> Arrangement:
    """Build the plane graph of a :class:`GssInstance` or a list of segments.

    Intersections are found by exact all-pairs testing; the points on each
    segment are then sorted by their position along it.
    """
    segments = list(inst.segments if isinstance(inst, GssInstance) else inst)
    check_instance(segments)

    on_segment = {s.id: {s.a, s.b} for s in segments}
    for s, t in itertools.combinations(segments, 2):
        hit = intersect(s, t)
        if hit.point is not None:
            on_segment[s.id].add(hit.point)
            on_segment[t.id].add(hit.point)

    points = sorted(set().union(*on_segment.values())) if segments else []
    index = {p: i for i, p in enumerate(points)}
    arr = Arrangement(
        segments={s.id: s for s in segments},
        vertices=dict(enumerate(points)),
        edges={},
        edges_on_segment={},
        segments_at_vertex={i: set() for i in range(len(points))},
        incident_edges={i: set() for i in range(len(points))},
        point_index=index,
    )
    eid = 0
    for s in sorted(segments, key=lambda s: s.id):
        chain = [index[p] for p in sorted(on_segment[s.id], key=s.param)]
        arr.edges_on_segment[s.id] = []
        for v in chain:
            arr.segments_at_vertex[v].add(s.id)
        for u, v in zip(chain, chain[1:]):
            arr.edges[eid] = Edge(eid, u, v, s.id)
            arr.edges_on_segment[s.id].append(eid)
            arr.incident_edges[u].add(eid)
            arr.incident_edges[v].add(eid)
            eid += 1
    arr.next_edge_id = eid
    if isinstance(inst, GssInstance):
        inst.arrangement = arr
    return arr


def visible_edges(arr: Arrangement, v: int) -> set[int]:
    return arr.visible_edges(v)


def incident_edges(arr: Arrangement, v: int) -> set[int]:
    arr._check_vertex(v)
    return set(arr.incident_edges[v])


def merge_collinear_chain(arr: Arrangement, v: int) -> Arrangement:
    return arr.merge_collinear_chain(v)


def components(arr: Arrangement) -> list[set[int]]:
    """Connected components (vertex id sets) of the graph, isolated vertices included."""
    parent = {v: v for v in arr.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in arr.edges.values():
        parent[find(e.u)] = find(e.v)
    groups: dict[int, set[int]] = {}
    for v in arr.vertices:
        groups.setdefault(find(v), set()).add(v)
    return sorted(groups.values(), key=min)


def is_forest(arr: Arrangement) -> bool:
    return len(arr.edges) == len(arr.vertices) - len(components(arr))


def find_cycle_edge(arr: Arrangement) -> Optional[int]:
    """Id of some edge closing a cycle, or None for a forest."""
    parent = {v: v for v in arr.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in sorted(arr.edges.values()):
        ru, rv = find(e.u), find(e.v)
        if ru == rv:
            return e.id
        parent[ru] = rv
    return None
