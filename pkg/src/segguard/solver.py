"""Guard placement on segment arrangements.

A guard at a vertex sees every segment through that vertex, so a guard set
is a set of vertices meeting every segment: a set cover with the segments as
universe and one member ``S_v`` per vertex. The solvers here are an exact
branch and bound, the greedy set-cover heuristic, the constructive ``n - 1``
bound, and leaf elimination for arrangements whose graph is a forest.
"""

from __future__ import annotations

import heapq
import warnings
from dataclasses import dataclass
from typing import Iterable, Optional

from .arrangement import Arrangement, ArrangementError, NotATreeError, build_arrangement, find_cycle_edge


@dataclass(frozen=True)
class GuardSet:
    ids: tuple[int, ...]

    def __init__(self, ids: Iterable[int] = ()):
        object.__setattr__(self, "ids", tuple(sorted(set(ids))))

    @property
    def size(self) -> int:
        return len(self.ids)

    def __len__(self):
        return len(self.ids)

    def __iter__(self):
        return iter(self.ids)

    def __contains__(self, v):
        return v in self.ids


@dataclass
class SetCoverInstance:
    universe: frozenset
    family: dict[int, frozenset]
    cap: Optional[int] = None


class InfeasibleAtCap(Exception):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"no guard set of size <= {cap}")


class NoIntersectionsWarning(UserWarning):
    pass


def to_set_cover(arr: Arrangement, cap: Optional[int] = None) -> SetCoverInstance:
    return SetCoverInstance(
        universe=frozenset(arr.segments),
        family={v: frozenset(ss) for v, ss in sorted(arr.segments_at_vertex.items())},
        cap=cap,
    )


def is_guard_set(arr: Arrangement, guards: Iterable[int]) -> bool:
    seen = set()
    for v in guards:
        if v not in arr.vertices:
            raise ArrangementError(f"unknown vertex id {v}")
        seen |= arr.segments_at_vertex[v]
    return seen >= set(arr.segments)


def candidate_pool(arr: Arrangement) -> list[int]:
    """Intersection vertices plus the lowest-id endpoint of each lone segment.

    Some minimum guard set always lives in this pool: a vertex on only one
    segment can be traded for any intersection on that segment.
    """
    pool = set(arr.intersections)
    for s in arr.segments:
        verts = arr.segment_vertices(s)
        if not any(v in pool for v in verts):
            pool.add(min(verts[0], verts[-1]))
    return sorted(pool)


def solve_greedy(arr: Arrangement) -> GuardSet:
    uncovered = set(arr.segments)
    guards = []
    while uncovered:
        v = max(sorted(arr.vertices), key=lambda v: len(arr.segments_at_vertex[v] & uncovered))
        guards.append(v)
        uncovered -= arr.segments_at_vertex[v]
    return GuardSet(guards)


class _Found(Exception):
    pass


def solve_exact(arr: Arrangement, cap: Optional[int] = None) -> GuardSet:
    """Minimum guard set by branch and bound over :func:`candidate_pool`.

    With ``cap`` the search stops at the first solution of size ``<= cap``
    and raises :class:`InfeasibleAtCap` if none exists.
    """
    segs = sorted(arr.segments)
    if not segs:
        return GuardSet()
    bit = {s: 1 << i for i, s in enumerate(segs)}
    full = (1 << len(segs)) - 1

    masks = {}
    for v in candidate_pool(arr):
        m = 0
        for s in arr.segments_at_vertex[v]:
            m |= bit[s]
        masks[v] = m
    # Drop candidates whose coverage is contained in another's.
    cands = []
    for v, m in sorted(masks.items(), key=lambda kv: (-bin(kv[1]).count("1"), kv[0])):
        if not any(m | k == k for _, k in cands):
            cands.append((v, m))
    covering = {s: [(v, m) for v, m in cands if m & bit[s]] for s in segs}

    best = list(solve_greedy(arr).ids)
    if cap is not None and len(best) > cap:
        best = None
        bound = cap + 1
    else:
        bound = len(best)
    if cap is not None and best is not None:
        return GuardSet(best)

    def search(uncovered, chosen):
        nonlocal best, bound
        if not uncovered:
            best, bound = list(chosen), len(chosen)
            if cap is not None:
                raise _Found
            return
        if len(chosen) + _independent_bound(uncovered, segs, bit, covering) >= bound:
            return
        target = min(
            (s for s in segs if uncovered & bit[s]),
            key=lambda s: (sum(1 for _, m in covering[s] if m & uncovered), s),
        )
        options = sorted(covering[target], key=lambda vm: (-bin(vm[1] & uncovered).count("1"), vm[0]))
        for v, m in options:
            chosen.append(v)
            search(uncovered & ~m, chosen)
            chosen.pop()

    try:
        search(full, [])
    except _Found:
        pass
    if best is None:
        raise InfeasibleAtCap(cap)
    return GuardSet(best)


def _independent_bound(uncovered, segs, bit, covering) -> int:
    used = set()
    count = 0
    rest = sorted((s for s in segs if uncovered & bit[s]), key=lambda s: len(covering[s]))
    for s in rest:
        ids = {v for v, _ in covering[s]}
        if not ids & used:
            used |= ids
            count += 1
    return count


def sufficiency_bound(arr: Arrangement) -> GuardSet:
    """At most ``n - 1`` guards whenever two segments meet.

    One guard goes on an intersection, then one endpoint guard per segment it
    misses. Without any intersection every segment gets its own guard and a
    :class:`NoIntersectionsWarning` is issued.
    """
    guards = []
    uncovered = set(arr.segments)
    inter = sorted(arr.intersections)
    if inter:
        guards.append(inter[0])
        uncovered -= arr.segments_at_vertex[inter[0]]
    elif len(arr.segments) >= 2:
        warnings.warn("no two segments intersect; n guards are needed", NoIntersectionsWarning, stacklevel=2)
    for s in sorted(uncovered):
        verts = arr.segment_vertices(s)
        guards.append(min(verts[0], verts[-1]))
    return GuardSet(guards)


def _is_appropriate(arr: Arrangement, u: int) -> bool:
    # A leaf is appropriate when its parent sees everything any other vertex
    # seeing it could: its segment is one edge, or two edges ending in a leaf.
    if arr.degree(u) != 1:
        return False
    (e,) = arr.incident_edges[u]
    es = arr.edges_on_segment[arr.edges[e].segment]
    if len(es) == 1:
        return True
    if len(es) == 2:
        other = es[1] if es[0] == e else es[0]
        parent = arr.edges[e].other(u)
        return arr.degree(arr.edges[other].other(parent)) == 1
    return False


def _require_forest(arr: Arrangement) -> None:
    e = find_cycle_edge(arr)
    if e is not None:
        raise NotATreeError(f"arrangement graph has a cycle through edge {e}")


def appropriate_leaves(arr: Arrangement) -> set[int]:
    _require_forest(arr)
    return {u for u in arr.vertices if _is_appropriate(arr, u)}


def solve_tree(arr: Arrangement, debug: bool = False) -> GuardSet:
    """Minimum guard set for an arrangement whose graph is a forest.

    Repeatedly takes the lowest-id appropriate leaf, guards its parent,
    deletes every segment the guard sees and merges vertices left inside a
    single segment. ``debug`` rebuilds the residual from scratch after every
    step and compares.
    """
    _require_forest(arr)
    work = arr.copy()
    heap = sorted(work.vertices)
    guards = []
    while work.edges:
        while True:
            if not heap:
                raise ArrangementError("no appropriate leaf in a nonempty forest")
            u = heapq.heappop(heap)
            if u in work.vertices and _is_appropriate(work, u):
                break
        (e,) = work.incident_edges[u]
        v = work.edges[e].other(u)
        guards.append(v)
        affected = work.remove_segments(work.segments_at_vertex[v])
        for s in affected:
            for w in work.segment_vertices(s):
                heapq.heappush(heap, w)
        if debug:
            rebuilt = build_arrangement(list(work.segments.values()))
            if rebuilt.signature() != work.signature():
                raise AssertionError(f"residual diverged from rebuild after guarding vertex {v}")
    return GuardSet(guards)
