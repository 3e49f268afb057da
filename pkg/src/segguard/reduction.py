"""Vertex cover on planar graphs of degree <= 3 as a guarding instance.

The pipeline draws the graph on an integer grid with straight edges, finds
maximal runs of collinear edges, and nudges every second interior vertex of
each run off its line by at most ``1/(6n)``. In the resulting drawing no two
adjacent edges are collinear, so each edge is its own segment, a guard sees
exactly the edges at its vertex, and minimum guard sets are exactly minimum
vertex covers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional

import networkx as nx

from .arrangement import GssInstance
from .geometry import (
    CanonicalLine,
    Hit,
    Orientation,
    Point,
    Segment,
    diameter_sq,
    dist_sq,
    eta_and_diameter,
    intersect,
    orientation,
    point_line_distance_sq,
    pt,
)


class ReductionError(ValueError):
    pass


class NotPlanarError(ReductionError):
    def __init__(self, certificate):
        self.certificate = sorted(tuple(sorted(e)) for e in certificate)
        super().__init__(f"graph is not planar; Kuratowski subgraph edges {self.certificate}")


class DegreeError(ReductionError):
    pass


@dataclass
class PlanarCubicGraph:
    n: int
    edges: list[tuple[int, int]]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ReductionError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ReductionError(f"edge ({u}, {v}) out of range for n={self.n}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ReductionError(f"repeated edge {key}")
            seen.add(key)
        self.edges = sorted(seen)

    def require_max_degree(self, k: int = 3) -> None:
        bad = [v for v, d in self.degrees().items() if d > k]
        if bad:
            raise DegreeError(f"vertices {bad} have degree > {k}")

    def degrees(self) -> dict[int, int]:
        deg = dict.fromkeys(range(self.n), 0)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "PlanarCubicGraph":
        index = {v: i for i, v in enumerate(sorted(g.nodes))}
        return cls(len(index), [(index[u], index[v]) for u, v in g.edges])


@dataclass
class GridEmbedding:
    positions: dict[int, tuple[int, int]]
    edges: list[tuple[int, int]]

    @property
    def n(self) -> int:
        return len(self.positions)

    def points(self) -> dict[int, Point]:
        return {v: pt(x, y) for v, (x, y) in self.positions.items()}

    def box(self) -> tuple[int, int]:
        xs = [x for x, _ in self.positions.values()] or [0]
        ys = [y for _, y in self.positions.values()] or [0]
        return max(xs) - min(xs), max(ys) - min(ys)


@dataclass
class CollinearChain:
    line: CanonicalLine
    vertices: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.vertices)


@dataclass
class GeneralPositionDrawing:
    positions: dict[int, Point]
    edges: list[tuple[int, int]]
    moves: list[tuple[int, Point, Point]] = field(default_factory=list)
    budget: Fraction = Fraction(0)


@dataclass
class Certificate:
    n: int
    budget: Fraction
    diameter_sq: Fraction
    eta_sq: Optional[Fraction]
    moved: int
    max_move_sq: Fraction
    collinear_pairs: list = field(default_factory=list)
    crossings: list = field(default_factory=list)
    budget_violations: list = field(default_factory=list)
    clearance_violations: list = field(default_factory=list)
    bound_violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.collinear_pairs
            or self.crossings
            or self.budget_violations
            or self.clearance_violations
            or self.bound_violations
        )

    def first_violation(self):
        for name in ("collinear_pairs", "crossings", "budget_violations", "clearance_violations", "bound_violations"):
            items = getattr(self, name)
            if items:
                return name, items[0]
        return None

    def summary(self) -> str:
        return (
            f"certificate {'ok' if self.ok else 'FAILED'}: n={self.n} moved={self.moved} "
            f"collinear_pairs={len(self.collinear_pairs)} crossings={len(self.crossings)} "
            f"budget_violations={len(self.budget_violations)} "
            f"clearance_violations={len(self.clearance_violations)} "
            f"bound_violations={len(self.bound_violations)}"
        )


# -- embedding ----------------------------------------------------------


def fary_embed(g: PlanarCubicGraph) -> GridEmbedding:
    """Straight-line plane drawing on the ``(2n-4) x (n-2)`` grid (shift method).

    Works for any simple planar graph; degrees are not checked here. Raises
    :class:`NotPlanarError` carrying a Kuratowski subgraph otherwise.
    """
    G = g.to_networkx()
    planar, emb = nx.check_planarity(G, counterexample=True)
    if not planar:
        raise NotPlanarError(emb.edges)
    if g.n <= 1:
        pos = {v: (0, 0) for v in range(g.n)}
    else:
        pos = nx.combinatorial_embedding_to_pos(emb)
    xs = min(x for x, _ in pos.values())
    ys = min(y for _, y in pos.values())
    return GridEmbedding({v: (pos[v][0] - xs, pos[v][1] - ys) for v in range(g.n)}, list(g.edges))


def within_grid_box(d: GridEmbedding) -> bool:
    """Whether the drawing fits the looser ``(2n-2) x (n-2)`` box, from the origin."""
    n = d.n
    return all(0 <= x <= max(2 * n - 2, 0) and 0 <= y <= max(n - 2, 0) for x, y in d.positions.values())


def plane_violations(positions: dict[int, Point], edges) -> list:
    """Pairs of edges meeting anywhere but at a shared endpoint."""
    bad = []
    segs = [(e, Segment(positions[e[0]], positions[e[1]])) for e in edges]
    for (e, s), (f, t) in itertools.combinations(segs, 2):
        hit = intersect(s, t)
        shared = set(e) & set(f)
        if hit.kind is Hit.EMPTY:
            continue
        if shared and hit.kind is Hit.SHARED_ENDPOINT and hit.point == positions[next(iter(shared))]:
            continue
        bad.append((e, f))
    return bad


# -- collinear chains ---------------------------------------------------


def find_collinear_chains(d) -> list[CollinearChain]:
    """Maximal runs of consecutive collinear edges, each listed left to right.

    ``d`` is a :class:`GridEmbedding` or :class:`GeneralPositionDrawing`.
    Edges on a common line that do not link up are not chained.
    """
    P = d.points() if isinstance(d, GridEmbedding) else d.positions
    keyed = []
    for u, v in d.edges:
        a, b = sorted((P[u], P[v]))
        first, last = (u, v) if P[u] == a else (v, u)
        keyed.append((CanonicalLine.through(a, b), a, first, last))
    keyed.sort(key=lambda k: (k[0].sort_key(), k[1]))

    chains = []
    for line, group in itertools.groupby(keyed, key=lambda k: k[0]):
        run = []
        for _, _, first, last in group:
            if run and run[-1] == first:
                run.append(last)
            else:
                if len(run) >= 3:
                    chains.append(CollinearChain(line, tuple(run)))
                run = [first, last]
        if len(run) >= 3:
            chains.append(CollinearChain(line, tuple(run)))
    return chains


# -- displacement -------------------------------------------------------


def _ceil_sqrt(q: Fraction) -> Fraction:
    # Smallest k/den with (k/den)^2 >= q, den = q.denominator; within 2x of sqrt(q).
    num, den = q.numerator, q.denominator
    k = isqrt(num * den)
    if k * k < num * den:
        k += 1
    return Fraction(k, den)


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def displace_vertices(d: GridEmbedding, chains: list[CollinearChain], budget: Optional[Fraction] = None) -> GeneralPositionDrawing:
    """Move every second interior vertex of each chain off the chain's line.

    Moved vertices are u_2, u_4, ... short of the last vertex. All moves of a
    chain go to one side of its line. A degree-2 vertex moves vertically
    (horizontally if the line is vertical) by exactly ``budget``; a degree-3
    vertex moves along its third edge, towards that edge's far end, by a
    rational amount in ``(budget/2, budget]``. ``budget`` defaults to
    ``1/(6n)``.
    """
    n = d.n
    if budget is None:
        budget = Fraction(1, 6 * n)
    P = d.points()
    adj = {v: set() for v in P}
    for u, v in d.edges:
        adj[u].add(v)
        adj[v].add(u)
    new = dict(P)
    step = {}
    moved = set()

    for chain in chains:
        verts = chain.vertices
        for v in verts[1:-1]:
            if len(adj[v]) > 3:
                raise DegreeError(f"chain vertex {v} has degree {len(adj[v])}")
        first, last = P[verts[0]], P[verts[-1]]
        normal = (-(last.y - first.y), last.x - first.x)
        targets = list(range(1, len(verts) - 1, 2))

        third = {}
        for i in targets:
            v = verts[i]
            others = adj[v] - {verts[i - 1], verts[i + 1]}
            if others:
                (w,) = others
                third[v] = (P[w].x - P[v].x, P[w].y - P[v].y)
        side = 1
        for i in targets:
            if verts[i] in third:
                side = 1 if _dot(third[verts[i]], normal) > 0 else -1
                break

        for i in targets:
            v = verts[i]
            if v in moved:
                raise ReductionError(f"vertex {v} would be moved twice")
            if v in third:
                vec = third[v]
                scale = budget / _ceil_sqrt(vec[0] ** 2 + vec[1] ** 2)
            else:
                vec = (1, 0) if chain.line.kind == "vertical" else (0, 1)
                if _dot(vec, normal) * side < 0:
                    vec = (-vec[0], -vec[1])
                scale = budget
            step[v] = (vec, scale)
            new[v] = Point(P[v].x + scale * vec[0], P[v].y + scale * vec[1])
            moved.add(v)

    _repair_collinear(P, new, d.edges, step, budget)
    moves = [(v, P[v], new[v]) for v in step]
    return GeneralPositionDrawing(new, list(d.edges), moves, budget)


_SHRINK = (Fraction(3, 4), Fraction(7, 8), Fraction(5, 8), Fraction(13, 16), Fraction(11, 16))


def _repair_collinear(P, new, edges, step, budget):
    # Moves forced to opposite sides of one chain (a third edge on each side)
    # can line up again through the vertex between them. Shorten the later
    # move until the collinearity is gone, staying above half the budget.
    tried = dict.fromkeys(step, 0)
    while True:
        bad = [t for t in adjacent_collinear_pairs(new, edges) if any(v in step for v in t)]
        if not bad:
            return
        v = max(w for w in bad[0] if w in step)
        vec, scale = step[v]
        while True:
            if tried[v] >= len(_SHRINK):
                raise ReductionError(f"cannot move vertex {v} off the collinearity {bad[0]}")
            f = _SHRINK[tried[v]]
            tried[v] += 1
            cand = (scale * f) ** 2 * (vec[0] ** 2 + vec[1] ** 2)
            if cand * 4 > budget * budget:
                break
        new[v] = Point(P[v].x + scale * f * vec[0], P[v].y + scale * f * vec[1])


# -- verification -------------------------------------------------------


def adjacent_collinear_pairs(positions: dict[int, Point], edges) -> list:
    adj = {v: set() for v in positions}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    bad = []
    for v in sorted(adj):
        for a, b in itertools.combinations(sorted(adj[v]), 2):
            if orientation(positions[a], positions[v], positions[b]) is Orientation.COLLINEAR:
                bad.append((a, v, b))
    return bad


def verify_general_position(before: GridEmbedding, after: GeneralPositionDrawing, check_bounds: bool = True) -> Certificate:
    """Check a displaced drawing exactly and report every violation found."""
    n = before.n
    budget = Fraction(1, 6 * n) if n else Fraction(0)
    P0 = before.points()
    P1 = after.positions
    if set(P0) != set(P1) or sorted(map(tuple, map(sorted, before.edges))) != sorted(map(tuple, map(sorted, after.edges))):
        raise ReductionError("drawings have different vertex or edge sets")

    diam_sq = diameter_sq(P0.values())
    try:
        eta_sq = eta_and_diameter(list(P0.values()))[0]
    except ValueError:
        # Fewer than two points, or all of them on one line.
        eta_sq = None

    cert = Certificate(n=n, budget=budget, diameter_sq=diam_sq, eta_sq=eta_sq, moved=len(after.moves), max_move_sq=Fraction(0))
    if check_bounds:
        if diam_sq >= 9 * n * n:
            cert.bound_violations.append(("diameter_sq >= 9n^2", diam_sq))
        if eta_sq is not None and eta_sq * 9 * n * n <= 1:
            cert.bound_violations.append(("eta_sq <= 1/(9n^2)", eta_sq))

    cert.collinear_pairs = adjacent_collinear_pairs(P1, after.edges)
    cert.crossings = plane_violations(P1, after.edges)

    moved = set()
    for v, old, new in after.moves:
        m = dist_sq(old, new)
        cert.max_move_sq = max(cert.max_move_sq, m)
        if v in moved:
            cert.budget_violations.append((v, "moved twice"))
        moved.add(v)
        if old != P0[v] or new != P1[v]:
            cert.budget_violations.append((v, "move log does not match drawings"))
        if m == 0 or m > budget * budget:
            cert.budget_violations.append((v, m))
    for v in P0:
        if v not in moved and P0[v] != P1[v]:
            cert.budget_violations.append((v, "moved without a log entry"))

    fixed = sorted(v for v in P0 if v not in moved)
    lines = {}
    for a, b in itertools.combinations(fixed, 2):
        if P0[a] != P0[b]:
            lines.setdefault(CanonicalLine.through(P0[a], P0[b]), (a, b))
    for v in sorted(moved):
        for line, pair in lines.items():
            if line.contains(P0[v]):
                continue
            if point_line_distance_sq(P1[v], line) <= budget * budget:
                cert.clearance_violations.append((v, pair))
    return cert


# -- the reduction ------------------------------------------------------


@dataclass
class Reduction:
    graph: PlanarCubicGraph
    instance: GssInstance
    K: int
    embedding: GridEmbedding
    drawing: GeneralPositionDrawing
    chains: list[CollinearChain]
    certificate: Certificate
    edge_of_segment: list[tuple[int, int]]


def reduce_3pvc_to_gss(g: PlanarCubicGraph, M: int, embedding: Optional[GridEmbedding] = None) -> Reduction:
    """Turn ``(g, M)`` into a guarding instance with the same bound ``K = M``.

    Segment ``i`` of the instance is graph edge ``edge_of_segment[i]`` drawn
    between its displaced endpoints. A supplied ``embedding`` skips the grid
    drawing step; it must be a plane drawing inside the grid box.
    """
    if embedding is None:
        embedding = fary_embed(g)
        g.require_max_degree(3)
    else:
        g.require_max_degree(3)
        if sorted(map(tuple, map(sorted, embedding.edges))) != g.edges or set(embedding.positions) != set(range(g.n)):
            raise ReductionError("embedding does not match the graph")
        if plane_violations(embedding.points(), embedding.edges):
            raise ReductionError("embedding is not a plane drawing")
    if not within_grid_box(embedding):
        raise ReductionError(f"embedding box {embedding.box()} exceeds the grid for n={embedding.n}")

    chains = find_collinear_chains(embedding)
    drawing = displace_vertices(embedding, chains)
    cert = verify_general_position(embedding, drawing)
    P = drawing.positions
    edges = sorted(g.edges)
    inst = GssInstance.from_segments(Segment(P[u], P[v]) for u, v in edges)
    return Reduction(g, inst, M, embedding, drawing, chains, cert, edges)
