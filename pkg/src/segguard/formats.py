"""Line-oriented text formats.

Instance::

    gss 2
    s 0 0 4 0
    s 2 -2 2 2

Solution::

    guards 1
    G 2 2 0

Graph (``n`` then one ``e`` line per edge) and grid embedding (``p id x y``
lines plus ``e`` lines). ``#`` starts a comment everywhere. Rationals are
written ``p/q`` in lowest terms, or ``p`` when integral.
"""

from __future__ import annotations

import os
import tempfile
from fractions import Fraction
from typing import Iterable

from .arrangement import Arrangement, GssInstance, check_instance
from .geometry import Point, Segment, fmt_rational


class FormatError(ValueError):
    def __init__(self, msg: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line else msg)


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def _rational(tok: str, lineno: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"bad number {tok!r}", lineno) from None


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"bad integer {tok!r}", lineno) from None


def parse_instance(text: str, validate: bool = True) -> GssInstance:
    count = None
    segs = []
    for lineno, toks in _records(text):
        tag = toks[0]
        if tag == "gss":
            if count is not None or len(toks) != 2:
                raise FormatError("expected a single 'gss <n>' header", lineno)
            count = _int(toks[1], lineno)
        elif tag == "s":
            if count is None:
                raise FormatError("segment before 'gss <n>' header", lineno)
            if len(toks) != 5:
                raise FormatError("segment line needs 4 coordinates", lineno)
            x1, y1, x2, y2 = (_rational(t, lineno) for t in toks[1:])
            segs.append(Segment(Point(x1, y1), Point(x2, y2), len(segs)))
        else:
            raise FormatError(f"unknown record {tag!r}", lineno)
    if count is None:
        raise FormatError("missing 'gss <n>' header")
    if count != len(segs):
        raise FormatError(f"header announces {count} segments, found {len(segs)}")
    if validate:
        check_instance(segs)
    return GssInstance(segs)


def emit_instance(inst: GssInstance, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"gss {len(inst.segments)}")
    for s in inst.segments:
        out.append("s " + " ".join(fmt_rational(c) for c in (s.a.x, s.a.y, s.b.x, s.b.y)))
    return "\n".join(out) + "\n"


def parse_solution(text: str) -> list[tuple[int, Point]]:
    count = None
    guards = []
    for lineno, toks in _records(text):
        if toks[0] == "guards":
            if count is not None or len(toks) != 2:
                raise FormatError("expected a single 'guards <k>' header", lineno)
            count = _int(toks[1], lineno)
        elif toks[0] == "G":
            if count is None:
                raise FormatError("guard before 'guards <k>' header", lineno)
            if len(toks) != 4:
                raise FormatError("guard line is 'G <id> <x> <y>'", lineno)
            guards.append((_int(toks[1], lineno), Point(_rational(toks[2], lineno), _rational(toks[3], lineno))))
        else:
            raise FormatError(f"unknown record {toks[0]!r}", lineno)
    if count is None:
        raise FormatError("missing 'guards <k>' header")
    if count != len(guards):
        raise FormatError(f"header announces {count} guards, found {len(guards)}")
    return guards


def emit_solution(arr: Arrangement, guards: Iterable[int], comments: Iterable[str] = ()) -> str:
    ids = sorted(set(guards))
    out = [f"# {c}" for c in comments]
    out.append(f"guards {len(ids)}")
    for v in ids:
        p = arr.vertices[v]
        out.append(f"G {v} {fmt_rational(p.x)} {fmt_rational(p.y)}")
    return "\n".join(out) + "\n"


class SolutionMismatch(ValueError):
    pass


def resolve_solution(arr: Arrangement, guards: list[tuple[int, Point]]) -> list[int]:
    """Check that each listed guard names an arrangement vertex at the stated point."""
    ids = []
    for v, p in guards:
        if v not in arr.vertices:
            raise SolutionMismatch(f"guard {v} is not a vertex of the instance")
        if arr.vertices[v] != p:
            raise SolutionMismatch(f"guard {v} is at {arr.vertices[v]}, solution says {p}")
        ids.append(v)
    return ids


def parse_graph(text: str):
    from .reduction import PlanarCubicGraph

    n = None
    edges = []
    for lineno, toks in _records(text):
        if toks[0] == "n" and len(toks) == 2:
            if n is not None:
                raise FormatError("repeated 'n' header", lineno)
            n = _int(toks[1], lineno)
        elif toks[0] == "e" and len(toks) == 3:
            if n is None:
                raise FormatError("edge before 'n <count>' header", lineno)
            edges.append((_int(toks[1], lineno), _int(toks[2], lineno)))
        else:
            raise FormatError(f"unrecognised line {' '.join(toks)!r}", lineno)
    if n is None:
        raise FormatError("missing 'n <count>' header")
    return PlanarCubicGraph(n, edges)


def emit_graph(g) -> str:
    return "\n".join([f"n {g.n}"] + [f"e {u} {v}" for u, v in g.edges]) + "\n"


def parse_embedding(text: str):
    from .reduction import GridEmbedding

    pos = {}
    edges = []
    for lineno, toks in _records(text):
        if toks[0] == "p" and len(toks) == 4:
            v = _int(toks[1], lineno)
            if v in pos:
                raise FormatError(f"vertex {v} placed twice", lineno)
            pos[v] = (_int(toks[2], lineno), _int(toks[3], lineno))
        elif toks[0] == "e" and len(toks) == 3:
            edges.append((_int(toks[1], lineno), _int(toks[2], lineno)))
        else:
            raise FormatError(f"unrecognised line {' '.join(toks)!r}", lineno)
    return GridEmbedding(pos, edges)


def emit_embedding(d) -> str:
    lines = [f"p {v} {x} {y}" for v, (x, y) in sorted(d.positions.items())]
    lines += [f"e {u} {v}" for u, v in d.edges]
    return "\n".join(lines) + "\n"


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
