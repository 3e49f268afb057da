"""Deterministic instance families."""

from __future__ import annotations

import random
from functools import cmp_to_key
from math import gcd

from .arrangement import GssInstance, build_arrangement, is_forest, validate_instance
from .geometry import seg

FAMILIES = ("comb", "star", "random-tree", "random", "parallel")


def comb(k: int) -> GssInstance:
    """A base segment with ``k`` disjoint teeth standing on it; needs ``k`` guards."""
    segs = [seg(0, 0, 2 * k + 2, 0)]
    segs += [seg(2 * i + 1, 0, 2 * i + 1, 3) for i in range(k)]
    return GssInstance.from_segments(segs)


def _directions(k: int):
    """``k`` primitive integer directions spread evenly by angle."""
    r = 1
    while True:
        dirs = [(dx, dy) for dx in range(-r, r + 1) for dy in range(-r, r + 1) if gcd(dx, dy) == 1]
        if len(dirs) >= k:
            break
        r += 1
    dirs.sort(key=cmp_to_key(_by_angle))
    return [dirs[i * len(dirs) // k] for i in range(k)]


def _by_angle(d, e):
    half = lambda v: 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1
    if half(d) != half(e):
        return half(d) - half(e)
    c = d[0] * e[1] - d[1] * e[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def star(k: int) -> GssInstance:
    """``k`` segments sharing the endpoint (0, 0)."""
    scale = 4
    return GssInstance.from_segments(seg(0, 0, scale * dx, scale * dy) for dx, dy in _directions(k))


def parallel(k: int) -> GssInstance:
    return GssInstance.from_segments(seg(0, 2 * i, 4, 2 * i) for i in range(k))


def _random_segment(rng, box, max_len=None):
    while True:
        x1, y1 = rng.randint(0, box), rng.randint(0, box)
        if max_len is None:
            x2, y2 = rng.randint(0, box), rng.randint(0, box)
        else:
            x2 = min(box, max(0, x1 + rng.randint(-max_len, max_len)))
            y2 = min(box, max(0, y1 + rng.randint(-max_len, max_len)))
        if (x1, y1) != (x2, y2):
            return x1, y1, x2, y2


def random_instance(k: int, seed: int, box: int = 32) -> GssInstance:
    """``k`` random segments with integer endpoints in ``[0, box]^2``."""
    rng = random.Random(seed)
    segs = []
    while len(segs) < k:
        cand = seg(*_random_segment(rng, box), id=len(segs))
        if not validate_instance(segs + [cand]):
            segs.append(cand)
    return GssInstance.from_segments(segs)


def _anchored_segment(rng, segs, box, max_len):
    # A segment through a lattice point of an existing segment, so it crosses
    # or touches it there.
    s = rng.choice(segs)
    (ax, ay), (bx, by) = (int(s.a.x), int(s.a.y)), (int(s.b.x), int(s.b.y))
    g = gcd(bx - ax, by - ay)
    i = rng.randint(0, g)
    px, py = ax + (bx - ax) // g * i, ay + (by - ay) // g * i
    dx, dy = rng.randint(-max_len // 2, max_len // 2), rng.randint(-max_len // 2, max_len // 2)
    back = rng.choice((0, 1, 1))
    return px - back * dx, py - back * dy, px + dx, py + dy


def random_tree(k: int, seed: int, box: int = 16, max_len: int = 8, attempts: int = 400) -> GssInstance:
    """Up to ``k`` random segments whose arrangement graph stays a forest.

    Most new segments are anchored on a lattice point of an earlier one so
    the forest is well connected. Candidates are redrawn until one keeps the
    graph acyclic; after ``attempts`` failures in a row the instance is
    returned as is.
    """
    rng = random.Random(seed)
    segs = []
    misses = 0
    while len(segs) < k and misses < attempts:
        if segs and rng.random() < 0.75:
            coords = _anchored_segment(rng, segs, box, max_len)
        else:
            coords = _random_segment(rng, box, max_len)
        if coords[:2] == coords[2:]:
            misses += 1
            continue
        cand = seg(*coords, id=len(segs))
        trial = segs + [cand]
        if not validate_instance(trial) and is_forest(build_arrangement(trial)):
            segs = trial
            misses = 0
        else:
            misses += 1
    return GssInstance.from_segments(segs)


def generate(family: str, k: int, seed: int = 0) -> GssInstance:
    if k < 1:
        raise ValueError("k must be at least 1")
    if family == "comb":
        return comb(k)
    if family == "star":
        return star(k)
    if family == "parallel":
        return parallel(k)
    if family == "random":
        return random_instance(k, seed)
    if family == "random-tree":
        return random_tree(k, seed)
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def vc_separation() -> GssInstance:
    """Two pencils of two segments each, centred at (0, 0) and (3, 2).

    Its plane graph needs 4 vertices in any vertex cover, but the two pencil
    centres guard every segment.
    """
    return GssInstance.from_segments(
        [seg(0, 0, 2, 4), seg(0, 0, 0, 4), seg(3, 2, 0, 1), seg(3, 2, 0, 2)]
    )
