import random

import pytest
from hypothesis import given, settings, strategies as st

from segguard.arrangement import (
    ArrangementError,
    GssInstance,
    InstanceError,
    build_arrangement,
    incident_edges,
    is_forest,
    merge_collinear_chain,
    validate_instance,
    visible_edges,
)
from segguard.generate import random_instance
from segguard.geometry import pt, seg
from segguard.oracles import brute_force_signature

PLUS = [seg(0, 0, 4, 0, 0), seg(2, -2, 2, 2, 1)]


def segments_strategy(max_n=12, box=32):
    c = st.integers(0, box)
    one = st.tuples(c, c, c, c).filter(lambda t: t[:2] != t[2:])
    return st.lists(one, min_size=1, max_size=max_n)


def _valid(raw):
    segs = []
    for t in raw:
        cand = seg(*t, id=len(segs))
        if not validate_instance(segs + [cand]):
            segs.append(cand)
    return segs


def test_plus_sign():
    arr = build_arrangement(PLUS)
    assert len(arr.vertices) == 5 and len(arr.edges) == 4
    assert all(len(es) == 2 for es in arr.edges_on_segment.values())
    center = arr.vertex_id((2, 0))
    assert arr.segments_at_vertex[center] == {0, 1}
    assert arr.intersections == {center}
    assert visible_edges(arr, center) == set(arr.edges)
    left = arr.vertex_id((0, 0))
    assert visible_edges(arr, left) == set(arr.edges_on_segment[0])
    assert len(incident_edges(arr, center)) == 4
    assert len(incident_edges(arr, left)) == 1


def test_parallel_segments():
    arr = build_arrangement([seg(0, 2 * i, 4, 2 * i, i) for i in range(3)])
    assert len(arr.vertices) == 6 and len(arr.edges) == 3
    for v in arr.vertices:
        (s,) = arr.segments_at_vertex[v]
        assert visible_edges(arr, v) == set(arr.edges_on_segment[s])


def test_triangle():
    arr = build_arrangement([seg(0, 0, 4, 0, 0), seg(4, 0, 2, 3, 1), seg(2, 3, 0, 0, 2)])
    assert len(arr.vertices) == 3 and len(arr.edges) == 3
    assert all(len(ss) == 2 for ss in arr.segments_at_vertex.values())


def test_t_junction_degree_three():
    arr = build_arrangement([seg(0, 0, 4, 0, 0), seg(2, 0, 2, 3, 1)])
    assert len(incident_edges(arr, arr.vertex_id((2, 0)))) == 3


def test_unknown_vertex():
    arr = build_arrangement(PLUS)
    with pytest.raises(ArrangementError):
        visible_edges(arr, 99)
    with pytest.raises(ArrangementError):
        incident_edges(arr, 99)


def test_validate_instance():
    assert validate_instance([seg(0, 0, 2, 0, 0), seg(1, 0, 3, 0, 1)]) == [("overlap-collinear", (0, 1))]
    assert validate_instance([seg(0, 0, 0, 0, 0)]) == [("degenerate", (0,))]
    assert validate_instance(PLUS) == []
    assert validate_instance([seg(0, 0, 2, 0, 0), seg(2, 0, 0, 0, 1)]) == [("duplicate-segment", (0, 1))]
    with pytest.raises(InstanceError) as exc:
        build_arrangement([seg(0, 0, 2, 0, 0), seg(1, 0, 3, 0, 1)])
    assert exc.value.problems == [("overlap-collinear", (0, 1))]


def test_edges_ordered_along_segment():
    # segment drawn right to left, crossed three times
    segs = [seg(10, 0, 0, 0, 0)] + [seg(x, -1, x, 1, i + 1) for i, x in enumerate((7, 2, 5))]
    arr = build_arrangement(segs)
    xs = [arr.vertices[v].x for v in arr.segment_vertices(0)]
    assert xs == [10, 7, 5, 2, 0]


def test_serialization_golden():
    text = build_arrangement([seg(0, 0, 3, 1, 0), seg(0, 1, 3, 0, 1)]).serialize()
    assert text == (
        "V 0 0 0\n"
        "V 1 0 1\n"
        "V 2 3/2 1/2\n"
        "V 3 3 0\n"
        "V 4 3 1\n"
        "E 0 0 2 0\n"
        "E 1 2 4 0\n"
        "E 2 1 2 1\n"
        "E 3 2 3 1\n"
    )


def test_merge_after_crossing_removed():
    arr = build_arrangement(PLUS)
    center = arr.vertex_id((2, 0))
    with pytest.raises(ArrangementError):
        merge_collinear_chain(arr, center)
    arr.remove_segments([1])
    assert center not in arr.vertices
    assert len(arr.edges_on_segment[0]) == 1
    assert arr.signature() == build_arrangement([PLUS[0]]).signature()


def test_merge_by_hand():
    arr = build_arrangement(PLUS)
    center = arr.vertex_id((2, 0))
    # strip the vertical segment's bookkeeping without the automatic merge
    for e in arr.edges_on_segment.pop(1):
        edge = arr.edges.pop(e)
        arr.incident_edges[edge.u].discard(e)
        arr.incident_edges[edge.v].discard(e)
    del arr.segments[1]
    for v in list(arr.vertices):
        arr.segments_at_vertex[v].discard(1)
        if not arr.segments_at_vertex[v]:
            arr._drop_vertex(v)
    merge_collinear_chain(arr, center)
    (e,) = arr.edges_on_segment[0]
    ends = {arr.vertices[arr.edges[e].u], arr.vertices[arr.edges[e].v]}
    assert ends == {pt(0, 0), pt(4, 0)}


def test_repeated_merges_collapse_segment():
    segs = [seg(0, 0, 10, 0, 0)] + [seg(x, -1, x, 1, i + 1) for i, x in enumerate(range(1, 10, 2))]
    arr = build_arrangement(segs)
    for s in range(1, 6):
        arr.remove_segments([s])
        assert arr.signature() == build_arrangement([t for t in segs if t.id == 0 or t.id > s]).signature()
    assert len(arr.edges_on_segment[0]) == 1


@settings(max_examples=60, deadline=None)
@given(segments_strategy())
def test_matches_brute_force(raw):
    segs = _valid(raw)
    assert build_arrangement(segs).signature() == brute_force_signature(segs)


@settings(max_examples=60, deadline=None)
@given(segments_strategy())
def test_counting_identities(raw):
    arr = build_arrangement(_valid(raw))
    E = len(arr.edges)
    assert sum(len(es) for es in arr.incident_edges.values()) == 2 * E
    assert sum(len(ss) for ss in arr.segments_at_vertex.values()) <= 2 * E
    if len(arr.vertices) >= 3:
        assert E <= 3 * len(arr.vertices) - 6
    for e in arr.edges.values():
        s = arr.segments[e.segment]
        assert s.contains(arr.vertices[e.u]) and s.contains(arr.vertices[e.v])
    for v in arr.vertices:
        assert arr.visible_edges(v) == {e for s in arr.segments_at_vertex[v] for e in arr.edges_on_segment[s]}


@settings(max_examples=40, deadline=None)
@given(segments_strategy(), st.randoms(use_true_random=False))
def test_incremental_removal_matches_rebuild(raw, rnd):
    segs = _valid(raw)
    arr = build_arrangement(segs)
    alive = {s.id for s in segs}
    order = sorted(alive)
    rnd.shuffle(order)
    for s in order[:-1]:
        arr.remove_segments([s])
        alive.discard(s)
        assert arr.signature() == build_arrangement([t for t in segs if t.id in alive]).signature()


def test_gss_instance_from_pairs():
    inst = GssInstance.from_segments([((0, 0), (1, 1)), seg(5, 5, 6, 6, 42)])
    assert [s.id for s in inst.segments] == [0, 1]
    assert build_arrangement(inst) is inst.arrangement


def test_forest_detection():
    assert is_forest(build_arrangement(PLUS))
    tri = build_arrangement([seg(0, 0, 4, 0, 0), seg(4, 0, 2, 3, 1), seg(2, 3, 0, 0, 2)])
    assert not is_forest(tri)


def test_random_instances_match_oracle():
    for seed in range(20):
        inst = random_instance(1 + seed % 12, seed)
        assert build_arrangement(inst).signature() == brute_force_signature(inst.segments)
