import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lporient.pairseq import parse_sequence, sequence_to_orientation
from lporient.polytope import (
    CAPS,
    CROSS,
    CUBE,
    CrossFace,
    CubeFace,
    Cycle,
    FormatError,
    Orientation,
    build_cross_edges,
    build_cube_edges,
    edges,
    enumerate_faces,
    face_subdigraph,
    parse_orientation,
    standard_cube,
    topological_order,
    whole_face,
)
from oracles import has_cycle_exhaustive


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (5, 80)])
def test_cube_edge_counts(n, count):
    es = build_cube_edges(n)
    assert len(es) == count
    scan = [(u, v) for u, v in itertools.combinations(range(1 << n), 2) if bin(u ^ v).count("1") == 1]
    assert sorted(es) == scan


@pytest.mark.parametrize("d,count", [(1, 0), (2, 4), (3, 12)])
def test_cross_edge_counts(d, count):
    assert len(build_cross_edges(d)) == count


def test_edge_closed_forms():
    for n in range(1, 11):
        assert len(build_cube_edges(n)) == n * 2 ** (n - 1)
    for d in range(1, 13):
        assert len(build_cross_edges(d)) == 2 * d * (d - 1)


def test_dimension_caps():
    with pytest.raises(ValueError):
        build_cube_edges(0)
    with pytest.raises(ValueError):
        build_cube_edges(CAPS[CUBE] + 1)
    with pytest.raises(ValueError):
        build_cross_edges(CAPS[CROSS] + 1)


def test_face_examples():
    assert len(enumerate_faces(CUBE, 3, 2)) == 6
    assert len(enumerate_faces(CROSS, 3, 2)) == 8
    assert len(enumerate_faces(CROSS, 4, 1)) == 24 == len(build_cross_edges(4))
    assert enumerate_faces(CROSS, 3, 3) == [CrossFace(3)]
    with pytest.raises(ValueError):
        enumerate_faces(CUBE, 3, 4)


def test_face_count_closed_forms():
    for n in range(1, 7):
        counts = [len(enumerate_faces(CUBE, n, k)) for k in range(n + 1)]
        assert counts == [comb(n, k) * 2 ** (n - k) for k in range(n + 1)]
        assert sum(counts) == 3 ** n
    for d in range(1, 6):
        proper = sum(len(enumerate_faces(CROSS, d, k)) for k in range(d))
        assert proper == 3 ** d - 1


def test_face_order_is_sorted_and_cube_faces_have_right_vertices():
    fs = enumerate_faces(CUBE, 4, 2)
    assert [f.pattern for f in fs] == sorted(f.pattern for f in fs)
    for f in fs:
        vs = f.vertices()
        assert len(vs) == 4
        pat = f.pattern
        for v in vs:
            s = format(v, "04b")
            assert all(p == "*" or p == c for p, c in zip(pat, s))
    assert CubeFace.from_pattern("0*1").pattern == "0*1"


def test_cross_face_rejects_antipodes():
    with pytest.raises(ValueError):
        CrossFace(3, (1, -1))


def test_subdigraph_examples():
    o = standard_cube(3)
    full = face_subdigraph(o, whole_face(CUBE, 3))
    assert full == o.successors
    g = face_subdigraph(o, CubeFace.from_pattern("**0"))
    assert set(g) == {0b000, 0b010, 0b100, 0b110}
    assert g[0b000] == [0b010, 0b100] and g[0b110] == []
    edge = face_subdigraph(o, CubeFace.from_pattern("0*1"))
    assert edge == {0b001: [0b011], 0b011: []}
    with pytest.raises(ValueError):
        face_subdigraph(o, CubeFace.from_pattern("**"))


def test_topological_order_examples():
    lab = topological_order(standard_cube(2))
    assert lab[0b00] == 1 and lab[0b11] == 4
    o = sequence_to_orientation(parse_sequence("(14)(25)(36)"))
    lab = topological_order(o)
    assert [sorted((lab[i], lab[-i])) for i in (1, 2, 3)] == [[1, 4], [2, 5], [3, 6]]


def test_topological_order_reports_cycle():
    o = sequence_to_orientation(parse_sequence("(14)(25)(36)"))
    # make the triangle +1 -> +2 -> +3 -> +1 cyclic
    arcs = [a for a in o.arcs() if set(a) != {1, 3}] + [(3, 1)]
    cyc_o = Orientation.from_arcs(CROSS, 3, arcs)
    res = topological_order(cyc_o)
    assert isinstance(res, Cycle)
    assert res.check(cyc_o)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_topological_order_iff_acyclic(data):
    kind, dim = data.draw(st.sampled_from([(CUBE, 2), (CUBE, 3), (CROSS, 3), (CROSS, 4), (CROSS, 6)]))
    mask = data.draw(st.integers(0, 2 ** len(edges(kind, dim)) - 1))
    o = Orientation(kind, dim, mask)
    res = topological_order(o)
    if isinstance(res, Cycle):
        assert has_cycle_exhaustive(o.successors)
        assert res.check(o)
    else:
        assert not has_cycle_exhaustive(o.successors)
        assert sorted(res.values()) == list(range(1, len(o.vertices()) + 1))
        assert all(res[u] < res[v] for u, v in o.arcs())


def test_topological_order_deterministic_and_random_tie_breaks():
    o = Orientation(CROSS, 4, 0)
    assert topological_order(o) == topological_order(o)
    rng = random.Random(3)
    for _ in range(10):
        lab = topological_order(o, rng)
        assert all(lab[u] < lab[v] for u, v in o.arcs())


def test_orientation_text_round_trip():
    o = sequence_to_orientation(parse_sequence("(13)(24)(57)(68)"))
    assert parse_orientation(o.to_text()) == o
    c = standard_cube(3)
    assert parse_orientation("# comment\n" + c.to_text()) == c
    text = "cube 2\n00 -> 01\n00 -> 10\n11 -> 01  # edge\n11 -> 10\n"
    sq = parse_orientation(text)
    assert sq.has_arc(0b11, 0b01) and not sq.has_arc(0b01, 0b11)


@pytest.mark.parametrize("text", [
    "", "cube x", "cube 2\n00 -> 01\n", "cube 2\n00 -> 11\n00 -> 01\n00 -> 10\n11 -> 01\n11 -> 10",
    "crosspolytope 2\n+1 -> -1", "simplex 3", "cube 2\n00 -> 01\n01 -> 00\n00 -> 10\n11 -> 01\n11 -> 10",
])
def test_orientation_parse_errors(text):
    with pytest.raises(FormatError):
        parse_orientation(text)


def test_orientation_equality_is_structural():
    a = Orientation.from_arcs(CUBE, 1, [(1, 0)])
    b = Orientation.from_labels(CUBE, 1, {0: 2, 1: 1})
    assert a == b and hash(a) == hash(b)
    assert a != standard_cube(1)
