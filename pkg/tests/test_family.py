import pytest

from lporient.family import (
    FamilyAssignment,
    build_family_orientation,
    family_size_log2,
    free_edges,
    iter_family,
)
from lporient.holtklee import is_acyclic, is_holt_klee
from lporient.polytope import CUBE, parse_orientation, standard_cube
from oracles import pascal_binomial


def test_free_edges_examples():
    assert free_edges(2) == [(0b10, 0b11)]
    assert [format(u >> 1, "02b") for u, _ in free_edges(3)] == ["01", "10"]
    assert len(free_edges(5)) == 6
    with pytest.raises(ValueError):
        free_edges(1)


def test_family_size_examples():
    assert family_size_log2(5) == 6
    assert family_size_log2(1) == 1
    assert family_size_log2(11) == pascal_binomial(10, 5) == 252


def test_family_size_identity_and_growth():
    prev = family_size_log2(2)
    for n in range(2, 41):
        val = family_size_log2(n)
        assert val == pascal_binomial(n - 1, n // 2)
        if n >= 3:
            assert val >= prev
        prev = val


def test_n2_assignments():
    assert build_family_orientation(FamilyAssignment(2, (1,))) == standard_cube(2)
    want = parse_orientation("cube 2\n00 -> 01\n00 -> 10\n01 -> 11\n11 -> 10\n")
    got = build_family_orientation(FamilyAssignment(2, (0,)))
    assert got == want
    assert is_holt_klee(got).passed


def test_n1_is_both_segment_orientations():
    fam = list(iter_family(1))
    assert len(fam) == 2 and len(set(fam)) == 2


def test_length_mismatch():
    with pytest.raises(ValueError):
        FamilyAssignment(5, (0,) * 5)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_family_holt_klee_distinct_and_structural(n):
    fam = list(iter_family(n))
    assert len(fam) == 2 ** family_size_log2(n)
    assert len(set(fam)) == len(fam)
    for o in fam:
        assert is_acyclic(o)[0]
        for u, v in o.arcs():
            if (u ^ v) != 1:
                assert bin(v).count("1") > bin(u).count("1")
        assert is_holt_klee(o).passed
