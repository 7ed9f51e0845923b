import random
from fractions import Fraction

import pytest

from lporient.pairseq import all_sequences, is_good, parse_sequence
from lporient.polytope import FormatError
from lporient.realize import (
    BadSequence,
    ExtensionError,
    Realization,
    det,
    extend_realization,
    induced_sequence,
    parse_realization,
    realize,
    verify_crosspolytope,
)

P = parse_sequence


def standard_cross(d):
    pts = []
    for i in range(d):
        for s in (1, -1):
            pts.append(tuple(s if j == i else 0 for j in range(d)))
    return pts


def test_det_small():
    assert det([[2, 0], [0, 3]]) == 6
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[1, 2], [2, 4]]) == 0
    assert det([[Fraction(1, 2), 1, 0], [0, 1, 1], [1, 0, 1]]) == Fraction(3, 2)


@pytest.mark.parametrize("d", range(1, 7))
def test_standard_crosspolytope_verifies(d):
    res = verify_crosspolytope(standard_cross(d))
    assert res.ok and len(res.facets) == 2 ** d


def test_square_with_adjacent_pairing_fails():
    square = [(0, 0), (1, 0), (1, 1), (0, 1)]
    res = verify_crosspolytope(square, pairing=((0, 1), (2, 3)))
    assert not res.ok
    assert verify_crosspolytope(square, pairing=((0, 2), (1, 3))).ok


def test_degenerate_points_fail():
    pts = [(0, 0), (1, 0), (2, 0), (3, 0)]
    res = verify_crosspolytope(pts)
    assert not res.ok and res.failure is not None


def test_realize_base_and_small():
    rz = realize(P("(12)"))
    assert rz.points == ((1,), (2,))
    assert verify_crosspolytope(rz.points).ok
    rz = realize(P("(13)(24)"))
    assert verify_crosspolytope(rz.points).ok
    assert induced_sequence(rz) == P("(13)(24)")
    assert sorted(p[0] for p in rz.points) == [1, 2, 3, 4]
    with pytest.raises(BadSequence) as ei:
        realize(P("(12)(34)"))
    assert ei.value.break_k == 1


def test_realize_round_trip_octahedron():
    assert induced_sequence(realize(P("(14)(25)(36)"))) == P("(14)(25)(36)")


def test_realize_deterministic():
    s = P("(1,4)(2,6)(3,8)(5,7)")
    assert realize(s) == realize(s)


def test_induced_sequence_rejects_ties():
    with pytest.raises(ValueError):
        induced_sequence(Realization(((1, 0), (1, 1), (2, 0), (3, 0))))


def test_extend_examples():
    square = Realization(((1, 0), (-1, 0), (0, 1), (0, -1)))
    octa = extend_realization(square, (0, 0, -1), (0, 0, 1))
    assert verify_crosspolytope(octa.points).ok and octa.d == 3
    with pytest.raises(ExtensionError):
        extend_realization(square, (0, 0, 1), (0, 0, 2))
    with pytest.raises(ExtensionError):
        # crosses the plane outside the square
        extend_realization(square, (5, 5, -1), (5, 5, 1))


@pytest.mark.parametrize("d", [3, 4])
def test_extend_random_valid(d):
    rng = random.Random(d)
    base = Realization(standard_cross(d - 1))
    for _ in range(100):
        # interior point with l1 norm < 1
        w = [Fraction(rng.randint(-9, 9), 10 * (d - 1)) for _ in range(d - 1)]
        direction = [Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(d - 1)]
        a, b = Fraction(rng.randint(1, 9), 3), Fraction(rng.randint(1, 9), 3)
        y = tuple(wi - a * di for wi, di in zip(w, direction)) + (-a,)
        z = tuple(wi + b * di for wi, di in zip(w, direction)) + (b,)
        rz = extend_realization(base, y, z)
        res = verify_crosspolytope(rz.points)
        assert res.ok
        assert all(p[-1] != 0 for p in rz.points[-2:])
        assert all(not {2 * d - 2, 2 * d - 1} <= set(f.transversal) for f in res.facets)


def test_soundness_sweep_d4():
    count = 0
    for d in range(1, 5):
        for s in all_sequences(d):
            if not is_good(s).good:
                continue
            rz = realize(s)
            assert verify_crosspolytope(rz.points).ok
            assert induced_sequence(rz) == s
            count += 1
    assert count == 1 + 2 + 10 + 74


def test_bad_sequences_rejected():
    for d in range(2, 5):
        for s in all_sequences(d):
            if not is_good(s).good:
                with pytest.raises(BadSequence):
                    realize(s)


def test_realization_text_round_trip():
    rz = realize(P("(14)(25)(36)"))
    text = rz.to_text()
    assert text.splitlines()[0] == "crosspolytope 3"
    assert parse_realization(text) == rz


@pytest.mark.parametrize("text", [
    "", "crosspolytope 2\n+1: 1 0\n", "crosspolytope 1\n+1: 1\n+1: 2\n",
    "crosspolytope 1\n+1: 1 2\n-1: 3 4\n", "crosspolytope 1\n+1: x\n-1: 2\n",
])
def test_realization_parse_errors(text):
    with pytest.raises(FormatError):
        parse_realization(text)
