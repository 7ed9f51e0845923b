"""Exact-rational crosspolytope realizations of good pair sequences.

All arithmetic uses :class:`fractions.Fraction`; facet side tests are sign
decisions and must never round.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .pairseq import PairSequence, eliminate, is_good
from .polytope import FormatError


class BadSequence(ValueError):
    def __init__(self, seq, break_k):
        super().__init__(f"BadSequence break k={break_k}")
        self.sequence = seq
        self.break_k = break_k


class ExtensionError(ValueError):
    """Points violate the preconditions for adding a new antipodal pair."""


@dataclass(frozen=True)
class Realization:
    """``2d`` points in d-space; point ``2(i-1)`` is ``+i``, ``2(i-1)+1`` is ``-i``.

    The objective is the first coordinate.
    """

    points: tuple

    def __post_init__(self):
        pts = tuple(tuple(Fraction(x) for x in p) for p in self.points)
        if not pts or len(pts) % 2:
            raise ValueError("realization needs an even, positive number of points")
        d = len(pts) // 2
        if any(len(p) != d for p in pts):
            raise ValueError(f"every point must have {d} coordinates")
        object.__setattr__(self, "points", pts)

    @property
    def d(self):
        return len(self.points) // 2

    @property
    def pairing(self):
        return tuple((2 * i, 2 * i + 1) for i in range(self.d))

    def to_text(self):
        lines = [f"crosspolytope {self.d}"]
        for j, p in enumerate(self.points):
            name = f"+{j // 2 + 1}" if j % 2 == 0 else f"-{j // 2 + 1}"
            lines.append(f"{name}: " + " ".join(str(x) for x in p))
        return "\n".join(lines) + "\n"

    def max_denominator_bits(self):
        return max(x.denominator.bit_length() for p in self.points for x in p)


def parse_realization(text):
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("empty realization")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "crosspolytope" or not head[1].isdigit():
        raise FormatError(f"bad header {lines[0]!r}")
    d = int(head[1])
    pts = {}
    for ln in lines[1:]:
        name, sep, rest = ln.partition(":")
        name = name.strip()
        if not sep or len(name) < 2 or name[0] not in "+-" or not name[1:].isdigit():
            raise FormatError(f"bad vertex line {ln!r}")
        i = int(name[1:])
        if not 1 <= i <= d:
            raise FormatError(f"pair index out of range in {ln!r}")
        j = 2 * (i - 1) + (name[0] == "-")
        if j in pts:
            raise FormatError(f"vertex {name} given twice")
        try:
            coords = tuple(Fraction(x) for x in rest.split())
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"bad coordinates in {ln!r}") from None
        if len(coords) != d:
            raise FormatError(f"vertex {name} needs {d} coordinates")
        pts[j] = coords
    if len(pts) != 2 * d:
        raise FormatError(f"expected {2 * d} vertices, got {len(pts)}")
    return Realization(tuple(pts[j] for j in range(2 * d)))


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------

def det(rows):
    """Determinant by fraction-exact Gaussian elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    out = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            out = -out
        out *= m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] / m[c][c]
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return out


def hyperplane(pts):
    """Normal ``a`` and offset ``b`` with ``a.x = b`` through d points in d-space.

    ``a`` is the cofactor vector of the difference matrix, so it is zero
    exactly when the points are affinely dependent.
    """
    d = len(pts[0])
    base = pts[0]
    diffs = [[p[i] - base[i] for i in range(d)] for p in pts[1:]]
    normal = []
    for i in range(d):
        minor = [[row[j] for j in range(d) if j != i] for row in diffs]
        normal.append((-1) ** i * det(minor) if minor else Fraction(1))
    return normal, sum(a * x for a, x in zip(normal, base))


def _side(plane, x):
    a, b = plane
    v = sum(ai * xi for ai, xi in zip(a, x)) - b
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class Facet:
    transversal: tuple  # point indices, one per pair
    normal: tuple
    offset: Fraction
    side: int  # sign of every other vertex


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    facets: tuple
    failure: tuple | None = None  # offending transversal
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_crosspolytope(points, pairing=None):
    """Check that every transversal spans a facet hyperplane.

    For each choice of one point per pair, the d chosen points must be
    affinely independent and the other d points strictly on one side.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    d = len(pts) // 2
    if pairing is None:
        pairing = tuple((2 * i, 2 * i + 1) for i in range(d))
    if len(pts) != 2 * d or len(pairing) != d or any(len(p) != d for p in pts):
        raise ValueError("need 2d points in dimension d and d pairs")
    if sorted(x for pr in pairing for x in pr) != list(range(2 * d)):
        raise ValueError("pairing must partition the point indices")
    facets = []
    for choice in itertools.product((0, 1), repeat=d):
        tr = tuple(pairing[i][c] for i, c in enumerate(choice))
        others = [pairing[i][1 - c] for i, c in enumerate(choice)]
        if d == 1:
            plane = ([Fraction(1)], pts[tr[0]][0])
        else:
            plane = hyperplane([pts[j] for j in tr])
        if not any(plane[0]):
            return VerifyResult(False, tuple(facets), tr, "degenerate transversal")
        sides = {_side(plane, pts[j]) for j in others}
        if len(sides) != 1 or 0 in sides:
            return VerifyResult(False, tuple(facets), tr, "transversal does not support a facet")
        facets.append(Facet(tr, tuple(plane[0]), plane[1], sides.pop()))
    return VerifyResult(True, tuple(facets))


def induced_sequence(rz):
    """Pair sequence read from ranking vertices by first coordinate."""
    firsts = [p[0] for p in rz.points]
    if len(set(firsts)) != len(firsts):
        raise ValueError("first coordinates are not distinct")
    rank = {j: r for r, j in enumerate(sorted(range(len(firsts)), key=firsts.__getitem__), 1)}
    return PairSequence(tuple((rank[a], rank[b]) for a, b in rz.pairing))


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def extend_realization(rz, y, z):
    """Lift ``rz`` into the hyperplane ``x_d = 0`` and add the antipodal pair (y, z).

    The open segment ``yz`` must cross that hyperplane in the relative
    interior of the old polytope; everything is checked exactly.
    """
    d = rz.d + 1
    y = tuple(Fraction(x) for x in y)
    z = tuple(Fraction(x) for x in z)
    if len(y) != d or len(z) != d:
        raise ExtensionError(f"new points need {d} coordinates")
    if y[-1] == 0 or z[-1] == 0 or (y[-1] > 0) == (z[-1] > 0):
        raise ExtensionError("new points must lie strictly on opposite sides of x_d = 0")
    t = y[-1] / (y[-1] - z[-1])
    w = tuple(a + t * (b - a) for a, b in zip(y[:-1], z[:-1]))
    old = verify_crosspolytope(rz.points)
    if not old:
        raise ExtensionError(f"base polytope fails verification at {old.failure}")
    for f in old.facets:
        if _side((f.normal, f.offset), w) != f.side:
            raise ExtensionError("segment misses the relative interior of the base polytope")
    pts = tuple(p + (Fraction(0),) for p in rz.points) + (y, z)
    res = Realization(pts)
    check = verify_crosspolytope(res.points)
    if not check:
        raise ExtensionError(f"extended polytope fails verification at {check.failure}")
    return res


def _slot_values(old, l, m):
    """First coordinates for new labels ``l < m`` among sorted ``old`` values."""
    # l >= 2 and l <= 2d-2 for the last pair of a good sequence with d >= 2
    lo, hi = old[l - 2], old[l - 1]
    if m == l + 1:
        step = (hi - lo) / 3
        return lo + step, lo + 2 * step
    l1 = (lo + hi) / 2
    if m == len(old) + 2:
        return l1, old[-1] + 1
    return l1, (old[m - 3] + old[m - 2]) / 2


def _interior_point(pts, r1):
    """Point of the old polytope's relative interior with first coordinate ``r1``."""
    n = len(pts)
    dim = len(pts[0])
    c = tuple(sum(p[i] for p in pts) / n for i in range(dim))
    if r1 == c[0]:
        return c
    target = min(pts, key=lambda p: p[0]) if r1 < c[0] else max(pts, key=lambda p: p[0])
    t = (r1 - c[0]) / (target[0] - c[0])
    return tuple(ci + t * (vi - ci) for ci, vi in zip(c, target))


def _integer_rescale(base, l, m):
    """Affine map of ``x_1`` sending old vertices onto their new ranks, if one exists."""
    old = sorted(p[0] for p in base.points)
    ranks = [r for r in range(1, len(old) + 3) if r not in (l, m)]
    alpha = Fraction(ranks[-1] - ranks[0], 1) / (old[-1] - old[0])
    beta = ranks[0] - alpha * old[0]
    if any(alpha * o + beta != r for o, r in zip(old, ranks)):
        return None
    return Realization(tuple((alpha * p[0] + beta,) + p[1:] for p in base.points))


def realize(s):
    """Exact realization of a good pair sequence, objective ``x_1``.

    Removes the last pair, realizes the rest in the hyperplane ``x_d = 0``
    and threads the removed pair through an interior point along
    ``e_1 + e_d`` so that its ``x_1`` values fall into the right slots.
    """
    v = is_good(s)
    if not v.good:
        raise BadSequence(s, v.break_k)
    if s.d == 1:
        return Realization(((Fraction(1),), (Fraction(2),)))
    base = realize(eliminate(s, s.d))
    l, m = s.pairs[-1]
    scaled = _integer_rescale(base, l, m)
    if scaled is not None:
        base, (l1, m1) = scaled, (Fraction(l), Fraction(m))
    else:
        l1, m1 = _slot_values(sorted(p[0] for p in base.points), l, m)
    old_max = max(p[0] for p in base.points)
    r1 = (l1 + min(m1, old_max)) / 2
    r = _interior_point(base.points, r1) + (Fraction(0),)
    y = (r[0] + (l1 - r1),) + r[1:-1] + (l1 - r1,)
    z = (r[0] + (m1 - r1),) + r[1:-1] + (m1 - r1,)
    return extend_realization(base, y, z)
