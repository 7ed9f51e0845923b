"""A doubly-exponential class of Holt-Klee orientations of the n-cube.

Edges changing place ``i < n`` point toward the endpoint with a 1 there.
Edges changing the last place are decided by the weight of the shared
``(n-1)``-bit prefix against ``r = n // 2``: lighter prefixes point toward
last coordinate 1, heavier ones toward 0, and prefixes of weight exactly
``r`` are free.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .polytope import CUBE, Orientation


def _free_prefixes(n):
    r = n // 2
    return [p for p in range(1 << (n - 1)) if bin(p).count("1") == r]


def free_edges(n):
    """Free last-place edges ``(p0, p1)``, ordered by prefix value."""
    if n < 2:
        raise ValueError("free_edges needs n >= 2")
    return [(p << 1, p << 1 | 1) for p in _free_prefixes(n)]


def family_size_log2(n):
    """Exponent of the class size: ``C(n-1, n//2)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return comb(n - 1, n // 2)


@dataclass(frozen=True)
class FamilyAssignment:
    n: int
    free_bits: tuple

    def __post_init__(self):
        bits = tuple(int(b) for b in self.free_bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("free bits must be 0 or 1")
        want = family_size_log2(self.n)
        if len(bits) != want:
            raise ValueError(f"n={self.n} needs {want} free bits, got {len(bits)}")
        object.__setattr__(self, "free_bits", bits)

    @classmethod
    def from_index(cls, n, index):
        """Assignment whose free bits spell ``index`` most-significant first."""
        m = family_size_log2(n)
        return cls(n, tuple(index >> (m - 1 - j) & 1 for j in range(m)))


def build_family_orientation(a):
    n = a.n
    r = n // 2
    free = {p: b for p, b in zip(_free_prefixes(n), a.free_bits)}

    def forward(u, v):
        # canonical edge u < v, so v has the extra 1
        if (u ^ v) != 1:
            return True
        w = bin(u >> 1).count("1")
        if w < r:
            return True
        if w > r:
            return False
        return bool(free[u >> 1])

    return Orientation.from_function(CUBE, n, forward)


def iter_family(n):
    for i in range(1 << family_size_log2(n)):
        yield build_family_orientation(FamilyAssignment.from_index(n, i))
