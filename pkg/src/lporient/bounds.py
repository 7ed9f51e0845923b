"""Counting bounds: LP-orientations of cubes versus the Holt-Klee family.

Everything is in log2 space with mpmath at ``PREC`` bits, so the huge
binomials are never turned into floats. The unspecified constant of the
sign-condition bound is the explicit parameter ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import mpmath

from .family import family_size_log2

PREC = 128
CROSSOVER_CAP = 10000


def _log2(x):
    return mpmath.log(mpmath.mpf(x), 2)


def _mpf(x):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def cube_lp_bound_log2(n, c=1):
    """log2 of ``(2n 2^n)^(2n(n+1)) * (c 2n)^(2n(n+1))``.

    The binomial over ``2n 2^n`` sign polynomials in ``2n(n+1)`` parameters
    is majorized by ``s^k``. The polynomial count uses ``n 2^n`` for the
    edge count, a factor 2 above the true ``n 2^(n-1)``; the slack is harmless.
    """
    if n < 1:
        raise ValueError("n must be positive")
    with mpmath.workprec(PREC):
        c = _mpf(c)
        if c <= 0:
            raise ValueError("c must be positive")
        k = 2 * n * (n + 1)
        return k * (_log2(2 * n) + n) + k * (mpmath.log(c, 2) + _log2(2 * n))


@dataclass(frozen=True)
class GeneralBound:
    log2: mpmath.mpf
    degenerate: bool  # f(d+1) > 2e, binomial taken as 1


def general_lp_bound_log2(e, f, d):
    """log2 of ``C(2e, f(d+1)) * f^(f(d+1))`` for a d-polytope with e edges, f facets."""
    if min(e, f, d) < 1:
        raise ValueError("e, f, d must be positive")
    k = f * (d + 1)
    degenerate = k > 2 * e
    with mpmath.workprec(PREC):
        b = mpmath.mpf(0) if degenerate else _log2(comb(2 * e, k))
        return GeneralBound(b + k * _log2(f), degenerate)


@dataclass(frozen=True)
class BoundReport:
    n: int
    lower_log2: int
    upper_log2: mpmath.mpf
    c: object

    @property
    def gap(self):
        return self.lower_log2 - self.upper_log2


def bound_report(n, c=1):
    return BoundReport(n, family_size_log2(n), cube_lp_bound_log2(n, c), c)


def crossover(c=1, cap=CROSSOVER_CAP):
    """Least n where the family exponent beats the LP upper-bound exponent."""
    for n in range(1, cap + 1):
        rep = bound_report(n, c)
        if rep.lower_log2 > rep.upper_log2:
            return rep
    raise OverflowError(f"no crossover below n={cap} for c={c}")


def scan(c, upto):
    return [bound_report(n, c) for n in range(1, upto + 1)]
