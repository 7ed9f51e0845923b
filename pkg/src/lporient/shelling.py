"""Facet orderings of the n-cube and the shelling / good-sequence correspondence.

Facet ``+i`` is ``x_i = 1`` and ``-i`` is ``x_i = 0``, mirroring the
vertex names of the dual crosspolytope.
"""

from __future__ import annotations

import itertools

from .pairseq import PairSequence, is_good
from .polytope import FormatError
from .realize import realize


class NotAShelling(ValueError):
    pass


def check_ordering(fo):
    fo = tuple(int(x) for x in fo)
    n = len(fo) // 2
    if not fo or sorted(fo, key=lambda v: (abs(v), v < 0)) != [s * i for i in range(1, n + 1) for s in (1, -1)]:
        raise ValueError(f"{fo} is not an ordering of the 2n cube facets")
    return fo


def parse_ordering(text):
    try:
        fo = tuple(int(x) for x in text.strip().split(","))
        return check_ordering(fo)
    except ValueError as exc:
        raise FormatError(f"bad facet ordering {text!r}: {exc}") from None


def format_ordering(fo):
    return ",".join(f"+{v}" if v > 0 else str(v) for v in fo)


def ordering_to_sequence(fo):
    fo = check_ordering(fo)
    pos = {v: j for j, v in enumerate(fo, 1)}
    return PairSequence(tuple((pos[i], pos[-i]) for i in range(1, len(fo) // 2 + 1)))


def is_shelling(fo):
    return is_good(ordering_to_sequence(fo)).good


def _square_edges(facet):
    """Edges of a 3-cube facet, named by the other facet containing them, in cyclic order."""
    i = abs(facet)
    a, b = [j for j in (1, 2, 3) if j != i]
    return (a, b, -a, -b)


def is_shelling_direct_3cube(fo):
    """Shelling test for the 3-cube straight from the definition.

    Each new square must meet the earlier ones in a nonempty contiguous path
    of its boundary 4-cycle, or in the whole cycle at the final step.
    """
    fo = check_ordering(fo)
    if len(fo) != 6:
        raise ValueError("direct shelling oracle is for the 3-cube only")
    for j in range(1, 6):
        cyc = _square_edges(fo[j])
        seen = set(fo[:j])
        hit = [e in seen for e in cyc]
        count = sum(hit)
        if count == 0:
            return False
        if count == 4:
            if j != 5:
                return False
            continue
        # contiguous on a 4-cycle: exactly one run start
        starts = sum(1 for q in range(4) if hit[q] and not hit[q - 1])
        if starts != 1:
            return False
    return True


def all_orderings(n):
    facets = [s * i for i in range(1, n + 1) for s in (1, -1)]
    return itertools.permutations(facets)


def count_shellings(n, first=None):
    """Accepted orderings and total, by exhaustive sweep.

    With ``first`` set, only orderings starting with that facet are swept.
    """
    idx = {s * i: 2 * (i - 1) + (s < 0) for i in range(1, n + 1) for s in (1, -1)}
    if first is None:
        orderings = all_orderings(n)
    else:
        rest = [f for f in idx if f != first]
        orderings = ((first,) + tail for tail in itertools.permutations(rest))
    total = acc = 0
    for fo in orderings:
        total += 1
        pos = [0] * (2 * n)
        for j, f in enumerate(fo, 1):
            pos[idx[f]] = j
        pairs = sorted((min(pos[2 * i], pos[2 * i + 1]), max(pos[2 * i], pos[2 * i + 1]))
                       for i in range(n))
        top = 0
        for k in range(1, n):
            top = max(top, pairs[k - 1][1])
            if top == 2 * k:
                break
        else:
            acc += 1
    return acc, total


def line_shelling_witness(fo):
    """Dual crosspolytope realization whose ``x_1`` order matches the facet order."""
    s = ordering_to_sequence(fo)
    v = is_good(s)
    if not v.good:
        raise NotAShelling(f"not a shelling: break k={v.break_k}")
    return realize(s)
