"""Pair sequences of acyclic crosspolytope orientations.

Topologically label the 2d vertices with 1..2d and read off the labels of
each antipodal pair; sorting pairs by their smaller element gives a
partition of {1..2d} that does not depend on the chosen labeling. A
sequence is *good* when no proper prefix of k pairs covers exactly
{1..2k}; good sequences are exactly the LP-realizable ones.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .polytope import CROSS, Cycle, FormatError, Orientation, topological_order


class CyclicOrientationError(ValueError):
    def __init__(self, cycle):
        super().__init__(f"orientation has a directed cycle {cycle.vertices}")
        self.cycle = cycle


@dataclass(frozen=True)
class PairSequence:
    pairs: tuple

    def __post_init__(self):
        pairs = tuple(tuple(sorted((int(a), int(b)))) for a, b in self.pairs)
        d = len(pairs)
        flat = sorted(x for p in pairs for x in p)
        if d == 0 or flat != list(range(1, 2 * d + 1)):
            raise ValueError(f"pairs {self.pairs} do not partition 1..{2 * d}")
        object.__setattr__(self, "pairs", tuple(sorted(pairs)))

    @property
    def d(self):
        return len(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __str__(self):
        return "".join(f"({a},{b})" for a, b in self.pairs)

    def compact(self):
        """The ``(14)(25)(36)`` spelling; only meaningful below ten labels."""
        return "".join(f"({a}{b})" for a, b in self.pairs)


_PAIR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")
_COMPACT = re.compile(r"\((\d)(\d)\)")


def parse_sequence(text):
    """Accept ``(1,4)(2,5)`` or, for single-digit labels, ``(14)(25)``."""
    s = text.strip()
    if not s:
        raise FormatError("empty pair sequence")
    pat = _PAIR if "," in s else _COMPACT
    pairs = []
    pos = 0
    for m in pat.finditer(s):
        if s[pos:m.start()].strip():
            raise FormatError(f"bad pair sequence {text!r}")
        pairs.append((int(m.group(1)), int(m.group(2))))
        pos = m.end()
    if s[pos:].strip() or not pairs:
        raise FormatError(f"bad pair sequence {text!r}")
    try:
        return PairSequence(tuple(pairs))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def all_sequences(d):
    """Every pair sequence of length d (``(2d-1)!!`` of them), lexicographic."""

    def rec(items):
        if not items:
            yield ()
            return
        first, rest = items[0], items[1:]
        for i, x in enumerate(rest):
            for tail in rec(rest[:i] + rest[i + 1:]):
                yield ((first, x),) + tail

    for pairs in rec(list(range(1, 2 * d + 1))):
        yield PairSequence(pairs)


# ---------------------------------------------------------------------------
# encoding
# ---------------------------------------------------------------------------

def _labelled_pairs(o, rng=None):
    if o.kind != CROSS:
        raise ValueError("pair sequences are defined for crosspolytopes")
    lab = topological_order(o, rng)
    if isinstance(lab, Cycle):
        raise CyclicOrientationError(lab)
    return sorted((tuple(sorted((lab[i], lab[-i]))), i) for i in range(1, o.dim + 1))


def encode(o, rng=None):
    """Pair sequence of an acyclic crosspolytope orientation."""
    return PairSequence(tuple(p for p, _ in _labelled_pairs(o, rng)))


def sequence_to_orientation(s):
    """Canonical orientation: pair i gets sequence pair i, ``+i`` the smaller label."""
    label = {}
    for i, (a, b) in enumerate(s.pairs, 1):
        label[i], label[-i] = a, b
    return Orientation.from_labels(CROSS, s.d, label)


def eliminate(s, i):
    """Drop the ``i``-th pair (1-based) and renumber labels onto 1..2d-2."""
    if s.d < 2:
        raise ValueError("cannot eliminate from a single pair")
    if not 1 <= i <= s.d:
        raise ValueError(f"pair index {i} outside 1..{s.d}")
    gone = s.pairs[i - 1]
    shift = lambda x: x - sum(1 for g in gone if g < x)  # noqa: E731
    return PairSequence(tuple((shift(a), shift(b)) for j, (a, b) in enumerate(s.pairs, 1) if j != i))


# ---------------------------------------------------------------------------
# goodness
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GoodnessVerdict:
    good: bool
    break_k: int | None = None


def is_good(s):
    top = 0
    for k, (_, b) in enumerate(s.pairs[:-1], 1):
        top = max(top, b)
        if top == 2 * k:
            return GoodnessVerdict(False, k)
    return GoodnessVerdict(True)


@dataclass(frozen=True)
class LPVerdict:
    lp: bool
    cycle: Cycle | None = None
    initial_pairs: tuple = ()  # polytope pair indices forming an initial set
    break_k: int | None = None
    sequence: PairSequence | None = None


def is_lp_orientation(o):
    """Decide LP-realizability of a crosspolytope orientation via goodness."""
    try:
        lp = _labelled_pairs(o)
    except CyclicOrientationError as exc:
        return LPVerdict(False, cycle=exc.cycle)
    s = PairSequence(tuple(p for p, _ in lp))
    v = is_good(s)
    if v.good:
        return LPVerdict(True, sequence=s)
    initial = tuple(sorted(i for _, i in lp[:v.break_k]))
    return LPVerdict(False, initial_pairs=initial, break_k=v.break_k, sequence=s)


def initial_pair_sets(o):
    """Proper nonempty pair-index sets S whose union has every cut edge pointing out.

    Works on the orientation directly, without any labeling.
    """
    d = o.dim
    out = []
    for r in range(1, d):
        for S in itertools.combinations(range(1, d + 1), r):
            inside = set(S)
            if all(o.has_arc(s * i, t * j) for i in inside for j in range(1, d + 1)
                   if j not in inside for s in (1, -1) for t in (1, -1)):
                out.append(S)
    return out


def double_factorial_odd(j):
    """``(2j-1)!!``, the number of perfect matchings of 2j items."""
    out = 1
    for x in range(1, 2 * j, 2):
        out *= x
    return out


def count_good(d):
    """Number of good pair sequences of length d, by first-break recursion."""
    if d < 1:
        raise ValueError("d must be positive")
    a = [0, 1]
    for n in range(2, d + 1):
        a.append(double_factorial_odd(n) - sum(a[k] * double_factorial_odd(n - k) for k in range(1, n)))
    return a[d]


# ---------------------------------------------------------------------------
# brute-force census
# ---------------------------------------------------------------------------

CENSUS_MAX_D = 5


@dataclass
class Census:
    d: int
    acyclic: int
    holt_klee: int
    lp: int
    hk_not_lp: list
    fibers: dict  # PairSequence -> number of acyclic orientations

    @property
    def fraction(self):
        return Fraction(self.lp, self.holt_klee) if self.holt_klee else Fraction(0)

    def report(self):
        f = self.fraction
        lines = ["acyclic holt_klee lp fraction",
                 f"{self.acyclic} {self.holt_klee} {self.lp} {f.numerator}/{f.denominator}",
                 f"hk_not_lp {len(self.hk_not_lp)}"]
        for s in sorted(self.fibers, key=lambda s: s.pairs):
            lines.append(f"fiber {s} {self.fibers[s]}")
        return "\n".join(lines) + "\n"


def acyclic_orientations(d, threads=None):
    """All acyclic orientations of the d-crosspolytope from labelings, deduplicated."""
    if d > CENSUS_MAX_D:
        raise ValueError(f"census limited to d <= {CENSUS_MAX_D}")
    from ._parallel import parallel_map
    from .polytope import vertices

    vs = vertices(CROSS, d)
    heads = list(itertools.permutations(range(1, 2 * d + 1), min(2, 2 * d)))
    chunks = parallel_map(_masks_for_prefix, [(d, vs, h) for h in heads], threads)
    masks = set()
    for c in chunks:
        masks.update(c)
    return [Orientation(CROSS, d, m) for m in sorted(masks)]


def _masks_for_prefix(args):
    d, vs, head = args
    rest = [x for x in range(1, 2 * d + 1) if x not in head]
    out = set()
    for tail in itertools.permutations(rest):
        out.add(Orientation.from_labels(CROSS, d, dict(zip(vs, head + tail))).mask)
    return out


def _classify(o):
    from .holtklee import is_holt_klee

    return encode(o), is_holt_klee(o).passed, is_lp_orientation(o).lp


def count_lp_orientations_bruteforce(d, threads=None):
    """Census over all (2d)! labelings; returns a :class:`Census`."""
    from ._parallel import parallel_map

    orients = acyclic_orientations(d, threads)
    rows = parallel_map(_classify, orients, threads)
    fibers = Counter(s for s, _, _ in rows)
    hk = sum(1 for _, h, _ in rows if h)
    lp = sum(1 for _, _, x in rows if x)
    bad = [o for o, (_, h, x) in zip(orients, rows) if h and not x]
    return Census(d, len(orients), hk, lp, bad, dict(fibers))
