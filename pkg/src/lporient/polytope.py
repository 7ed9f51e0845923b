"""Combinatorial models of the n-cube and the d-crosspolytope.

Cube vertices are ints: place ``i`` (1-based, left to right in the bit
string) is bit ``n - i``, so the canonical order is the binary value.
Crosspolytope vertices are signed ints ``+i`` / ``-i`` for pair ``i``;
canonical order is by pair index with ``+`` before ``-``.

An :class:`Orientation` stores one direction bit per canonical edge, so
equality and hashing are structural.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

CUBE = "cube"
CROSS = "crosspolytope"

# dimension caps; mutable configuration, read at call time
CAPS = {CUBE: 16, CROSS: 12}


class FormatError(ValueError):
    """Malformed text input."""


def _check_dim(kind, dim):
    if kind not in CAPS:
        raise ValueError(f"unknown polytope kind {kind!r}")
    if not 1 <= dim <= CAPS[kind]:
        raise ValueError(f"{kind} dimension {dim} outside 1..{CAPS[kind]}")


# ---------------------------------------------------------------------------
# vertices and edges
# ---------------------------------------------------------------------------

def cross_key(v):
    return (abs(v), v < 0)


def vertex_key(kind, v):
    return v if kind == CUBE else cross_key(v)


@lru_cache(maxsize=None)
def vertices(kind, dim):
    """All vertices in canonical order."""
    _check_dim(kind, dim)
    if kind == CUBE:
        return tuple(range(1 << dim))
    return tuple(s * i for i in range(1, dim + 1) for s in (1, -1))


@lru_cache(maxsize=None)
def _edges(kind, dim):
    _check_dim(kind, dim)
    if kind == CUBE:
        return tuple(sorted((v, v | (1 << b)) for v in range(1 << dim)
                            for b in range(dim) if not v >> b & 1))
    vs = vertices(kind, dim)
    return tuple((u, w) for u, w in itertools.combinations(vs, 2) if abs(u) != abs(w))


def build_cube_edges(n):
    """Undirected edges of the n-cube as ``(u, v)`` with ``u < v``."""
    return _edges(CUBE, n)


def build_cross_edges(d):
    """Undirected edges of the d-crosspolytope (every non-antipodal pair)."""
    return _edges(CROSS, d)


def edges(kind, dim):
    return _edges(kind, dim)


@lru_cache(maxsize=None)
def edge_index(kind, dim):
    return {e: j for j, e in enumerate(_edges(kind, dim))}


def format_vertex(kind, dim, v):
    if kind == CUBE:
        return format(v, f"0{dim}b")
    return f"+{v}" if v > 0 else str(v)


def parse_vertex(kind, dim, text):
    text = text.strip()
    if kind == CUBE:
        if len(text) != dim or set(text) - {"0", "1"}:
            raise FormatError(f"bad cube vertex {text!r}")
        return int(text, 2)
    if len(text) < 2 or text[0] not in "+-" or not text[1:].isdigit():
        raise FormatError(f"bad crosspolytope vertex {text!r}")
    i = int(text[1:])
    if not 1 <= i <= dim:
        raise FormatError(f"pair index out of range in {text!r}")
    return i if text[0] == "+" else -i


# ---------------------------------------------------------------------------
# faces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CubeFace:
    """Face of the n-cube: coordinates in ``mask`` are fixed to ``value``."""

    n: int
    mask: int
    value: int

    kind = CUBE

    def __post_init__(self):
        if self.value & ~self.mask:
            raise ValueError("face value set outside fixed mask")

    @classmethod
    def from_pattern(cls, pattern):
        n = len(pattern)
        mask = value = 0
        for i, ch in enumerate(pattern):
            bit = 1 << (n - 1 - i)
            if ch in "01":
                mask |= bit
                if ch == "1":
                    value |= bit
            elif ch != "*":
                raise FormatError(f"bad face pattern {pattern!r}")
        return cls(n, mask, value)

    @property
    def dim(self):
        return self.n - bin(self.mask).count("1")

    @property
    def pattern(self):
        out = []
        for i in range(self.n):
            bit = 1 << (self.n - 1 - i)
            out.append("*" if not self.mask & bit else "1" if self.value & bit else "0")
        return "".join(out)

    def vertices(self):
        free = [1 << b for b in range(self.n) if not self.mask >> b & 1]
        out = []
        for sub in range(1 << len(free)):
            v = self.value
            for j, bit in enumerate(free):
                if sub >> j & 1:
                    v |= bit
            out.append(v)
        return sorted(out)

    def __str__(self):
        return self.pattern


@dataclass(frozen=True)
class CrossFace:
    """Face of the d-crosspolytope; ``members=None`` is the whole polytope."""

    d: int
    members: tuple | None = None

    kind = CROSS

    def __post_init__(self):
        if self.members is None:
            return
        ms = tuple(sorted(set(self.members), key=cross_key))
        if not ms:
            raise ValueError("empty crosspolytope face")
        if len({abs(v) for v in ms}) != len(ms):
            raise ValueError("crosspolytope face holds both vertices of a pair")
        if any(not 1 <= abs(v) <= self.d for v in ms):
            raise ValueError("pair index out of range")
        object.__setattr__(self, "members", ms)

    @property
    def dim(self):
        return self.d if self.members is None else len(self.members) - 1

    def vertices(self):
        return list(vertices(CROSS, self.d)) if self.members is None else list(self.members)

    def __str__(self):
        if self.members is None:
            return "all"
        return "{" + ",".join(format_vertex(CROSS, self.d, v) for v in self.members) + "}"


def whole_face(kind, dim):
    return CubeFace(dim, 0, 0) if kind == CUBE else CrossFace(dim)


@lru_cache(maxsize=None)
def _faces(kind, dim, k):
    _check_dim(kind, dim)
    if not 0 <= k <= dim:
        raise ValueError(f"face dimension {k} outside 0..{dim}")
    if kind == CUBE:
        out = []
        for fixed in itertools.combinations(range(dim), dim - k):
            mask = sum(1 << b for b in fixed)
            for bits in itertools.product((0, 1), repeat=len(fixed)):
                value = sum(1 << b for b, x in zip(fixed, bits) if x)
                out.append(CubeFace(dim, mask, value))
        return tuple(sorted(out, key=lambda f: f.pattern))
    if k == dim:
        return (CrossFace(dim),)
    out = []
    for idx in itertools.combinations(range(1, dim + 1), k + 1):
        for signs in itertools.product((1, -1), repeat=k + 1):
            out.append(CrossFace(dim, tuple(s * i for s, i in zip(signs, idx))))
    return tuple(out)


def enumerate_faces(kind, dim, k):
    """All k-faces in deterministic lexicographic order.

    Cube faces sort by pattern string (``*`` < ``0`` < ``1``); crosspolytope
    faces by pair indices, then signs with ``+`` first. For the
    crosspolytope ``k == dim`` yields the whole-polytope marker.
    """
    return list(_faces(kind, dim, k))


def all_faces(kind, dim, min_dim=0):
    """Faces in increasing dimension, lexicographic within a dimension."""
    for k in range(min_dim, dim + 1):
        yield from _faces(kind, dim, k)


# ---------------------------------------------------------------------------
# orientations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Orientation:
    """Direction bit per canonical edge.

    Bit ``j`` of ``mask`` set means edge ``edges(kind, dim)[j] = (u, v)`` is
    directed ``u -> v`` (canonically smaller to larger), clear means ``v -> u``.
    """

    kind: str
    dim: int
    mask: int = field(default=0)

    def __post_init__(self):
        _check_dim(self.kind, self.dim)
        if self.mask >> len(_edges(self.kind, self.dim)):
            raise ValueError("orientation mask has bits beyond the edge count")

    @classmethod
    def from_arcs(cls, kind, dim, arcs):
        idx = edge_index(kind, dim)
        mask = 0
        seen = set()
        for u, v in arcs:
            if (u, v) in idx:
                j, fwd = idx[(u, v)], True
            elif (v, u) in idx:
                j, fwd = idx[(v, u)], False
            else:
                raise ValueError(f"{u} -> {v} is not an edge of the {kind}")
            if j in seen:
                raise ValueError(f"edge {u} - {v} given twice")
            seen.add(j)
            if fwd:
                mask |= 1 << j
        if len(seen) != len(idx):
            raise ValueError(f"orientation covers {len(seen)} of {len(idx)} edges")
        return cls(kind, dim, mask)

    @classmethod
    def from_labels(cls, kind, dim, label):
        """Orient every edge toward the larger label."""
        mask = 0
        for j, (u, v) in enumerate(_edges(kind, dim)):
            if label[u] < label[v]:
                mask |= 1 << j
        return cls(kind, dim, mask)

    @classmethod
    def from_function(cls, kind, dim, forward):
        """``forward(u, v)`` decides whether canonical edge (u, v) points u -> v."""
        mask = 0
        for j, (u, v) in enumerate(_edges(kind, dim)):
            if forward(u, v):
                mask |= 1 << j
        return cls(kind, dim, mask)

    def arcs(self):
        out = []
        for j, (u, v) in enumerate(_edges(self.kind, self.dim)):
            out.append((u, v) if self.mask >> j & 1 else (v, u))
        return out

    def has_arc(self, u, v):
        j = edge_index(self.kind, self.dim).get((u, v))
        if j is not None:
            return bool(self.mask >> j & 1)
        j = edge_index(self.kind, self.dim).get((v, u))
        return j is not None and not self.mask >> j & 1

    def reverse_edge(self, j):
        return Orientation(self.kind, self.dim, self.mask ^ (1 << j))

    @cached_property
    def successors(self):
        succ = {v: [] for v in vertices(self.kind, self.dim)}
        for u, v in self.arcs():
            succ[u].append(v)
        key = lambda x: vertex_key(self.kind, x)  # noqa: E731
        for lst in succ.values():
            lst.sort(key=key)
        return succ

    def vertices(self):
        return vertices(self.kind, self.dim)

    def to_text(self):
        lines = [f"{self.kind} {self.dim}"]
        fmt = lambda x: format_vertex(self.kind, self.dim, x)  # noqa: E731
        lines += [f"{fmt(u)} -> {fmt(v)}" for u, v in self.arcs()]
        return "\n".join(lines) + "\n"


def parse_orientation(text):
    """Parse the ``cube n`` / ``crosspolytope d`` edge-list format."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise FormatError("empty orientation")
    head = lines[0].split()
    if len(head) != 2 or head[0] not in (CUBE, CROSS) or not head[1].isdigit():
        raise FormatError(f"bad header {lines[0]!r}")
    kind, dim = head[0], int(head[1])
    try:
        _check_dim(kind, dim)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    arcs = []
    for line in lines[1:]:
        parts = line.split("->")
        if len(parts) != 2:
            raise FormatError(f"bad edge line {line!r}")
        arcs.append((parse_vertex(kind, dim, parts[0]), parse_vertex(kind, dim, parts[1])))
    try:
        return Orientation.from_arcs(kind, dim, arcs)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def standard_cube(n):
    """Every edge directed toward the endpoint with an extra 1."""
    return Orientation(CUBE, n, (1 << len(_edges(CUBE, n))) - 1)


# ---------------------------------------------------------------------------
# induced digraphs and topological orders
# ---------------------------------------------------------------------------

def _face_matches(o, f):
    if f.kind != o.kind:
        return False
    return (f.n if f.kind == CUBE else f.d) == o.dim


def face_subdigraph(o, f):
    """Digraph induced on the vertices of ``f`` as ``{vertex: [successors]}``."""
    if not _face_matches(o, f):
        raise ValueError(f"face {f} does not belong to {o.kind} {o.dim}")
    vs = f.vertices()
    inside = set(vs)
    succ = o.successors
    return {v: [w for w in succ[v] if w in inside] for v in vs}


@dataclass(frozen=True)
class Cycle:
    """Directed cycle certificate; consecutive vertices (and last to first) are arcs."""

    vertices: tuple

    def check(self, o):
        vs = self.vertices
        return len(vs) >= 2 and all(o.has_arc(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


def find_cycle(graph, order=None):
    """Return a directed cycle of ``graph`` as a tuple, or None."""
    WHITE, GREY, BLACK = 0, 1, 2
    color = {v: WHITE for v in graph}
    for root in order or graph:
        if color[root] != WHITE:
            continue
        stack = [(root, iter(graph[root]))]
        path = [root]
        color[root] = GREY
        while stack:
            v, it = stack[-1]
            for w in it:
                if color[w] == GREY:
                    return tuple(path[path.index(w):])
                if color[w] == WHITE:
                    color[w] = GREY
                    path.append(w)
                    stack.append((w, iter(graph[w])))
                    break
            else:
                color[v] = BLACK
                stack.pop()
                path.pop()
    return None


def topological_order(o, rng=None):
    """Label vertices 1..N so every arc increases the label.

    Ties go to the canonically smallest available vertex, or are broken by
    ``rng`` when given. Returns ``{vertex: label}`` or a :class:`Cycle`.
    """
    succ = o.successors
    indeg = {v: 0 for v in succ}
    for v in succ:
        for w in succ[v]:
            indeg[w] += 1
    key = lambda x: vertex_key(o.kind, x)  # noqa: E731
    ready = [(key(v), v) for v in succ if indeg[v] == 0]
    heapq.heapify(ready)
    label = {}
    while ready:
        if rng is None:
            _, v = heapq.heappop(ready)
        else:
            i = rng.randrange(len(ready))
            ready[i], ready[-1] = ready[-1], ready[i]
            _, v = ready.pop()
            heapq.heapify(ready)
        label[v] = len(label) + 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, (key(w), w))
    if len(label) < len(succ):
        rest = {v: [w for w in succ[v] if w not in label] for v in succ if v not in label}
        return Cycle(find_cycle(rest, sorted(rest, key=key)))
    return label
