"""Holt-Klee conditions: acyclicity, unique face sources/sinks, disjoint paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .polytope import (
    CROSS,
    Cycle,
    all_faces,
    face_subdigraph,
    find_cycle,
    format_vertex,
    topological_order,
    whole_face,
)


class NoUniqueEndpoints(ValueError):
    """Face lacks a unique source or a unique sink."""


def is_acyclic(o):
    """``(True, None)`` or ``(False, Cycle)``."""
    res = topological_order(o)
    if isinstance(res, Cycle):
        return False, res
    return True, None


def face_source_sink(o, f):
    g = face_subdigraph(o, f)
    has_in = {w for v in g for w in g[v]}
    sources = [v for v in g if v not in has_in]
    sinks = [v for v in g if not g[v]]
    return sources, sinks


@dataclass(frozen=True)
class PathFlow:
    """Maximum internally-disjoint s-t paths plus a minimum separator.

    Removing ``cut`` (internal vertices) and, when ``direct`` is set, the arc
    ``s -> t`` leaves no directed s-t path; ``value == len(cut) + direct``.
    """

    source: object
    sink: object
    value: int
    cut: tuple
    direct: bool


def max_disjoint_paths(graph, s, t):
    """Vertex-split unit-capacity max flow by BFS augmentation.

    Internal vertices get capacity 1; ``s`` and ``t`` are uncapacitated.
    """
    if s == t:
        raise ValueError("source equals sink")
    # node ids: (v, 0) = in-copy, (v, 1) = out-copy
    cap = {}
    adj = {}

    def add(a, b, c):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)

    big = len(graph) + 1
    for v in graph:
        add((v, 0), (v, 1), big if v in (s, t) else 1)
    for v, ws in graph.items():
        for w in ws:
            add((v, 1), (w, 0), 1)

    src, dst = (s, 1), (t, 0)
    flow = 0
    while True:
        prev = {src: None}
        queue = deque([src])
        while queue and dst not in prev:
            a = queue.popleft()
            for b in adj[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if dst not in prev:
            break
        b = dst
        while prev[b] is not None:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1

    # map saturated arcs leaving the residual-reachable side to vertices
    reach = set(prev)
    blocked = set()
    direct = False
    for v in graph:
        if v not in (s, t) and (v, 0) in reach and (v, 1) not in reach:
            blocked.add(v)
    for v, ws in graph.items():
        if (v, 1) not in reach:
            continue
        for w in ws:
            if (w, 0) in reach:
                continue
            if v != s:
                blocked.add(v)
            elif w != t:
                blocked.add(w)
            else:
                direct = True
    cut = tuple(v for v in graph if v in blocked)
    return PathFlow(s, t, flow, cut, direct)


def separates(graph, s, t, cut, direct):
    """True when removing ``cut`` (and arc s->t if ``direct``) disconnects s from t."""
    blocked = set(cut)
    seen = {s}
    stack = [s]
    while stack:
        v = stack.pop()
        for w in graph[v]:
            if v == s and w == t and direct:
                continue
            if w == t:
                return False
            if w not in seen and w not in blocked:
                seen.add(w)
                stack.append(w)
    return True


def disjoint_monotone_paths(o, f):
    """Maximum number of internally vertex-disjoint source-to-sink paths in ``f``."""
    sources, sinks = face_source_sink(o, f)
    if len(sources) != 1 or len(sinks) != 1 or sources[0] == sinks[0]:
        raise NoUniqueEndpoints(f"face {f} has sources {sources} and sinks {sinks}")
    return max_disjoint_paths(face_subdigraph(o, f), sources[0], sinks[0]).value


@dataclass(frozen=True)
class Violation:
    kind: str  # cycle | multiple_sources | multiple_sinks | path_deficit
    face: object = None
    vertices: tuple = ()
    k: int | None = None
    achieved: int | None = None
    direct: bool = False

    def describe(self, o):
        fmt = lambda v: format_vertex(o.kind, o.dim, v)  # noqa: E731
        verts = ",".join(fmt(v) for v in self.vertices)
        if self.kind == "cycle":
            return f"cycle face={whole_face(o.kind, o.dim)} cycle={verts}"
        if self.kind == "path_deficit":
            return (f"path_deficit face={self.face} k={self.k} achieved={self.achieved} "
                    f"cut={verts or '-'} direct={int(self.direct)}")
        return f"{self.kind} face={self.face} vertices={verts}"


@dataclass(frozen=True)
class HKVerdict:
    passed: bool
    violation: Violation | None = None

    def line(self, o):
        if self.passed:
            return "HK: PASS"
        return "HK: FAIL " + self.violation.describe(o)

    def check(self, o):
        """Re-validate the certificate against ``o``."""
        if self.passed:
            return self.violation is None
        v = self.violation
        if v.kind == "cycle":
            return Cycle(v.vertices).check(o)
        sources, sinks = face_source_sink(o, v.face)
        if v.kind == "multiple_sources":
            return len(v.vertices) >= 2 and set(v.vertices) <= set(sources)
        if v.kind == "multiple_sinks":
            return len(v.vertices) >= 2 and set(v.vertices) <= set(sinks)
        g = face_subdigraph(o, v.face)
        return (v.achieved < v.k and len(v.vertices) + v.direct == v.achieved
                and separates(g, sources[0], sinks[0], v.vertices, v.direct))


def check_face(o, f, simplex_fast_path=False):
    """First violation on a single face of an acyclic orientation, or None."""
    g = face_subdigraph(o, f)
    has_in = {w for v in g for w in g[v]}
    sources = tuple(v for v in g if v not in has_in)
    sinks = tuple(v for v in g if not g[v])
    if len(sources) > 1:
        return Violation("multiple_sources", f, sources)
    if len(sinks) > 1:
        return Violation("multiple_sinks", f, sinks)
    k = f.dim
    if k < 2:
        return None
    if simplex_fast_path and o.kind == CROSS and f.members is not None:
        # acyclic tournament on a simplex: a transitive order, always k paths
        return None
    pf = max_disjoint_paths(g, sources[0], sinks[0])
    if pf.value < k:
        return Violation("path_deficit", f, pf.cut, k, pf.value, pf.direct)
    return None


def is_holt_klee(o, simplex_fast_path=False):
    """Check all three conditions; report the first violation.

    Faces are visited by increasing dimension, then lexicographically.
    """
    ok, cyc = is_acyclic(o)
    if not ok:
        return HKVerdict(False, Violation("cycle", vertices=cyc.vertices))
    if o.kind == CROSS and o.dim == 1:
        # the segment's two endpoints form an antipodal pair, so its graph
        # carries no edge; the only face condition is vacuous
        return HKVerdict(True)
    for f in all_faces(o.kind, o.dim, min_dim=1):
        v = check_face(o, f, simplex_fast_path)
        if v is not None:
            return HKVerdict(False, v)
    return HKVerdict(True)


__all__ = [
    "HKVerdict",
    "NoUniqueEndpoints",
    "PathFlow",
    "Violation",
    "check_face",
    "disjoint_monotone_paths",
    "face_source_sink",
    "find_cycle",
    "is_acyclic",
    "is_holt_klee",
    "max_disjoint_paths",
    "separates",
]
