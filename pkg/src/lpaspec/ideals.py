"""Hereditary saturated vertex sets and maximal tails.

Hereditary saturated sets H index the graded ideals I(H); complements of the
ones that are maximal tails index the graded primes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ResourceLimitError, ValidationError
from .graph import MAX_CYCLES, Cycle, DirectedGraph, cycle_has_exit_in, enumerate_cycles, ident_key, sort_ids

MAX_VERTICES = 20

GAMMA = "Gamma"
TAU = "Tau"


def set_key(vs):
    """Ordering of vertex sets: by size, then lexicographically on sorted identifiers."""
    vs = sort_ids(vs)
    return (len(vs), tuple(ident_key(v) for v in vs))


@dataclass(frozen=True)
class HereditarySaturatedSet:
    graph: DirectedGraph
    vertices: tuple

    @classmethod
    def of(cls, g: DirectedGraph, H) -> "HereditarySaturatedSet":
        H = g.check_vertices(H)
        if not is_hereditary(g, H):
            raise ValidationError(f"{sort_ids(H)} is not hereditary")
        if saturate(g, H) != H:
            raise ValidationError(f"{sort_ids(H)} is not saturated")
        return cls(g, sort_ids(H))

    @property
    def as_set(self) -> frozenset:
        return frozenset(self.vertices)

    def complement(self) -> tuple:
        return sort_ids(self.graph.vertex_set - self.as_set)

    def __repr__(self):
        return "H{" + ",".join(self.vertices) + "}"


@dataclass(frozen=True)
class TailDescriptor:
    graph: DirectedGraph
    vertices: tuple
    kind: str
    cycle: Optional[Cycle] = None

    @property
    def as_set(self) -> frozenset:
        return frozenset(self.vertices)

    @property
    def base(self) -> Optional[str]:
        return self.cycle.base if self.cycle is not None else None

    @property
    def is_tau(self) -> bool:
        return self.kind == TAU

    def complement(self) -> HereditarySaturatedSet:
        return HereditarySaturatedSet(self.graph, sort_ids(self.graph.vertex_set - self.as_set))

    def __repr__(self):
        extra = f", cycle={'.'.join(self.cycle.edges)}" if self.cycle else ""
        return f"Tail({','.join(self.vertices)}; {self.kind}{extra})"


def is_hereditary(g: DirectedGraph, H) -> bool:
    H = g.check_vertices(H)
    return all(g.descendants[v] <= H for v in H)


def is_saturated(g: DirectedGraph, H) -> bool:
    H = g.check_vertices(H)
    for v in g.vertices:
        if v not in H and g.out_edges[v] and all(g.range_of(e) in H for e in g.out_edges[v]):
            return False
    return True


def saturate(g: DirectedGraph, H) -> frozenset:
    """Smallest superset of H closed under the saturation rule (fixed-point iteration)."""
    H = set(g.check_vertices(H))
    changed = True
    while changed:
        changed = False
        for v in g.vertices:
            if v not in H and g.out_edges[v] and all(g.range_of(e) in H for e in g.out_edges[v]):
                H.add(v)
                changed = True
    return frozenset(H)


def hereditary_saturated_closure(g: DirectedGraph, X) -> frozenset:
    X = g.check_vertices(X)
    hered = frozenset().union(*(g.descendants[v] for v in X)) if X else frozenset()
    return saturate(g, hered)


def enumerate_hereditary_saturated(g: DirectedGraph, max_vertices: int = MAX_VERTICES) -> tuple:
    """Every hereditary saturated subset, ordered by ``set_key``.

    Backtracking over the vertices; a branch dies as soon as an included vertex
    has an excluded successor or an excluded vertex has an included predecessor.
    """
    n = len(g.vertices)
    if n > max_vertices:
        raise ResourceLimitError(f"{n} vertices exceeds the enumeration bound {max_vertices}")
    succ = {v: {g.range_of(e) for e in g.out_edges[v]} for v in g.vertices}
    pred = {v: {g.source(e) for e in g.in_edges[v]} for v in g.vertices}
    order = list(g.vertices)
    found = []
    state = {}

    def walk(i):
        if i == n:
            H = frozenset(v for v, inside in state.items() if inside)
            if is_saturated(g, H):
                found.append(H)
            return
        v = order[i]
        for inside in (False, True):
            if inside and any(state.get(w) is False for w in succ[v]):
                continue
            if not inside and any(state.get(u) is True for u in pred[v]):
                continue
            state[v] = inside
            walk(i + 1)
            del state[v]

    walk(0)
    found.sort(key=set_key)
    return tuple(HereditarySaturatedSet(g, sort_ids(H)) for H in found)


def is_maximal_tail(g: DirectedGraph, M) -> bool:
    M = g.check_vertices(M)
    if not M:
        return False
    for v in g.vertices:
        if v not in M and g.descendants[v] & M:
            return False
    for v in M:
        outs = g.out_edges[v]
        if outs and not any(g.range_of(e) in M for e in outs):
            return False
    members = sort_ids(M)
    for i, v in enumerate(members):
        dv = g.descendants[v] & M
        for w in members[i + 1:]:
            if not (dv & g.descendants[w]):
                return False
    return True


def classify_tail(g: DirectedGraph, M, max_cycles: int = MAX_CYCLES, cycles=None) -> TailDescriptor:
    M = g.check_vertices(M)
    if not is_maximal_tail(g, M):
        raise ValidationError(f"{sort_ids(M)} is not a maximal tail")
    if cycles is None:
        cycles = enumerate_cycles(g, max_cycles)
    inside = [c for c in cycles if set(c.vertices) <= M]
    exitless = [c for c in inside if not cycle_has_exit_in(g, c, M)]
    if not exitless:
        return TailDescriptor(g, sort_ids(M), GAMMA)
    if len(exitless) != 1:
        raise AssertionError(f"maximal tail {sort_ids(M)} has {len(exitless)} exit-less cycles")
    return TailDescriptor(g, sort_ids(M), TAU, exitless[0])


def enumerate_maximal_tails(g: DirectedGraph, max_vertices: int = MAX_VERTICES,
                            max_cycles: int = MAX_CYCLES) -> tuple:
    tails = []
    cycles = None
    for H in enumerate_hereditary_saturated(g, max_vertices):
        M = g.vertex_set - H.as_set
        if M and is_maximal_tail(g, M):
            if cycles is None:
                cycles = enumerate_cycles(g, max_cycles)
            tails.append(classify_tail(g, M, cycles=cycles))
    return tuple(tails)
