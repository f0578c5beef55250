"""Shared helpers for the test-suite: random inputs and independent brute-force oracles.

Nothing here calls the library routine it is used to check.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product

from lpaspec.engine import Element, LeavittAlgebra
from lpaspec.fields import PrimeField
from lpaspec.graph import DirectedGraph, Edge

_MONO_CACHE = {}


def monomials(A: LeavittAlgebra, max_len: int):
    key = (A.graph, max_len)
    if key not in _MONO_CACHE:
        _MONO_CACHE[key] = A.reduced_monomials(max_len)
    return _MONO_CACHE[key]


def random_scalar(F, rng: random.Random):
    if isinstance(F, PrimeField):
        return rng.randrange(1, F.p)
    num = rng.choice([-3, -2, -1, 1, 2, 3, 5])
    return Fraction(num, rng.choice([1, 1, 1, 2, 3]))


def random_element(A: LeavittAlgebra, rng: random.Random, max_terms: int = 3, max_len: int = 3) -> Element:
    pool = monomials(A, max_len)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.choice(pool)] = random_scalar(A.field, rng)
    return Element(A, terms)


def random_graph(rng: random.Random, max_vertices: int = 6, max_edges: int = 10) -> DirectedGraph:
    n = rng.randint(1, max_vertices)
    vs = tuple(f"v{i}" for i in range(1, n + 1))
    edges = []
    for k in range(rng.randint(0, max_edges)):
        edges.append(Edge(f"e{k + 1}", rng.choice(vs), rng.choice(vs)))
    return DirectedGraph(vs, tuple(edges))


# ---------------------------------------------------------------- definition-level lattice oracles

def _successors(g):
    return {v: [e.range for e in g.edges if e.source == v] for v in g.vertices}


def _reach(g):
    succ = _successors(g)
    out = {}
    for v in g.vertices:
        seen = {v}
        stack = [v]
        while stack:
            for w in succ[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out[v] = seen
    return out


def brute_hereditary_saturated(g) -> set:
    succ = _successors(g)
    found = set()
    vs = list(g.vertices)
    for bits in product((0, 1), repeat=len(vs)):
        H = frozenset(v for v, b in zip(vs, bits) if b)
        hereditary = all(w in H for v in H for w in succ[v])
        saturated = all(v in H for v in vs if succ[v] and all(w in H for w in succ[v]))
        if hereditary and saturated:
            found.add(H)
    return found


def brute_maximal_tails(g) -> set:
    """Nonempty M with: upward closed under >=, every non-sink in M has an edge into M,
    and any two members of M have a common descendant in M."""
    reach = _reach(g)
    succ = _successors(g)
    vs = list(g.vertices)
    out = set()
    for r in range(1, len(vs) + 1):
        for M in combinations(vs, r):
            M = frozenset(M)
            if any(v not in M and reach[v] & M for v in vs):
                continue
            if any(succ[v] and not any(w in M for w in succ[v]) for v in M):
                continue
            if any(not (reach[v] & reach[w] & M) for v in M for w in M):
                continue
            out.add(M)
    return out


def brute_edge_cycles(g) -> set:
    """Cycles as frozensets of rotations of edge tuples, by walking all edge sequences
    of length <= |E^0| that close up without repeating a vertex."""
    by_source = {}
    for e in g.edges:
        by_source.setdefault(e.source, []).append(e)
    found = set()

    def walk(start, path, visited):
        last = path[-1]
        if last.range == start:
            names = tuple(e.name for e in path)
            found.add(frozenset(names[i:] + names[:i] for i in range(len(names))))
        if last.range in visited:
            return
        for e in by_source.get(last.range, ()):
            walk(start, path + [e], visited | {last.range})

    for e in g.edges:
        walk(e.source, [e], {e.source})
    return found


# ---------------------------------------------------------------- polynomial oracles over GF(p)

def poly_mul_mod(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def brute_irreducible_monics(p: int, max_degree: int) -> list:
    """Monic irreducibles with nonzero constant term, degree 1..max_degree, by sieving products."""
    monics = {d: [list(c) + [1] for c in product(range(p), repeat=d)] for d in range(1, max_degree + 1)}
    reducible = set()
    for d1 in range(1, max_degree):
        for d2 in range(d1, max_degree - d1 + 1):
            for a in monics[d1]:
                for b in monics[d2]:
                    reducible.add(tuple(poly_mul_mod(a, b, p)))
    return [tuple(m) for d in range(1, max_degree + 1) for m in monics[d]
            if tuple(m) not in reducible and m[0] != 0]


# ---------------------------------------------------------------- faithful matrix model of line(n)

def line_matrix(a: Element, n: int):
    """Image of a in M_n(K) under v_i -> E_ii, e_i -> E_{i,i+1}, e_i* -> E_{i+1,i}."""
    F = a.field
    M = [[F.zero] * n for _ in range(n)]

    def idx(v):
        return int(v[1:]) - 1

    for m, c in a.terms.items():
        # mu nu* -> E_{s(mu), s(nu)}; edge e_k leaves v_k
        i = int(m.mu[0][1:]) - 1 if m.mu else idx(m.anchor)
        j = int(m.nu[0][1:]) - 1 if m.nu else idx(m.anchor)
        M[i][j] = F.add(M[i][j], c)
    return M


def mat_mul(F, X, Y):
    n = len(X)
    return [[sum_f(F, (F.mul(X[i][k], Y[k][j]) for k in range(n))) for j in range(n)] for i in range(n)]


def sum_f(F, xs):
    acc = F.zero
    for x in xs:
        acc = F.add(acc, x)
    return acc
