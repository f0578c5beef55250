"""Finite directed graphs: the text format, reachability, cycles, exits, quotients."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import GraphFormatError, ResourceLimitError, ValidationError

IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
MAX_CYCLES = 100_000

_DIGITS = re.compile(r"(\d+)")


def ident_key(name: str):
    """Natural sort key: ``v2 < v10``. All orderings in the package use it."""
    return tuple((0, int(tok)) if tok.isdigit() else (1, tok)
                 for tok in _DIGITS.split(name) if tok) + ((2, name),)


def sort_ids(names: Iterable[str]) -> tuple:
    return tuple(sorted(names, key=ident_key))


@dataclass(frozen=True)
class Edge:
    name: str
    source: str
    range: str


@dataclass(frozen=True)
class DirectedGraph:
    vertices: tuple
    edges: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(
            e if isinstance(e, Edge) else Edge(*e) for e in self.edges))
        if not self.vertices:
            raise ValidationError("a graph needs at least one vertex")
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise ValidationError(f"duplicate vertex identifier {v!r}")
            seen.add(v)
        for e in self.edges:
            if e.name in seen:
                raise ValidationError(f"duplicate identifier {e.name!r}")
            seen.add(e.name)
            for end in (e.source, e.range):
                if end not in self.vertex_set:
                    raise ValidationError(f"edge {e.name!r} references unknown vertex {end!r}")

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    @cached_property
    def edge_map(self) -> dict:
        return {e.name: e for e in self.edges}

    @cached_property
    def out_edges(self) -> dict:
        out = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.source].append(e.name)
        return {v: tuple(sort_ids(es)) for v, es in out.items()}

    @cached_property
    def in_edges(self) -> dict:
        inc = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.range].append(e.name)
        return {v: tuple(sort_ids(es)) for v, es in inc.items()}

    @cached_property
    def sinks(self) -> tuple:
        return tuple(v for v in self.vertices if not self.out_edges[v])

    @cached_property
    def sources(self) -> tuple:
        return tuple(v for v in self.vertices if not self.in_edges[v])

    @cached_property
    def descendants(self) -> dict:
        """``descendants[v]`` = {w : v >= w}, including v itself."""
        succ = {v: {self.edge_map[e].range for e in self.out_edges[v]} for v in self.vertices}
        result = {}
        for v in self.vertices:
            seen = {v}
            stack = [v]
            while stack:
                u = stack.pop()
                for w in succ[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            result[v] = frozenset(seen)
        return result

    def check_vertices(self, vs: Iterable[str]) -> frozenset:
        vs = frozenset(vs)
        unknown = vs - self.vertex_set
        if unknown:
            raise ValidationError(f"unknown vertex {sort_ids(unknown)[0]!r}")
        return vs

    def source(self, edge: str) -> str:
        return self.edge_map[edge].source

    def range_of(self, edge: str) -> str:
        return self.edge_map[edge].range


@dataclass(frozen=True)
class GraphPath:
    """A path; ``anchor`` is the vertex of a length-zero path and the range otherwise."""

    edges: tuple
    anchor: str

    @classmethod
    def of(cls, g: DirectedGraph, edges, anchor=None) -> "GraphPath":
        edges = tuple(edges)
        if not edges:
            if anchor is None:
                raise ValidationError("an empty path needs an anchor vertex")
            g.check_vertices([anchor])
            return cls((), anchor)
        for a, b in zip(edges, edges[1:]):
            if g.range_of(a) != g.source(b):
                raise ValidationError(f"edges {a!r} and {b!r} are not composable")
        return cls(edges, g.range_of(edges[-1]))

    def __len__(self):
        return len(self.edges)


@dataclass(frozen=True)
class Cycle:
    """A vertex-simple closed path stored in canonical rotation.

    The canonical rotation starts at the smallest source vertex under ``ident_key``;
    ``base`` is that vertex.
    """

    edges: tuple
    vertices: tuple = field(compare=False)

    @property
    def base(self) -> str:
        return self.vertices[0]

    def __len__(self):
        return len(self.edges)

    def edge_at(self, vertex: str) -> str:
        return self.edges[self.vertices.index(vertex)]

    @classmethod
    def from_edges(cls, g: DirectedGraph, edges) -> "Cycle":
        edges = tuple(edges)
        if not edges:
            raise ValidationError("a cycle is nonempty")
        srcs = [g.source(e) for e in edges]
        for a, b in zip(edges, edges[1:] + edges[:1]):
            if g.range_of(a) != g.source(b):
                raise ValidationError(f"{edges} is not a closed path")
        if len(set(srcs)) != len(srcs):
            raise ValidationError(f"{edges} repeats a vertex")
        k = min(range(len(srcs)), key=lambda i: ident_key(srcs[i]))
        return cls(edges[k:] + edges[:k], tuple(srcs[k:] + srcs[:k]))


# ---------------------------------------------------------------- text format

def parse_graph(text: str) -> DirectedGraph:
    """Parse the line-based graph format.

    ``# comment`` lines, one ``vertices: a b c`` line, then ``edge <id>: <src> -> <tgt>`` lines.
    """
    vertices = None
    edges = []
    positions = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        col0 = raw.index(line[0]) + 1
        if line.startswith("vertices:"):
            if vertices is not None:
                raise GraphFormatError("second 'vertices:' line", lineno, col0)
            rest = line[len("vertices:"):]
            vertices = []
            offset = col0 + len("vertices:")
            for m in re.finditer(r"\S+", rest):
                tok = m.group()
                if not IDENT.fullmatch(tok):
                    raise GraphFormatError(f"bad vertex identifier {tok!r}", lineno, offset + m.start())
                if tok in positions:
                    raise GraphFormatError(f"duplicate identifier {tok!r}", lineno, offset + m.start())
                positions[tok] = lineno
                vertices.append(tok)
            if not vertices:
                raise GraphFormatError("empty vertex list", lineno, col0)
            continue
        m = re.fullmatch(r"edge\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)", line)
        if not m:
            raise GraphFormatError(f"cannot parse {line!r}", lineno, col0)
        if vertices is None:
            raise GraphFormatError("edge before the 'vertices:' line", lineno, col0)
        for i in (1, 2, 3):
            if not IDENT.fullmatch(m.group(i)):
                raise GraphFormatError(f"bad identifier {m.group(i)!r}", lineno, col0 + m.start(i))
        name, src, tgt = m.groups()
        if name in positions:
            raise GraphFormatError(f"duplicate identifier {name!r}", lineno, col0 + m.start(1))
        for i, end in ((2, src), (3, tgt)):
            if end not in vertices:
                raise GraphFormatError(f"edge {name!r} references unknown vertex {end!r}",
                                       lineno, col0 + m.start(i))
        positions[name] = lineno
        edges.append(Edge(name, src, tgt))
    if vertices is None:
        raise GraphFormatError("missing 'vertices:' line", None)
    return DirectedGraph(tuple(vertices), tuple(edges))


def serialize_graph(g: DirectedGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend("# " + c for c in comment.splitlines())
    lines.append("vertices: " + " ".join(g.vertices))
    lines.extend(f"edge {e.name}: {e.source} -> {e.range}" for e in g.edges)
    return "\n".join(lines) + "\n"


def graph_dot(g: DirectedGraph, name: str = "E") -> str:
    lines = [f"digraph {name} {{"]
    lines.extend(f'  "{v}";' for v in g.vertices)
    lines.extend(f'  "{e.source}" -> "{e.range}" [label="{e.name}"];' for e in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- structure

def reaches(g: DirectedGraph, v: str, w: str) -> bool:
    """The relation v >= w: v == w or some path runs from v to w."""
    g.check_vertices([v, w])
    return w in g.descendants[v]


def enumerate_cycles(g: DirectedGraph, max_cycles: int = MAX_CYCLES) -> tuple:
    """All cycles up to rotation, canonical rotation, sorted by edge-identifier sequence."""
    order = {v: i for i, v in enumerate(sort_ids(g.vertices))}
    found = []
    for start in sort_ids(g.vertices):
        lo = order[start]
        # DFS over vertex-simple paths that only visit vertices ranked above ``start``
        stack = [(start, (), frozenset([start]))]
        while stack:
            v, path, visited = stack.pop()
            for e in g.out_edges[v]:
                w = g.range_of(e)
                if w == start:
                    found.append(path + (e,))
                    if len(found) > max_cycles:
                        raise ResourceLimitError(f"graph has more than {max_cycles} simple cycles")
                elif order[w] > lo and w not in visited:
                    stack.append((w, path + (e,), visited | {w}))
    cycles = [Cycle.from_edges(g, es) for es in found]
    cycles.sort(key=lambda c: tuple(ident_key(e) for e in c.edges))
    return tuple(cycles)


def cycle_has_exit_in(g: DirectedGraph, c: Cycle, M) -> bool:
    """True iff an edge leaving a vertex of ``c``, other than c's own edge there, lands in M."""
    M = g.check_vertices(M)
    if not set(c.vertices) <= M:
        raise ValidationError(f"cycle {'.'.join(c.edges)} is not contained in the given vertex set")
    for v, own in zip(c.vertices, c.edges):
        for f in g.out_edges[v]:
            if f != own and g.range_of(f) in M:
                return True
    return False


def satisfies_condition_L(g: DirectedGraph) -> bool:
    every = g.vertex_set
    return all(cycle_has_exit_in(g, c, every) for c in enumerate_cycles(g))


def quotient_graph(g: DirectedGraph, H) -> DirectedGraph:
    """E/H: drop the vertices of H and every edge whose range lies in H."""
    from .ideals import is_hereditary

    H = g.check_vertices(H)
    if not is_hereditary(g, H):
        raise ValidationError("quotient_graph needs a hereditary vertex set")
    if H == g.vertex_set:
        raise ValidationError("quotient by the full vertex set leaves an empty graph")
    return DirectedGraph(tuple(v for v in g.vertices if v not in H),
                         tuple(e for e in g.edges if e.range not in H))
