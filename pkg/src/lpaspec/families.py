"""Named graphs: rose R_n, the oriented n-line, the single loop, the four-vertex example, E_{n,S}."""
from __future__ import annotations

from .errors import ValidationError
from .graph import DirectedGraph, Edge

FAMILIES = ("rose", "line", "loop", "figure4", "E")


def rose(n: int) -> DirectedGraph:
    """One vertex ``v`` with n loops ``e1..en``; R_1 is the single-loop graph itself."""
    if n < 1:
        raise ValidationError("rose needs n >= 1")
    if n == 1:
        return single_loop()
    return DirectedGraph(("v",), tuple(Edge(f"e{i}", "v", "v") for i in range(1, n + 1)))


def line(n: int) -> DirectedGraph:
    """v1 -> v2 -> ... -> vn along e1..e(n-1)."""
    if n < 1:
        raise ValidationError("line needs n >= 1")
    vs = tuple(f"v{i}" for i in range(1, n + 1))
    return DirectedGraph(vs, tuple(Edge(f"e{i}", f"v{i}", f"v{i+1}") for i in range(1, n)))


def single_loop() -> DirectedGraph:
    return DirectedGraph(("v",), (Edge("x", "v", "v"),))


def figure4() -> DirectedGraph:
    """Loops at v1 and v3, two loops at v4; v1 -> v2 <- v3 and v4 -> v1, v2, v3."""
    return DirectedGraph(
        ("v1", "v2", "v3", "v4"),
        (
            Edge("f1", "v1", "v1"),
            Edge("e1", "v1", "v2"),
            Edge("f3", "v3", "v3"),
            Edge("e3", "v3", "v2"),
            Edge("e41", "v4", "v1"),
            Edge("e42", "v4", "v2"),
            Edge("e43", "v4", "v3"),
            Edge("f4", "v4", "v4"),
            Edge("g4", "v4", "v4"),
        ),
    )


def e_family(n: int, S=()) -> DirectedGraph:
    """E_{n,S}: chain e_i: v_{i+1} -> v_i, a loop f_i at every v_i, a second loop g_i for i in S."""
    S = set(S)
    if n < 1:
        raise ValidationError("E_{n,S} needs n >= 1")
    if not S <= set(range(1, n + 1)):
        raise ValidationError(f"S must be a subset of 1..{n}")
    vs = tuple(f"v{i}" for i in range(1, n + 1))
    edges = [Edge(f"e{i}", f"v{i+1}", f"v{i}") for i in range(1, n)]
    edges += [Edge(f"f{i}", f"v{i}", f"v{i}") for i in range(1, n + 1)]
    edges += [Edge(f"g{i}", f"v{i}", f"v{i}") for i in sorted(S)]
    return DirectedGraph(vs, tuple(edges))


def make_family(name: str, *params) -> DirectedGraph:
    """Dispatch by family name: ``rose n``, ``line n``, ``loop``, ``figure4``, ``E n S``."""
    key = name.lower()
    try:
        if key == "rose":
            (n,) = params
            return rose(int(n))
        if key == "line":
            (n,) = params
            return line(int(n))
        if key == "loop":
            if params:
                raise ValueError
            return single_loop()
        if key == "figure4":
            if params:
                raise ValueError
            return figure4()
        if key == "e":
            if len(params) == 1:
                return e_family(int(params[0]))
            n, S = params
            if isinstance(S, str):
                S = [int(t) for t in S.replace(",", " ").split()]
            return e_family(int(n), S)
    except (TypeError, ValueError):
        raise ValidationError(f"bad parameters {params!r} for family {name!r}") from None
    raise ValidationError(f"unknown family {name!r} (choose from {', '.join(FAMILIES)})")
