"""Symbolic arithmetic in the Leavitt path algebra L_K(E).

Elements are finite combinations of reduced monomials mu nu* (real path mu,
ghost path nu*, equal ranges). A monomial is reduced unless mu and nu both end
in the special edge of that edge's source; the special edge at a non-sink is
its greatest outgoing edge under ``ident_key``. Products cancel ghost/real
overlaps with CK1 and then rewrite
    mu g g* nu*  ->  mu nu* - sum_{e != g, s(e) = s(g)} mu e e* nu*
(CK2) until the result is reduced.
"""
from __future__ import annotations

from typing import NamedTuple

from .errors import ExpressionSyntaxError, ValidationError
from .fields import Field
from .graph import Cycle, DirectedGraph, ident_key, quotient_graph


class Monomial(NamedTuple):
    mu: tuple
    nu: tuple
    anchor: str  # common range of mu and nu; the vertex itself when both are empty

    @property
    def degree(self) -> int:
        return len(self.mu) - len(self.nu)

    @property
    def length(self) -> int:
        return len(self.mu) + len(self.nu)


class LeavittAlgebra:
    """L_K(E) for a finite graph E and an exact field K."""

    def __init__(self, graph: DirectedGraph, field: Field):
        self.graph = graph
        self.field = field
        self.src = {e.name: e.source for e in graph.edges}
        self.rng = {e.name: e.range for e in graph.edges}
        self.out = graph.out_edges
        self.special = {v: max(es, key=ident_key) for v, es in graph.out_edges.items() if es}
        self._is_special = frozenset(self.special.values())
        self._quotients = {}

    def __eq__(self, other):
        return isinstance(other, LeavittAlgebra) and self.graph == other.graph and self.field == other.field

    def __hash__(self):
        return hash((self.graph, self.field))

    # ------------------------------------------------------------ constructors
    def element(self, terms=None) -> "Element":
        return Element(self, terms or {})

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {Monomial((), (), v): self.field.one for v in self.graph.vertices})

    def vertex(self, v: str) -> "Element":
        self.graph.check_vertices([v])
        return Element(self, {Monomial((), (), v): self.field.one})

    def edge(self, e: str) -> "Element":
        return self.path_element(self._check_edge(e), ())

    def ghost(self, e: str) -> "Element":
        return self.path_element((), self._check_edge(e))

    def _check_edge(self, e):
        if e not in self.src:
            raise ValidationError(f"unknown edge {e!r}")
        return (e,)

    def path_element(self, mu, nu, coeff=None) -> "Element":
        """The (normalized) element mu nu*; zero when mu, nu are not composable."""
        mu, nu = tuple(mu), tuple(nu)
        for p in (mu, nu):
            for a, b in zip(p, p[1:]):
                if self.rng[a] != self.src[b]:
                    return self.zero()
        if not mu and not nu:
            raise ValidationError("use vertex() for length-zero monomials")
        if mu and nu and self.rng[mu[-1]] != self.rng[nu[-1]]:
            return self.zero()
        anchor = self.rng[mu[-1]] if mu else self.rng[nu[-1]]
        acc = {}
        self._reduce_into(mu, nu, anchor, self.field.one if coeff is None else coeff, acc)
        return Element(self, acc)

    def monomial(self, m: Monomial) -> "Element":
        acc = {}
        self._reduce_into(m.mu, m.nu, m.anchor, self.field.one, acc)
        return Element(self, acc)

    # ------------------------------------------------------------ kernel
    def is_reduced(self, m: Monomial) -> bool:
        mu, nu = m.mu, m.nu
        return not (mu and nu and mu[-1] == nu[-1] and mu[-1] in self._is_special)

    def left_vertex(self, m: Monomial) -> str:
        return self.src[m.mu[0]] if m.mu else m.anchor

    def right_vertex(self, m: Monomial) -> str:
        return self.src[m.nu[0]] if m.nu else m.anchor

    def raw_product(self, m1, m2):
        """(mu nu*)(alpha beta*) after CK1 cancellation, as an unreduced triple or None."""
        mu, nu, v = m1
        alpha, beta, w = m2
        if not nu:
            if alpha:
                if self.src[alpha[0]] != v:
                    return None
            elif w != v:
                return None
            return (mu + alpha, beta, w)
        if not alpha:
            if self.src[nu[0]] != w:
                return None
            return (mu, beta + nu, v)
        k = min(len(nu), len(alpha))
        if nu[:k] != alpha[:k]:
            return None
        if len(alpha) >= len(nu):
            return (mu + alpha[k:], beta, w)
        return (mu, beta + nu[k:], v)

    def _reduce_into(self, mu, nu, anchor, coeff, acc):
        F = self.field
        if mu and nu and mu[-1] == nu[-1] and mu[-1] in self._is_special:
            g = mu[-1]
            u = self.src[g]
            mu2, nu2 = mu[:-1], nu[:-1]
            self._reduce_into(mu2, nu2, u, coeff, acc)
            neg = F.neg(coeff)
            for e in self.out[u]:
                if e != g:
                    self._add_term(acc, Monomial(mu2 + (e,), nu2 + (e,), self.rng[e]), neg)
            return
        self._add_term(acc, Monomial(mu, nu, anchor), coeff)

    def _add_term(self, acc, m, c):
        F = self.field
        nv = F.add(acc.get(m, F.zero), c)
        if nv != 0:
            acc[m] = nv
        else:
            acc.pop(m, None)

    def multiply_monomials(self, m1, m2, coeff=None) -> dict:
        raw = self.raw_product(m1, m2)
        acc = {}
        if raw is not None:
            self._reduce_into(*raw, self.field.one if coeff is None else coeff, acc)
        return acc

    # ------------------------------------------------------------ monomial enumeration
    def paths_from(self, v: str, max_length: int):
        """All paths starting at v with length <= max_length (including the empty one)."""
        out = [()]
        frontier = [((), v)]
        for _ in range(max_length):
            nxt = []
            for p, end in frontier:
                for e in self.out[end]:
                    q = p + (e,)
                    out.append(q)
                    nxt.append((q, self.rng[e]))
            frontier = nxt
        return out

    def paths_into(self, v: str, max_length: int):
        """All paths ending at v with length <= max_length (including the empty one)."""
        out = [()]
        frontier = [((), v)]
        inc = self.graph.in_edges
        for _ in range(max_length):
            nxt = []
            for p, start in frontier:
                for e in inc[start]:
                    q = (e,) + p
                    out.append(q)
                    nxt.append((q, self.src[e]))
            frontier = nxt
        return out

    def reduced_monomials(self, max_length: int, left: str | None = None):
        """Reduced monomials of length <= max_length, optionally with a fixed left vertex."""
        starts = [left] if left is not None else list(self.graph.vertices)
        result = []
        into_cache = {}
        for u in starts:
            for mu in self.paths_from(u, max_length):
                r = self.rng[mu[-1]] if mu else u
                key = (r, max_length - len(mu))
                if key not in into_cache:
                    into_cache[key] = self.paths_into(r, key[1])
                for nu in into_cache[key]:
                    m = Monomial(mu, nu, r)
                    if self.is_reduced(m):
                        result.append(m)
        return result

    # ------------------------------------------------------------ quotients
    def quotient(self, H) -> "LeavittAlgebra":
        from .ideals import HereditarySaturatedSet

        key = H.as_set if isinstance(H, HereditarySaturatedSet) else frozenset(H)
        if key not in self._quotients:
            self._quotients[key] = LeavittAlgebra(quotient_graph(self.graph, key), self.field)
        return self._quotients[key]

    # ------------------------------------------------------------ text
    def render_monomial(self, m: Monomial) -> str:
        if not m.mu and not m.nu:
            return m.anchor
        return ".".join(list(m.mu) + [e + "*" for e in reversed(m.nu)])

    def monomial_sort_key(self, m: Monomial):
        return (m.length, m.degree, tuple(ident_key(e) for e in m.mu),
                tuple(ident_key(e) for e in m.nu), ident_key(m.anchor))


class Element:
    """Immutable element of a ``LeavittAlgebra``; ``terms`` maps reduced monomials to nonzero scalars."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: LeavittAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    @property
    def field(self):
        return self.algebra.field

    def _same(self, other):
        if not isinstance(other, Element):
            return self.algebra.one().scale(self.field.normalize(other))
        if other.algebra != self.algebra:
            raise ValidationError("elements of different algebras (graph or field mismatch)")
        return other

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        return add(self, self._same(other))

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Element(self.algebra, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return add(self, -self._same(other))

    def __rsub__(self, other):
        return add(self._same(other), -self)

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return self.scale(self.field.normalize(other))

    def __rmul__(self, other):
        return self.scale(self.field.normalize(other))

    def scale(self, c) -> "Element":
        F = self.field
        if c == 0:
            return Element(self.algebra, {})
        return Element(self.algebra, {m: F.mul(c, a) for m, a in self.terms.items()})

    def __pow__(self, n: int):
        if n < 1:
            raise ValueError("only positive powers")
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def star(self) -> "Element":
        return star(self)

    def sorted_terms(self):
        key = self.algebra.monomial_sort_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]))

    def render(self, degrees: bool = False) -> str:
        if not self.terms:
            return "0"
        F = self.field
        parts = []
        for m, c in self.sorted_terms():
            s = f"{F.render(c)}*{self.algebra.render_monomial(m)}"
            if degrees:
                s += f" (deg {m.degree})"
            parts.append(s)
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self.render()}>"


# ---------------------------------------------------------------- operations

def add(a: Element, b: Element) -> Element:
    if a.algebra != b.algebra:
        raise ValidationError("elements of different algebras (graph or field mismatch)")
    F = a.field
    acc = dict(a.terms)
    for m, c in b.terms.items():
        nv = F.add(acc.get(m, F.zero), c)
        if nv != 0:
            acc[m] = nv
        else:
            acc.pop(m, None)
    return Element(a.algebra, acc)


def multiply(a: Element, b: Element) -> Element:
    if a.algebra != b.algebra:
        raise ValidationError("elements of different algebras (graph or field mismatch)")
    A = a.algebra
    F = A.field
    acc = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            raw = A.raw_product(m1, m2)
            if raw is not None:
                A._reduce_into(*raw, F.mul(c1, c2), acc)
    return Element(A, acc)


def star(a: Element) -> Element:
    return Element(a.algebra, {Monomial(m.nu, m.mu, m.anchor): c for m, c in a.terms.items()})


def graded_components(a: Element) -> dict:
    comps = {}
    for m, c in a.terms.items():
        comps.setdefault(m.degree, {})[m] = c
    return {d: Element(a.algebra, t) for d, t in sorted(comps.items())}


def torus_act(h, a: Element) -> Element:
    """h . a = h^n a on degree-n components."""
    F = a.field
    h = F.normalize(h)
    if h == 0:
        raise ValidationError("the torus acts by nonzero scalars only")
    return Element(a.algebra, {m: F.mul(F.power(h, m.degree), c) for m, c in a.terms.items()})


def quotient_map(a: Element, H) -> Element:
    """Image of a under L(E) -> L(E)/I(H) = L(E/H)."""
    from .ideals import HereditarySaturatedSet

    A = a.algebra
    if not isinstance(H, HereditarySaturatedSet):
        H = HereditarySaturatedSet.of(A.graph, H)
    elif H.graph != A.graph:
        raise ValidationError("hereditary set belongs to another graph")
    Hs = H.as_set
    if not Hs:
        return a
    B = A.quotient(H)
    acc = {}
    for m, c in a.terms.items():
        if m.anchor in Hs or any(A.rng[e] in Hs for e in m.mu + m.nu):
            continue
        B._reduce_into(m.mu, m.nu, m.anchor, c, acc)
    return Element(B, acc)


def in_graded_ideal(a: Element, H) -> bool:
    from .ideals import HereditarySaturatedSet

    if not isinstance(H, HereditarySaturatedSet):
        H = HereditarySaturatedSet.of(a.algebra.graph, H)
    if H.as_set == a.algebra.graph.vertex_set:
        return True
    return quotient_map(a, H).is_zero()


def cycle_power(A: LeavittAlgebra, c: Cycle, k: int) -> Element:
    """c^k with c^0 = s(c) and c^-1 = c*."""
    if k == 0:
        return A.vertex(c.base)
    if k > 0:
        return A.path_element(c.edges * k, ())
    return A.path_element((), c.edges * (-k))


def eval_poly_at_cycle(f, c: Cycle, A: LeavittAlgebra) -> Element:
    """Sum of a_i c^i for f = sum of a_i x^i."""
    if f.field != A.field:
        raise ValidationError("polynomial and algebra are over different fields")
    for e in c.edges:
        if e not in A.src:
            raise ValidationError(f"cycle edge {e!r} is not in the algebra's graph")
    out = A.zero()
    for k, a in f.terms:
        out = out + cycle_power(A, c, k).scale(a)
    return out


# ---------------------------------------------------------------- expression parsing

class _Parser:
    def __init__(self, A: LeavittAlgebra, text: str):
        self.A = A
        self.s = text
        self.i = 0

    def ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self):
        self.ws()
        return self.s[self.i] if self.i < len(self.s) else ""

    def integer(self):
        self.ws()
        j = self.i
        while j < len(self.s) and self.s[j].isdigit():
            j += 1
        if j == self.i:
            raise ExpressionSyntaxError("expected an integer", self.i)
        n = int(self.s[self.i:j])
        self.i = j
        return n

    def ident(self):
        self.ws()
        j = self.i
        if j < len(self.s) and (self.s[j].isalpha() or self.s[j] == "_"):
            j += 1
            while j < len(self.s) and (self.s[j].isalnum() or self.s[j] == "_"):
                j += 1
        if j == self.i:
            raise ExpressionSyntaxError("expected an identifier", self.i)
        name = self.s[self.i:j]
        self.i = j
        return name

    def factor(self):
        pos = self.i
        name = self.ident()
        ghost = False
        if self.peek() == "*":
            # a '*' directly after an identifier is the ghost marker
            self.i += 1
            ghost = True
        A = self.A
        if name in A.graph.vertex_set:
            return A.vertex(name)
        if name in A.src:
            return A.ghost(name) if ghost else A.edge(name)
        raise ExpressionSyntaxError(f"unknown identifier {name!r}", pos)

    def monomial(self):
        out = self.factor()
        while self.peek() == ".":
            self.i += 1
            out = out * self.factor()
        return out

    def term(self):
        F = self.A.field
        if self.peek().isdigit():
            pos = self.i
            num = self.integer()
            den = 1
            if self.peek() == "/":
                self.i += 1
                den = self.integer()
            try:
                coeff = F.from_ratio(num, den)
            except ZeroDivisionError:
                raise ExpressionSyntaxError(f"coefficient {num}/{den} has no value in this field", pos) from None
            if self.peek() == "*":
                self.i += 1
                return self.monomial().scale(coeff)
            return self.A.one().scale(coeff)
        return self.monomial()

    def expr(self):
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.s[self.i] == "-" else 1
            self.i += 1
        out = self.term()
        if sign < 0:
            out = -out
        while self.peek() in ("+", "-") and self.peek():
            op = self.s[self.i]
            self.i += 1
            t = self.term()
            out = out + t if op == "+" else out - t
        if self.peek():
            raise ExpressionSyntaxError(f"unexpected {self.peek()!r}", self.i)
        return out


def parse_element(A: LeavittAlgebra, text: str) -> Element:
    """Parse the expression grammar (``3/2*e.f* - v``); the result is normalized."""
    if not text.strip():
        raise ExpressionSyntaxError("empty expression", 0)
    return _Parser(A, text).expr()


def monomial_basis_size(A: LeavittAlgebra, max_length: int) -> int:
    return len(A.reduced_monomials(max_length))


__all__ = [
    "LeavittAlgebra", "Element", "Monomial", "add", "multiply", "star", "graded_components",
    "torus_act", "quotient_map", "in_graded_ideal", "eval_poly_at_cycle", "cycle_power",
    "parse_element",
]
