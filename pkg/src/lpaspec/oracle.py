"""Brute-force two-sided ideal membership with a length bound.

``spanning_membership(a, gens, L)`` decides whether ``a`` lies in the linear span
of the products m * g * m' (g a generator, m and m' reduced monomials with
|m| + |m'| <= L) by exact row reduction. Two exact reductions shrink the work:

* every product is homogeneous for the vertex (Peirce) bigrading, so only
  products in the blocks where ``a`` has support can contribute, and ``a`` is
  in the span iff each of its block components is;
* when all generators are Z-homogeneous, the same holds degree by degree.

Products are generated in order of increasing |m| + |m'| and the search stops
at the first level whose span contains ``a``. A negative answer only means
"not found within the bound".

With ``fold_vertices=True`` the vertex generators are first folded into a
quotient: they generate I(H) for H their hereditary saturated closure, and
L(E)/I(H) = L(E/H), so the search runs on the images in the smaller algebra.

``BoundedIdeal`` keeps the per-block spans between queries, so many elements
can be tested against one generating set without redoing the products.
"""
from __future__ import annotations

from dataclasses import dataclass

from .engine import Element, Monomial, quotient_map
from .errors import ResourceLimitError, ValidationError
from .linalg import SpanTracker

MAX_PRODUCTS = 2_000_000


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    length_bound: int
    level: int | None  # |m| + |m'| at which membership was first witnessed
    products: int      # distinct products generated in the blocks consulted
    rank: int

    @property
    def status(self) -> str:
        return "member" if self.member else "bounded-negative"

    def __bool__(self):
        return self.member


def default_length_bound(a: Element, generators) -> int:
    longest = 0
    for x in [a, *generators]:
        for m in x.terms:
            longest = max(longest, m.length)
    return 2 + 2 * longest


def _vertex_of(g: Element):
    if len(g.terms) != 1:
        return None
    (m,) = g.terms
    return m.anchor if not m.mu and not m.nu else None


class _Block:
    __slots__ = ("tracker", "seen", "level")

    def __init__(self, field, backend):
        self.tracker = SpanTracker(field, backend)
        self.seen = set()
        self.level = -1


class BoundedIdeal:
    """The products m * g * m' with |m| + |m'| <= length_bound, spanned lazily per block."""

    def __init__(self, algebra, generators, length_bound: int, max_products: int = MAX_PRODUCTS,
                 backend: str | None = None, fold_vertices: bool = False):
        gens = [g for g in generators if not g.is_zero()]
        for g in gens:
            if g.algebra != algebra:
                raise ValidationError("generator from a different algebra")
        self.ambient = algebra
        self.length_bound = length_bound
        self.max_products = max_products
        self.backend = backend
        self.products = 0
        self.fold = None   # hereditary saturated set folded away, if any
        self.everything = False
        if fold_vertices:
            from .ideals import hereditary_saturated_closure

            H0 = {v for v in map(_vertex_of, gens) if v is not None}
            if H0:
                H = hereditary_saturated_closure(algebra.graph, H0)
                if H == algebra.graph.vertex_set:
                    self.everything = True
                    gens = []
                else:
                    self.fold = H
                    gens = [quotient_map(g, H) for g in gens if _vertex_of(g) is None]
                    gens = [g for g in gens if not g.is_zero()]
        self.gens = gens
        self.algebra = gens[0].algebra if gens else None
        self.homogeneous = all(len({m.degree for m in g.terms}) == 1 for g in gens)
        self._info = []
        for g in gens:
            A = g.algebra
            lefts = {A.left_vertex(m) for m in g.terms}
            self._info.append((g, sorted(lefts), next(iter(g.terms)).degree if self.homogeneous else None))
        self._index_cache = {}
        self._left_products = {}
        self._blocks = {}

    # ------------------------------------------------------------ product generation
    def _index(self, vertex):
        """Reduced monomials with left vertex ``vertex`` and length <= L, keyed by (right vertex, length)."""
        if vertex not in self._index_cache:
            A = self.algebra
            idx = {}
            for m in A.reduced_monomials(self.length_bound, left=vertex):
                idx.setdefault((A.right_vertex(m), m.length), []).append(m)
            self._index_cache[vertex] = idx
        return self._index_cache[vertex]

    def _left_times_gen(self, m, gi):
        key = (m, gi)
        got = self._left_products.get(key)
        if got is None:
            A = self.algebra
            got = {}
            for m2, c in self._info[gi][0].terms.items():
                raw = A.raw_product(m, m2)
                if raw is not None:
                    A._reduce_into(*raw, c, got)
            self._left_products[key] = got
        return got

    def _extend(self, key, blk: _Block, level: int):
        """Add every product of total length exactly ``level`` that lands in block ``key``."""
        A = self.algebra
        u, w, d = key
        lefts = self._index(u)
        rights = self._index(w)  # starred below
        for i in range(level + 1):
            j = level - i
            for gi, (g, gl, gdeg) in enumerate(self._info):
                for rv in gl:
                    for m in lefts.get((rv, i), ()):
                        y = self._left_times_gen(m, gi)
                        if not y:
                            continue
                        for lv in {A.right_vertex(t) for t in y}:
                            for mr in rights.get((lv, j), ()):
                                m2 = Monomial(mr.nu, mr.mu, mr.anchor)
                                if d is not None and m.degree + gdeg + m2.degree != d:
                                    continue
                                acc = {}
                                for t, c in y.items():
                                    raw = A.raw_product(t, m2)
                                    if raw is not None:
                                        A._reduce_into(*raw, c, acc)
                                if not acc:
                                    continue
                                sig = frozenset(acc.items())
                                if sig in blk.seen:
                                    continue
                                blk.seen.add(sig)
                                self.products += 1
                                if self.products > self.max_products:
                                    raise ResourceLimitError(
                                        f"spanning_membership exceeded {self.max_products} products")
                                blk.tracker.add(acc)
        blk.level = level

    # ------------------------------------------------------------ queries
    def contains(self, a: Element) -> MembershipResult:
        if a.algebra != self.ambient:
            raise ValidationError("element from a different algebra")
        L = self.length_bound
        if self.everything:
            return MembershipResult(True, L, 0, 0, 0)
        if self.fold is not None:
            a = quotient_map(a, self.fold)
        if a.is_zero():
            return MembershipResult(True, L, 0, 0, 0)
        if not self.gens:
            return MembershipResult(False, L, None, 0, 0)
        A = self.algebra
        parts = {}
        for m, c in a.terms.items():
            key = (A.left_vertex(m), A.right_vertex(m), m.degree if self.homogeneous else None)
            parts.setdefault(key, {})[m] = c
        blocks = {}
        for key in sorted(parts, key=repr):
            blk = self._blocks.get(key)
            if blk is None:
                blk = self._blocks[key] = _Block(A.field, self.backend)
            blocks[key] = blk
        pending = set(parts)
        worst = 0
        for level in range(L + 1):
            for key in sorted(pending, key=repr):
                blk = blocks[key]
                if blk.level < level:
                    self._extend(key, blk, level)
                if blk.tracker.contains(parts[key]):
                    pending.discard(key)
                    worst = max(worst, level)
            if not pending:
                break
        products = sum(len(b.seen) for b in blocks.values())
        rank = sum(b.tracker.rank for b in blocks.values())
        if pending:
            return MembershipResult(False, L, None, products, rank)
        return MembershipResult(True, L, worst, products, rank)


def spanning_membership(a: Element, generators, length_bound: int | None = None,
                        max_products: int = MAX_PRODUCTS, backend: str | None = None,
                        fold_vertices: bool = False) -> MembershipResult:
    generators = list(generators)
    L = default_length_bound(a, generators) if length_bound is None else length_bound
    ideal = BoundedIdeal(a.algebra, generators, L, max_products, backend, fold_vertices)
    return ideal.contains(a)
