"""The stratified prime spectrum of L_K(E) and its Dixmier-Moeglin flags.

One stratum per maximal tail M. A gamma tail gives a single graded prime; a
tau tail gives its graded prime plus the one-parameter family
I(E^0 \\ M) + <f(c)> for f irreducible in K[x, x^-1], c the exit-less cycle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .engine import LeavittAlgebra, eval_poly_at_cycle
from .errors import UnsupportedError, ValidationError
from .fields import Field, PrimeField
from .graph import MAX_CYCLES, DirectedGraph
from .ideals import (GAMMA, MAX_VERTICES, HereditarySaturatedSet, TailDescriptor,
                     enumerate_hereditary_saturated, enumerate_maximal_tails,
                     hereditary_saturated_closure, set_key)
from .laurent import (LaurentPoly, bezout_witness, canonical_generator, canonical_irreducibles,
                      is_irreducible, is_unit, render_laurent)

GRADED = "Graded"
NONGRADED = "NonGraded"
POINT = "Point"
LAURENT_LINE = "LaurentLine"


@dataclass(frozen=True)
class PrimeDescriptor:
    kind: str
    hs: HereditarySaturatedSet
    tail: TailDescriptor
    generator: Optional[LaurentPoly] = None

    @property
    def H(self) -> frozenset:
        return self.hs.as_set

    @property
    def cycle(self):
        return self.tail.cycle if self.kind == NONGRADED else None

    @property
    def is_graded(self) -> bool:
        return self.kind == GRADED

    @property
    def name(self) -> str:
        base = "P_H_" + "_".join(self.hs.vertices)
        if self.kind == GRADED:
            return base
        return f"{base}__f_{render_laurent(self.generator)}"

    def describe(self) -> str:
        gens = list(self.hs.vertices)
        if self.kind == NONGRADED:
            gens.append(f"({render_laurent(self.generator)})({'.'.join(self.tail.cycle.edges)})")
        return "(" + ", ".join(gens) + ")" if gens else "(0)"

    def __repr__(self):
        return f"Prime{self.describe()}"


def graded_prime_of_tail(t: TailDescriptor) -> PrimeDescriptor:
    return PrimeDescriptor(GRADED, t.complement(), t)


def nongraded_prime(t: TailDescriptor, f: LaurentPoly) -> PrimeDescriptor:
    """I(E^0 \\ M) + <f(c(M))> for a tau tail M and irreducible f (stored canonically)."""
    if not t.is_tau:
        raise ValidationError("non-graded primes live only over tau tails")
    if not f or is_unit(f):
        raise ValidationError("the generator must be a non-unit")
    f = canonical_generator(f)
    if not is_irreducible(f):
        raise ValidationError(f"{render_laurent(f)} is not irreducible")
    return PrimeDescriptor(NONGRADED, t.complement(), t, f)


@dataclass(frozen=True)
class Stratum:
    tail: TailDescriptor
    shape: str
    graded: PrimeDescriptor

    @property
    def family(self) -> Optional[str]:
        """Symbolic marker for the non-graded primes of a Laurent-line stratum."""
        if self.shape != LAURENT_LINE:
            return None
        gens = ", ".join(list(self.graded.hs.vertices) + [f"f({'.'.join(self.tail.cycle.edges)})"])
        return "{(" + gens + ") : f irreducible in K[x,x^-1]}"


@dataclass
class SpectrumDescription:
    graph: DirectedGraph
    field: Field
    hereditary_saturated: tuple
    strata: tuple
    flags: dict = field(default_factory=dict)          # prime name -> {primitive, locally_closed, rational}
    family_flags: dict = field(default_factory=dict)   # graded prime name of a tau stratum -> flags
    graded_covers: tuple = ()

    @property
    def graded_primes(self) -> tuple:
        return tuple(s.graded for s in self.strata)

    def stratum_of(self, P: PrimeDescriptor) -> Stratum:
        for s in self.strata:
            if s.tail.as_set == P.tail.as_set:
                return s
        raise ValidationError(f"{P!r} is not in this spectrum")


# ---------------------------------------------------------------- flags

def is_primitive(P: PrimeDescriptor) -> bool:
    if P.kind == NONGRADED:
        return True
    return P.tail.kind == GAMMA


def is_rational(P: PrimeDescriptor) -> bool:
    """Rationality via the Dixmier-Moeglin equivalence; the extended centroid is not built."""
    return is_primitive(P)


def _sample_generators(F: Field, avoid=None, count: int = 3) -> list:
    if isinstance(F, PrimeField):
        pool = canonical_irreducibles(F, 2)
    else:
        pool = [LaurentPoly(F, {1: F.one, 0: F.from_ratio(-k)}) for k in range(2, 2 + count + 1)]
    out = [f for f in pool if f != avoid]
    return out[:count]


@lru_cache(maxsize=None)
def family_intersection_collapses(F: Field) -> bool:
    """Distinct irreducibles are pairwise comaximal (Bezout witnesses found), so the
    ideals (f) over the whole family have trivial common part."""
    samples = _sample_generators(F)
    for i, f in enumerate(samples):
        for g in samples[i + 1:]:
            if bezout_witness(f, g) is None:
                return False
    return len(samples) >= 2


def primes_strictly_above_same_content(P: PrimeDescriptor, spectrum: SpectrumDescription) -> list:
    """Representatives of primes Q > P with the same vertex content as P, found through the order."""
    out = []
    for s in spectrum.strata:
        candidates = [s.graded]
        if s.shape == LAURENT_LINE:
            candidates += [nongraded_prime(s.tail, f)
                           for f in _sample_generators(spectrum.field, P.generator)]
        for Q in candidates:
            if Q.H == P.H and specialization_leq(P, Q) and not specialization_leq(Q, P):
                out.append(Q)
    return out


def is_locally_closed(P: PrimeDescriptor, spectrum: SpectrumDescription) -> bool:
    """P is locally closed iff the primes strictly above it intersect strictly above P.

    Primes above P that add a vertex contain P + <v>, and finitely many such
    ideals multiply to something strictly above P. Only same-content primes can
    pull the intersection back to P; inside a stratum those form the family
    {(f)}, whose intersection is trivial because distinct irreducibles are comaximal.
    """
    same = primes_strictly_above_same_content(P, spectrum)
    if not same:
        return True
    families = {Q.tail.as_set for Q in same if Q.kind == NONGRADED}
    if families and family_intersection_collapses(spectrum.field):
        return False
    return True


# ---------------------------------------------------------------- specialization

def _closure_with_base(P: PrimeDescriptor) -> frozenset:
    return hereditary_saturated_closure(P.hs.graph, P.H | {P.tail.base})


def specialization_leq(P: PrimeDescriptor, Q: PrimeDescriptor) -> bool:
    """P is contained in Q."""
    if P.hs.graph != Q.hs.graph:
        raise ValidationError("primes from different spectra")
    if P.generator is not None and Q.generator is not None and P.generator.field != Q.generator.field:
        raise ValidationError("primes over different fields")
    if P.kind == GRADED:
        return P.H <= Q.H
    if _closure_with_base(P) <= Q.H:
        return True
    if Q.kind == GRADED:
        return False
    return P.H <= Q.H and P.tail.cycle == Q.tail.cycle and P.generator == Q.generator


def _covers(primes, leq) -> tuple:
    edges = []
    for P in primes:
        for Q in primes:
            if P is Q or not leq(P, Q) or leq(Q, P):
                continue
            between = any(R is not P and R is not Q and leq(P, R) and leq(R, Q) and not leq(R, P)
                          and not leq(Q, R) for R in primes)
            if not between:
                edges.append((P, Q))
    return tuple(edges)


# ---------------------------------------------------------------- assembly

def compute_spectrum(g: DirectedGraph, field: Field, max_vertices: int = MAX_VERTICES,
                     max_cycles: int = MAX_CYCLES) -> SpectrumDescription:
    hs = enumerate_hereditary_saturated(g, max_vertices)
    tails = enumerate_maximal_tails(g, max_vertices, max_cycles)
    strata = tuple(Stratum(t, LAURENT_LINE if t.is_tau else POINT, graded_prime_of_tail(t)) for t in tails)
    spec = SpectrumDescription(g, field, hs, strata)
    for s in strata:
        P = s.graded
        spec.flags[P.name] = prime_flags(P, spec)
        if s.shape == LAURENT_LINE:
            rep = nongraded_prime(s.tail, _sample_generators(field)[0])
            spec.family_flags[P.name] = prime_flags(rep, spec)
    ordered = sorted(spec.graded_primes, key=lambda P: set_key(P.H))
    spec.graded_covers = tuple((P.name, Q.name) for P, Q in _covers(ordered, specialization_leq))
    return spec


def prime_flags(P: PrimeDescriptor, spectrum: SpectrumDescription) -> dict:
    return {
        "primitive": is_primitive(P),
        "locally_closed": is_locally_closed(P, spectrum),
        "rational": is_rational(P),
    }


def instantiate_nongraded(spectrum: SpectrumDescription, max_degree: int | None = None,
                          generators=None) -> list:
    """Concrete non-graded primes: every canonical irreducible up to ``max_degree`` (prime
    fields only), and/or explicitly supplied generators, for each tau stratum."""
    F = spectrum.field
    pool = []
    if max_degree:
        if not isinstance(F, PrimeField):
            raise UnsupportedError("degree-bounded instantiation needs a prime field; pass generators")
        pool.extend(canonical_irreducibles(F, max_degree))
    for f in generators or ():
        f = canonical_generator(f)
        if f not in pool:
            pool.append(f)
    out = []
    for s in spectrum.strata:
        if s.shape == LAURENT_LINE:
            out.extend(nongraded_prime(s.tail, f) for f in pool)
    return out


def all_primes(spectrum: SpectrumDescription, max_degree: int | None = None, generators=None) -> list:
    return list(spectrum.graded_primes) + instantiate_nongraded(spectrum, max_degree, generators)


def prime_generators(P: PrimeDescriptor, A: LeavittAlgebra) -> list:
    """Ideal generators of P as elements of A: the vertices of H, plus f(c) when non-graded."""
    gens = [A.vertex(v) for v in P.hs.vertices]
    if P.kind == NONGRADED:
        gens.append(eval_poly_at_cycle(P.generator, P.tail.cycle, A))
    return gens


# ---------------------------------------------------------------- DOT

def _label(P: PrimeDescriptor) -> str:
    return "(" + ",".join(P.hs.vertices) + ")" if P.hs.vertices else "(0)"


def poset_dot(spectrum: SpectrumDescription) -> str:
    lines = ["digraph spectrum {", "  rankdir=BT;"]
    for s in spectrum.strata:
        P = s.graded
        lines.append(f'  "{P.name}" [label="{_label(P)}"];')
        if s.shape == LAURENT_LINE:
            fam = "F" + P.name[1:]
            lines.append(f'  "{fam}" [label="{s.family}", style=dashed];')
    for a, b in spectrum.graded_covers:
        lines.append(f'  "{a}" -> "{b}";')
    for s in spectrum.strata:
        if s.shape == LAURENT_LINE:
            P = s.graded
            lines.append(f'  "{P.name}" -> "F{P.name[1:]}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "GRADED", "NONGRADED", "POINT", "LAURENT_LINE", "PrimeDescriptor", "Stratum",
    "SpectrumDescription", "graded_prime_of_tail", "nongraded_prime", "compute_spectrum",
    "is_primitive", "is_locally_closed", "is_rational", "specialization_leq", "poset_dot",
    "instantiate_nongraded", "all_primes", "prime_generators", "prime_flags",
    "family_intersection_collapses",
]
