"""Word-level rewriting for L_K(E), independent of the monomial kernel in ``engine``.

Words are tuples of letters ``('v', name)``, ``('e', name)`` (real edge) and
``('g', name)`` (ghost edge). Every rule rewrites one adjacent pair of letters,
using the defining relations directly. ``normalize_words`` applies rules at positions
chosen by a caller-supplied RNG, so different seeds exercise different rewrite
orders; normal forms are compared against ``engine`` products in the tests.
"""
from __future__ import annotations

import random

from .engine import Element, LeavittAlgebra, Monomial


def element_to_words(a: Element) -> dict:
    out = {}
    for m, c in a.terms.items():
        out[monomial_word(m)] = c
    return out


def monomial_word(m: Monomial) -> tuple:
    if not m.mu and not m.nu:
        return (("v", m.anchor),)
    return tuple(("e", e) for e in m.mu) + tuple(("g", e) for e in reversed(m.nu))


def _letter_ends(A: LeavittAlgebra, letter):
    """(left vertex, right vertex) of a letter viewed as s(x) x r(x)."""
    kind, name = letter
    if kind == "v":
        return name, name
    if kind == "e":
        return A.src[name], A.rng[name]
    return A.rng[name], A.src[name]


def rewrite_pair(A: LeavittAlgebra, x, y):
    """Rewrite the pair xy. Returns None if xy is not a redex, else a list of (word, coeff sign)."""
    F = A.field
    kx, nx = x
    ky, ny = y
    if kx == "v" or ky == "v":
        # vertex relations and orthogonality: keep the non-vertex letter when ends match
        _, right_x = _letter_ends(A, x)
        left_y, _ = _letter_ends(A, y)
        if right_x != left_y:
            return []
        if kx == "v":
            return [((y,), F.one)]
        return [((x,), F.one)]
    _, right_x = _letter_ends(A, x)
    left_y, _ = _letter_ends(A, y)
    if right_x != left_y:
        return []
    if kx == "g" and ky == "e":
        # CK1
        if nx == ny:
            return [((("v", A.rng[nx]),), F.one)]
        return []
    if kx == "e" and ky == "g" and nx == ny and A.special.get(A.src[nx]) == nx:
        # CK2 solved for the special edge
        u = A.src[nx]
        out = [((("v", u),), F.one)]
        for e in A.out[u]:
            if e != nx:
                out.append(((("e", e), ("g", e)), F.neg(F.one)))
        return out
    return None


def _redexes(A, word):
    return [i for i in range(len(word) - 1) if rewrite_pair(A, word[i], word[i + 1]) is not None]


def normalize_words(A: LeavittAlgebra, words: dict, rng: random.Random, max_steps: int = 1_000_000) -> dict:
    F = A.field
    terms = {w: c for w, c in words.items() if c != 0}
    for _ in range(max_steps):
        candidates = [w for w in terms if _redexes(A, w)]
        if not candidates:
            return terms
        w = rng.choice(sorted(candidates))
        i = rng.choice(_redexes(A, w))
        c = terms.pop(w)
        for piece, k in rewrite_pair(A, w[i], w[i + 1]):
            nw = w[:i] + piece + w[i + 2:]
            nv = F.add(terms.get(nw, F.zero), F.mul(c, k))
            if nv != 0:
                terms[nw] = nv
            else:
                terms.pop(nw, None)
    raise RuntimeError("rewriting did not terminate within the step budget")


def word_to_monomial(A: LeavittAlgebra, word) -> Monomial:
    if len(word) == 1 and word[0][0] == "v":
        return Monomial((), (), word[0][1])
    mu = tuple(n for k, n in word if k == "e")
    nu = tuple(reversed([n for k, n in word if k == "g"]))
    anchor = A.rng[mu[-1]] if mu else A.rng[nu[-1]]
    return Monomial(mu, nu, anchor)


def words_to_element(A: LeavittAlgebra, words: dict) -> Element:
    return Element(A, {word_to_monomial(A, w): c for w, c in words.items()})


def rewrite_product(A: LeavittAlgebra, factors, rng: random.Random) -> Element:
    """Multiply elements by concatenating words and rewriting in a random order."""
    F = A.field
    acc = {(): F.one}
    for a in factors:
        nxt = {}
        for w1, c1 in acc.items():
            for w2, c2 in element_to_words(a).items():
                w = w1 + w2
                nxt[w] = F.add(nxt.get(w, F.zero), F.mul(c1, c2))
        acc = nxt
    return words_to_element(A, normalize_words(A, acc, rng))
