"""Worked-example corpus run by ``lpaspec selftest``.

Each check returns ``(ok, detail)``; the CLI prints one line per check and
exits with status 4 if any fails.
"""
from __future__ import annotations

from itertools import combinations

from .engine import LeavittAlgebra, parse_element
from .families import e_family, figure4, line, rose, single_loop
from .fields import QQ, PrimeField
from .graph import enumerate_cycles
from .ideals import GAMMA, TAU, enumerate_maximal_tails
from .laurent import canonical_irreducibles
from .spectrum import LAURENT_LINE, POINT, compute_spectrum, is_primitive


def check_figure4():
    g = figure4()
    s = compute_spectrum(g, QQ)
    hs = [list(H.vertices) for H in s.hereditary_saturated]
    want_hs = [[], ["v2"], ["v1", "v2"], ["v2", "v3"], ["v1", "v2", "v3"], ["v1", "v2", "v3", "v4"]]
    tails = [(list(t.tail.vertices), t.tail.kind) for t in s.strata]
    want_tails = [(["v1", "v2", "v3", "v4"], GAMMA), (["v3", "v4"], TAU), (["v1", "v4"], TAU), (["v4"], GAMMA)]
    covers = sorted(s.graded_covers)
    want_covers = sorted([("P_H_", "P_H_v1_v2"), ("P_H_", "P_H_v2_v3"),
                          ("P_H_v1_v2", "P_H_v1_v2_v3"), ("P_H_v2_v3", "P_H_v1_v2_v3")])
    shapes = sorted(st.shape for st in s.strata)
    ok = (hs == want_hs and tails == want_tails and covers == want_covers
          and shapes == [LAURENT_LINE, LAURENT_LINE, POINT, POINT])
    return ok, f"{len(hs)} hereditary saturated sets, {len(tails)} tails, {len(covers)} cover edges"


def check_lines():
    bad = []
    for n in range(1, 7):
        g = line(n)
        s = compute_spectrum(g, QQ)
        count = len(LeavittAlgebra(g, QQ).reduced_monomials(2 * (n - 1)))
        if len(s.strata) != 1 or not is_primitive(s.strata[0].graded) or count != n * n:
            bad.append(n)
    return not bad, "line(1..6): one primitive prime, n^2 monomials" + (f"; failed {bad}" if bad else "")


def check_roses():
    bad = [n for n in range(2, 6)
           if [(st.shape, is_primitive(st.graded)) for st in compute_spectrum(rose(n), QQ).strata]
           != [(POINT, True)]]
    return not bad, "rose(2..5): single primitive zero ideal" + (f"; failed {bad}" if bad else "")


def check_loop():
    s = compute_spectrum(single_loop(), QQ)
    st = s.strata
    ok = len(st) == 1 and st[0].shape == LAURENT_LINE and not is_primitive(st[0].graded)
    ok = ok and s.flags["P_H_"] == {"primitive": False, "locally_closed": False, "rational": False}
    return ok, "single loop: non-primitive zero ideal plus a Laurent line"


def definition_level_pattern(n: int, S) -> list:
    """Primitivity of P_0..P_{n-1} straight from the definitions: M_i = {v_{i+1},..,v_n}
    is primitive iff every cycle inside M_i leaves through an edge landing in M_i."""
    g = e_family(n, S)
    out = []
    for i in range(n):
        M = {f"v{j}" for j in range(i + 1, n + 1)}
        ok = True
        for c in enumerate_cycles(g):
            if not set(c.vertices) <= M:
                continue
            on = set(c.edges)
            if not any(e.name not in on and e.source in c.vertices and e.range in M for e in g.edges):
                ok = False
        out.append(ok)
    return out


def check_e_family(max_n: int = 4):
    shifted = 0
    total = 0
    for n in range(1, max_n + 1):
        for k in range(n + 1):
            for S in combinations(range(1, n + 1), k):
                tails = enumerate_maximal_tails(e_family(n, S))
                got = [t.kind == GAMMA for t in tails]
                if len(tails) != n or got != definition_level_pattern(n, S):
                    return False, f"E_({n},{set(S)}) disagrees with the definition-level oracle"
                total += 1
                if got == [(i + 1) in S for i in range(n)]:
                    shifted += 1
    return shifted == total, f"{total} graphs; primitive iff i+1 in S in {shifted}/{total}"


def check_ck1():
    A = LeavittAlgebra(single_loop(), QQ)
    got = parse_element(A, "x*.x").render(degrees=True)
    return got == "1*v (deg 0)", f"x*.x -> {got}"


def check_irreducible_count():
    n = len(canonical_irreducibles(PrimeField(2), 4))
    return n == 7, f"{n} canonical irreducibles of degree <= 4 over GF(2)"


CHECKS = (
    ("figure4", check_figure4),
    ("line", check_lines),
    ("rose", check_roses),
    ("loop", check_loop),
    ("E_family", check_e_family),
    ("CK1", check_ck1),
    ("irreducibles_F2", check_irreducible_count),
)


def run_selftest(echo=print) -> bool:
    all_ok = True
    for name, fn in CHECKS:
        ok, detail = fn()
        all_ok &= ok
        echo(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    return all_ok
