import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lpaspec.errors import ExpressionSyntaxError, UnsupportedError, ValidationError
from lpaspec.fields import QQ, PrimeField
from lpaspec.laurent import (LaurentPoly, bezout_witness, canonical_generator,
                             canonical_irreducibles, is_irreducible, is_unit, parse_laurent,
                             poly_multiply, render_laurent)

from support import brute_irreducible_monics

F2, F3, F5 = PrimeField(2), PrimeField(3), PrimeField(5)


def P(text, F=QQ):
    return parse_laurent(text, F)


def test_parse_and_render():
    f = P("x^2 - 3/2*x + 1 - x^-1")
    assert dict(f.terms) == {2: 1, 1: Fraction(-3, 2), 0: 1, -1: -1}
    assert render_laurent(f) == "x^2 - 3/2*x + 1 - x^-1"
    assert render_laurent(P("-x")) == "-x"
    assert render_laurent(LaurentPoly(QQ)) == "0"
    assert P("3x", F5) == P("3*x", F5)
    assert render_laurent(P("x + 4", F5)) == "x + 4"


@pytest.mark.parametrize("bad", ["", "x x", "*x", "2*", "x^"])
def test_parse_errors(bad):
    with pytest.raises(ExpressionSyntaxError):
        P(bad)


def test_units_and_canonical_form():
    assert is_unit(P("3*x^-4")) and not is_unit(P("x + 1"))
    assert canonical_generator(P("2*x^-1 + 4*x^2")) == P("x^3 + 1/2")
    assert canonical_generator(P("x - 1")) == canonical_generator(P("x^5 - x^4"))
    with pytest.raises(ValidationError):
        canonical_generator(LaurentPoly(QQ))


def test_irreducibility_over_q():
    assert is_irreducible(P("x - 1"))
    assert is_irreducible(P("x^2 + 1"))
    assert not is_irreducible(P("x^2 - 1"))
    assert is_irreducible(P("x^3 - 2"))
    assert not is_irreducible(P("x^3 - 8"))
    assert not is_irreducible(P("x - 3 + 2*x^-1"))  # x^-1 (x-1)(x-2)
    with pytest.raises(UnsupportedError):
        is_irreducible(P("x^4 + 1"))
    with pytest.raises(ValidationError):
        is_irreducible(P("x^3"))


def test_irreducibility_over_fp():
    assert is_irreducible(P("x^2 + x + 1", F2))
    assert not is_irreducible(P("x^2 + 1", F2))  # (x+1)^2
    assert is_irreducible(P("x^2 + 1", F3))
    assert not is_irreducible(P("x^2 + 1", F5))  # 2 is a root


def test_f2_irreducible_count():
    irr = canonical_irreducibles(F2, 4)
    # x+1; x^2+x+1; two cubics; three quartics
    assert len(irr) == 7
    assert [f.span for f in irr] == [1, 2, 3, 3, 4, 4, 4]


@pytest.mark.parametrize("p, d", [(2, 6), (3, 4), (5, 3), (7, 2)])
def test_irreducibles_match_sieve(p, d):
    F = PrimeField(p)
    got = {tuple(f.ordinary_coeffs()) for f in canonical_irreducibles(F, d)}
    assert got == set(brute_irreducible_monics(p, d))


def test_listing_requires_prime_field():
    with pytest.raises(UnsupportedError):
        canonical_irreducibles(QQ, 2)


def check_bezout(f, g):
    w = bezout_witness(f, g)
    assert w is not None
    u, v = w
    one = poly_multiply(u, canonical_generator(f)) + poly_multiply(v, canonical_generator(g))
    assert one == LaurentPoly.constant(f.field, 1)


def test_bezout_distinct_irreducibles_f2():
    irr = canonical_irreducibles(F2, 4)
    for i, f in enumerate(irr):
        for g in irr[i + 1:]:
            check_bezout(f, g)


def test_bezout_rational_examples():
    check_bezout(P("x - 2"), P("x - 3"))
    check_bezout(P("x^2 + 1"), P("x^3 - 2"))
    assert bezout_witness(P("x^2 - 1"), P("x - 1")) is None


def _rand_poly(rng, F, lo=-2, hi=3):
    terms = {k: rng.randrange(F.p) if isinstance(F, PrimeField) else Fraction(rng.randint(-4, 4), rng.randint(1, 3))
             for k in range(rng.randint(lo, 0), rng.randint(0, hi) + 1)}
    return LaurentPoly(F, terms)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 9), st.sampled_from([QQ, F2, F5]))
def test_ring_laws(seed, F):
    rng = random.Random(seed)
    f, g, h = (_rand_poly(rng, F) for _ in range(3))
    assert poly_multiply(f, poly_multiply(g, h)) == poly_multiply(poly_multiply(f, g), h)
    assert poly_multiply(f, g + h) == poly_multiply(f, g) + poly_multiply(f, h)
    assert poly_multiply(f, g) == poly_multiply(g, f)
    assert f - f == LaurentPoly(F)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 9), st.sampled_from([QQ, F3]))
def test_canonical_generator_is_unit_invariant(seed, F):
    rng = random.Random(seed)
    f = _rand_poly(rng, F)
    if not f:
        return
    k = rng.randint(-3, 3)
    c = F.from_ratio(rng.choice([1, 2, 4]))
    g = f.shift(k).scale(c)
    assert canonical_generator(f) == canonical_generator(g)
    cf = canonical_generator(f)
    assert cf.low == 0 and cf.terms[-1][1] == F.one


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_parse_render_roundtrip(seed):
    rng = random.Random(seed)
    for F in (QQ, F5):
        f = _rand_poly(rng, F)
        if f:
            assert parse_laurent(render_laurent(f), F) == f
