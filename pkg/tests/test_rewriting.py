import random

from hypothesis import given, settings, strategies as st

from lpaspec.engine import LeavittAlgebra, parse_element
from lpaspec.families import e_family, figure4, rose
from lpaspec.fields import QQ, PrimeField
from lpaspec.rewriting import (element_to_words, normalize_words, rewrite_pair, rewrite_product,
                               words_to_element)

from support import random_element


def test_special_edge_rule():
    A = LeavittAlgebra(rose(2), QQ)
    # e2 is the special edge at v, so e2 e2* is rewritten and e1 e1* is not
    assert rewrite_pair(A, ("e", "e1"), ("g", "e1")) is None
    got = dict(rewrite_pair(A, ("e", "e2"), ("g", "e2")))
    assert got == {(("v", "v"),): 1, (("e", "e1"), ("g", "e1")): -1}


def test_ck1_rules():
    A = LeavittAlgebra(figure4(), QQ)
    assert rewrite_pair(A, ("g", "e1"), ("e", "e1")) == [((("v", "v2"),), 1)]
    assert rewrite_pair(A, ("g", "e1"), ("e", "e3")) == []
    assert rewrite_pair(A, ("v", "v1"), ("e", "f1")) == [((("e", "f1"),), 1)]
    assert rewrite_pair(A, ("v", "v2"), ("e", "f1")) == []


def test_word_roundtrip():
    A = LeavittAlgebra(figure4(), QQ)
    a = parse_element(A, "2*e41.f1.e1.e3* - v4 + f3*")
    assert words_to_element(A, element_to_words(a)) == a


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 9), st.sampled_from([QQ, PrimeField(3)]))
def test_normal_form_is_order_independent(seed, F):
    A = LeavittAlgebra(e_family(2, [1]), F)
    rng = random.Random(seed)
    a, b, c = (random_element(A, rng) for _ in range(3))
    results = {rewrite_product(A, [a, b, c], random.Random(seed + k)) for k in range(3)}
    assert results == {a * b * c}


def test_normal_forms_have_no_redex():
    A = LeavittAlgebra(rose(2), QQ)
    words = element_to_words(parse_element(A, "e2.e2*.e2.e2* + e1*.e2"))
    out = normalize_words(A, words, random.Random(0))
    for w in out:
        assert all(rewrite_pair(A, w[i], w[i + 1]) is None for i in range(len(w) - 1))
