import pytest
from hypothesis import given, strategies as st

from knitord.braid import (
    B3_IDENTITY,
    BURAU,
    BraidB3,
    StepLimitExceeded,
    b3_equal,
    b3_inv,
    b3_mul,
    b3_sign,
    certificate,
    flip,
    flip_element,
    handle_reduce,
)
from knitord.laurent import IDENTITY_MATRIX, LaurentPoly, T
from knitord.order import ConeSign
from knitord.words import enumerate_ball, format_word, invert_word, iter_ball, parse_word

w = parse_word
fmt = format_word


@pytest.mark.parametrize("word, reduced", [("aBA", "BAb"), ("", ""), ("abA", "Bab")])
def test_handle_reduce_examples(word, reduced):
    out = handle_reduce(w(word))
    assert fmt(out) == reduced
    assert certificate(out) == certificate(w(word))


@pytest.mark.parametrize("word, sign", [
    ("a", ConeSign.POSITIVE),
    ("", ConeSign.IDENTITY),
    ("abA", ConeSign.POSITIVE),
    ("B", ConeSign.NEGATIVE),
    ("bb", ConeSign.POSITIVE),
    ("aBA", ConeSign.NEGATIVE),
    ("abaBAB", ConeSign.IDENTITY),
])
def test_sign_examples(word, sign):
    assert b3_sign(w(word)) is sign


def test_equality_examples():
    assert b3_equal(w("aba"), w("bab"))
    assert not b3_equal(w("a"), w("b"))
    assert b3_mul(w("a"), w("A")) == B3_IDENTITY
    assert b3_inv(w("ab")) == b3_mul(w("B"), w("A"))


def test_flip_examples():
    assert fmt(flip(w("aB"))) == "bA"
    assert flip(()) == ()
    assert b3_equal(flip(w("aba")), w("bab"))


def test_burau_relation_and_inverses():
    assert certificate(w("aba")) == certificate(w("bab"))
    for g in "ab":
        assert BURAU[w(g)[0]] @ BURAU[w(g.upper())[0]] == IDENTITY_MATRIX
    # a and b do not commute, so the images must not either
    assert certificate(w("ab")) != certificate(w("ba"))
    for x in BURAU.values():
        assert x.det().is_unit()


def test_laurent_arithmetic():
    p = T + LaurentPoly.monomial(1, -1)
    assert p * p == T * T + LaurentPoly.monomial(2, 0) + LaurentPoly.monomial(1, -2)
    assert p - p == LaurentPoly()
    assert p(2) == 2.5


def test_step_limit():
    with pytest.raises(StepLimitExceeded):
        handle_reduce(w("abAbaBA"), step_limit=1)
    assert handle_reduce(w("abA"), step_limit=1) == w("Bab")


@pytest.fixture(scope="module")
def words5():
    return enumerate_ball(("a", "b"), 5)


def test_dual_oracle_radius_5(words5):
    for u in words5:
        red = handle_reduce(u)
        assert (b3_sign(u) is ConeSign.IDENTITY) == (certificate(u) == IDENTITY_MATRIX)
        assert certificate(red) == certificate(u)
        assert len({x.sign for x in red if x.generator == "a"}) <= 1


def test_trichotomy_radius_5(words5):
    opposite = {ConeSign.POSITIVE: ConeSign.NEGATIVE, ConeSign.NEGATIVE: ConeSign.POSITIVE,
                ConeSign.IDENTITY: ConeSign.IDENTITY}
    for u in words5:
        s = b3_sign(u)
        assert s is not ConeSign.INCOMPARABLE
        assert b3_sign(invert_word(u)) is opposite[s]


def test_cone_semigroup_radius_3():
    G = BraidB3()
    pos = [g for g in G.ball(3) if G.is_positive(g)]
    for g in pos:
        for h in pos:
            assert G.is_positive(G.multiply(g, h))


def test_flip_homomorphism_and_involution_radius_3():
    words = enumerate_ball(("a", "b"), 3)
    for u in words:
        assert flip(flip(u)) == u
        for v in words:
            assert certificate(flip(u + v)) == (certificate(flip(u)) @ certificate(flip(v)))


def test_element_equality_uses_certificate():
    G = BraidB3()
    assert G.parse("aba") == G.parse("bab")
    assert hash(G.parse("aba")) == hash(G.parse("bab"))
    assert flip_element(G.parse("a")) == G.parse("b")
    assert G.parse("1") == B3_IDENTITY and G.format(B3_IDENTITY) == "1"


def test_ball_is_deduplicated():
    G = BraidB3()
    elems = G.ball(3)
    assert len(elems) == len(set(elems))
    assert len(elems) < len(list(iter_ball(("a", "b"), 3)))


braid_words = st.lists(st.sampled_from(list("aAbB")), max_size=14).map("".join)


@given(braid_words, braid_words)
def test_random_words_reduce_consistently(u, v):
    wu, wv = w(u), w(v)
    G = BraidB3()
    assert certificate(handle_reduce(wu)) == certificate(wu)
    assert G.multiply(G.normalize(wu), G.normalize(wv)) == G.normalize(wu + wv)
    s = b3_sign(wu)
    if s is ConeSign.POSITIVE:
        assert b3_sign(invert_word(wu)) is ConeSign.NEGATIVE
