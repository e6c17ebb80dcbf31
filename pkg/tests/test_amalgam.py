import pytest
from hypothesis import given, strategies as st

from knitord.amalgam import (
    H_IDENTITY,
    AmalgamH,
    HConeClass,
    HNormalForm,
    semigroup_case,
    format_h,
    h_cone_class,
    h_exp,
    h_inv,
    h_mul,
    h_normalize,
    h_push,
    h_sign,
    parse_h,
    serialize_h,
)
from knitord.order import ConeSign
from knitord.words import SignedLetter, enumerate_ball, parse_word

nf = lambda syl, d=0: HNormalForm(tuple(syl), d)
Y, Yi = SignedLetter("y", 1), SignedLetter("y", -1)
Z = SignedLetter("z", 1)

# y -> U, z -> S U S^-1 embeds Z3 * Z3 = H / <Δ> into PSL(2, Z)
def _mm(m, n):
    return (m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3],
            m[2] * n[0] + m[3] * n[2], m[2] * n[1] + m[3] * n[3])


def _minv(m):
    return (m[3], -m[1], -m[2], m[0])


_I2 = (1, 0, 0, 1)
_U = (0, -1, 1, 1)
_S = (0, -1, 1, 0)
_V = _mm(_mm(_S, _U), _minv(_S))
_IMAGES = {("y", 1): _U, ("y", -1): _minv(_U), ("z", 1): _V, ("z", -1): _minv(_V)}


def psl_oracle(w):
    """(matrix up to sign, exp): a complete invariant of elements of H."""
    m = _I2
    for x in w:
        m = _mm(m, _IMAGES[(x.generator, x.sign)])
    lead = next(v for v in m if v)
    if lead < 0:
        m = tuple(-v for v in m)
    return m, sum(x.sign for x in w)


def test_psl_images_satisfy_relation():
    cube = lambda m: _mm(_mm(m, m), m)
    assert cube(_U) == (-1, 0, 0, -1)
    assert cube(_V) == cube(_U)


def test_normal_form_agrees_with_matrix_oracle():
    words = enumerate_ball(("y", "z"), 5)
    by_nf, by_oracle = {}, {}
    for w in words:
        by_nf.setdefault(h_normalize(w), set()).add(w)
        by_oracle.setdefault(psl_oracle(w), set()).add(w)
    assert sorted(map(sorted, by_nf.values())) == sorted(map(sorted, by_oracle.values()))


# push / normalize ---------------------------------------------------------------

def test_push_square_then_cube():
    sq = h_push(nf([("y", 1)]), Y)
    assert sq == nf([("y", -1)], 1)
    assert h_push(sq, Y) == nf([], 1)


def test_push_cancel_and_append():
    assert h_push(nf([("y", 1)]), Yi) == H_IDENTITY
    assert h_push(nf([("y", 1)]), Z) == nf([("y", 1), ("z", 1)])


def test_push_rejects_foreign_letter():
    with pytest.raises(ValueError):
        h_push(H_IDENTITY, SignedLetter("a", 1))


def test_normalize_examples():
    assert h_normalize(parse_word("yyy")) == nf([], 1)
    assert h_normalize(parse_word("zzz")) == nf([], 1)
    assert h_normalize(()) == H_IDENTITY
    assert h_normalize(parse_word("zzzYYY")) == H_IDENTITY
    assert h_mul(h_normalize(parse_word("zzz")), h_inv(h_normalize(parse_word("yyy")))) == H_IDENTITY


def test_mul_inv_examples():
    assert h_mul(nf([("y", -1)], 1), nf([("y", -1)])) == nf([("y", 1)])
    assert h_mul(nf([("y", -1)], 1), nf([("y", -1)])) == h_normalize(parse_word("YyyyY"))
    assert h_inv(nf([("y", 1), ("z", -1)])) == nf([("z", 1), ("y", -1)])


def test_delta_drop_in_case_two_pattern():
    # both class B, the first ends with y^-1 and the second begins with y^-1
    p = nf([("y", -1), ("z", -1), ("y", -1)], 1)
    q = nf([("y", -1), ("z", -1), ("y", -1)], 1)
    assert h_cone_class(p) is HConeClass.B
    prod = h_mul(p, q)
    assert prod.delta_exp == p.delta_exp + q.delta_exp - 1
    assert h_cone_class(prod) is HConeClass.B


# exp / classes / sign --------------------------------------------------------------

@pytest.mark.parametrize("p, expected", [
    (nf([], 1), 3),
    (nf([("y", 1), ("z", -1)]), 0),
    (nf([("y", -1), ("z", -1), ("y", -1)], 1), 0),
])
def test_exp_examples(p, expected):
    assert h_exp(p) == expected
    assert h_exp(p) == sum(x.sign for x in serialize_h(p))


@pytest.mark.parametrize("p, cls", [
    (nf([], 1), HConeClass.A),
    (nf([("y", 1), ("z", -1)]), HConeClass.C),
    (nf([("z", 1), ("y", -1)]), HConeClass.NOT_POSITIVE),
    (H_IDENTITY, HConeClass.IDENTITY),
])
def test_cone_class_examples(p, cls):
    assert h_cone_class(p) is cls


def test_mirror_of_class_c_has_class_c_inverse():
    assert h_cone_class(h_inv(nf([("z", 1), ("y", -1)]))) is HConeClass.C


@pytest.mark.parametrize("p, sign", [
    (H_IDENTITY, ConeSign.IDENTITY),
    (nf([], -2), ConeSign.NEGATIVE),
    (nf([("y", 1)]), ConeSign.POSITIVE),
])
def test_sign_examples(p, sign):
    assert h_sign(p) is sign


# invariants over balls ----------------------------------------------------------------

@pytest.fixture(scope="module")
def ball7():
    return AmalgamH().ball(7)


def test_normal_form_shape(ball7):
    for p in ball7:
        gens = [g for g, _ in p.syllables]
        assert all(a != b for a, b in zip(gens, gens[1:]))
        assert all(e in (1, -1) for _, e in p.syllables)


def test_round_trip_serialize(ball7):
    for p in ball7:
        assert h_normalize(serialize_h(p)) == p
        assert parse_h(format_h(p)) == p


def test_trichotomy_radius_7(ball7):
    for p in ball7:
        flags = [p == H_IDENTITY, h_sign(p) is ConeSign.POSITIVE, h_sign(h_inv(p)) is ConeSign.POSITIVE]
        assert sum(flags) == 1, format_h(p)


def test_class_c_shape(ball7):
    seen = 0
    for p in ball7:
        if h_cone_class(p) is HConeClass.C:
            seen += 1
            assert len(p.syllables) % 2 == 0
            assert p.syllables[0][0] == "y" and p.syllables[-1][0] == "z"
    assert seen > 0


def test_exp_zero_delta_zero_forms_split_in_two(ball7):
    # exp = n = 0 forms either open with y and close with z, or the mirror
    for p in ball7:
        if p != H_IDENTITY and h_exp(p) == 0 and p.delta_exp == 0:
            first, last = p.syllables[0][0], p.syllables[-1][0]
            assert (first, last) in {("y", "z"), ("z", "y")}


def test_exp_homomorphism_radius_4():
    ball = AmalgamH().ball(4)
    for p in ball:
        for q in ball:
            assert h_exp(h_mul(p, q)) == h_exp(p) + h_exp(q)


def test_delta_of_product_within_one():
    ball = AmalgamH().ball(4)
    for p in ball:
        for q in ball:
            d = h_mul(p, q).delta_exp - p.delta_exp - q.delta_exp
            assert d in (-1, 0, 1)


# the five cases of the semigroup argument, one test family each -----------------------

def _positive_pairs(case, radius=4):
    ball = AmalgamH().ball(radius)
    pos = [p for p in ball if h_sign(p) is ConeSign.POSITIVE]
    return [(p, q) for p in pos for q in pos if semigroup_case(p, q) == case]


@pytest.mark.parametrize("case", ["case1", "case1-mirror"])
def test_case1_class_a_products_stay_in_a(case):
    pairs = _positive_pairs(case)
    assert pairs
    for p, q in pairs:
        assert h_cone_class(h_mul(p, q)) is HConeClass.A


def test_case2_b_times_b():
    pairs = _positive_pairs("case2")
    assert pairs
    for p, q in pairs:
        prod = h_mul(p, q)
        assert h_exp(prod) == 0
        assert prod.delta_exp >= p.delta_exp + q.delta_exp - 1 > 0
        assert h_cone_class(prod) is HConeClass.B


def test_case3_c_times_c():
    pairs = _positive_pairs("case3")
    assert pairs
    for p, q in pairs:
        assert h_cone_class(h_mul(p, q)) is HConeClass.C


@pytest.mark.parametrize("case", ["case4", "case5"])
def test_case4_case5_mixed_b_and_c(case):
    pairs = _positive_pairs(case)
    assert pairs
    for p, q in pairs:
        prod = h_mul(p, q)
        b_delta = p.delta_exp if case == "case4" else q.delta_exp
        assert b_delta - 1 <= prod.delta_exp <= b_delta + 1
        assert h_sign(prod) is ConeSign.POSITIVE
        if prod.delta_exp == 0:
            assert h_cone_class(prod) is HConeClass.C


def test_case4_delta_drop_to_zero_lands_in_c():
    # h class B with n_h = 1 ending in y^-1, h' class C starting with y^-1
    h = nf([("y", 1), ("z", -1), ("y", -1), ("z", -1), ("y", -1)], 1)
    hp = nf([("y", -1), ("z", 1)])
    assert h_cone_class(h) is HConeClass.B and h_cone_class(hp) is HConeClass.C
    prod = h_mul(h, hp)
    assert prod.delta_exp == 0 and h_cone_class(prod) is HConeClass.C


# parsing ----------------------------------------------------------------------

def test_parse_with_delta_tokens():
    assert parse_h("yZ Δ^0") == nf([("y", 1), ("z", -1)])
    assert parse_h("Δ^-2") == nf([], -2)
    assert parse_h("yΔ") == nf([("y", 1)], 1)
    assert format_h(nf([("y", 1), ("z", -1)])) == "yZ Δ^0"


h_words = st.lists(st.sampled_from(list("yYzZ")), max_size=12).map("".join)


@given(h_words, h_words, h_words)
def test_group_laws_random(u, v, w):
    p, q, r = (h_normalize(parse_word(x)) for x in (u, v, w))
    assert h_mul(h_mul(p, q), r) == h_mul(p, h_mul(q, r))
    assert h_mul(p, h_inv(p)) == H_IDENTITY == h_mul(h_inv(p), p)
    assert h_normalize(parse_word(u + v)) == h_mul(p, q)
    assert psl_oracle(serialize_h(h_mul(p, q))) == psl_oracle(parse_word(u + v))
