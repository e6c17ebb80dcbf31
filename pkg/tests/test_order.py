import pytest

from knitord.instances import ZLex, get_instance
from knitord.order import (
    Comparison,
    ConeSign,
    OrderKind,
    OrderKindError,
    compare,
    compare_left,
    compare_right,
    convexity_violation,
)
from knitord.zappa_szep import ZSElement


@pytest.fixture
def Z():
    return ZLex(1, "c")


def test_compare_on_integers(Z):
    assert compare_left(Z, (2,), (5,)) is Comparison.LESS
    assert compare_left(Z, (5,), (2,)) is Comparison.GREATER
    assert compare_left(Z, (3,), (3,)) is Comparison.EQUAL


def test_compare_right_on_integers(Z):
    R = Z.with_order_kind(OrderKind.TOTAL_RIGHT)
    assert compare_right(R, (2,), (5,)) is Comparison.LESS
    assert compare_right(R, (4,), (4,)) is Comparison.EQUAL
    assert compare(R, (2,), (5,)) is Comparison.LESS


def test_order_kind_mismatch_raises(Z):
    R = Z.with_order_kind(OrderKind.TOTAL_RIGHT)
    with pytest.raises(OrderKindError):
        compare_left(R, (1,), (2,))
    with pytest.raises(OrderKindError):
        compare_right(Z, (1,), (2,))


def test_partial_cone_incomparable():
    G = get_instance("thm2-direct").group
    assert compare_left(G, ZSElement((1,), (-1,)), ZSElement((0,), (0,))) is Comparison.INCOMPARABLE
    assert compare_left(G, ZSElement((0,), (0,)), ZSElement((2,), (3,))) is Comparison.LESS


def test_equal_on_any_group():
    for iid in ("h-amalgam", "b3", "g-paper", "thm2-shear"):
        G = get_instance(iid).group
        for g in G.ball(1):
            assert compare(G, g, g) is Comparison.EQUAL


def test_convexity_witnesses():
    Z2 = ZLex(2, "cd")
    assert convexity_violation(Z2, lambda g: g[0] == 0, Z2.ball(3)) is None
    x, y, z = convexity_violation(Z2, lambda g: g[1] == 0, Z2.ball(2))
    assert x[1] == 0 and z[1] == 0 and y[1] != 0
    assert compare(Z2, x, y) is Comparison.LESS and compare(Z2, y, z) is Comparison.LESS
    assert convexity_violation(Z2, lambda g: True, Z2.ball(2)) is None


def test_ball_smalls():
    Z2 = ZLex(2, "cd")
    assert len(Z2.ball(2)) == 13
    assert Z2.ball(0) == [(0, 0)]


def test_zlex_signs():
    Z3 = ZLex(3)
    assert Z3.cone_sign((0, 0, 0)) is ConeSign.IDENTITY
    assert Z3.cone_sign((0, 1, -5)) is ConeSign.POSITIVE
    assert Z3.format((0, 1, -2)) == "dEE"
    with pytest.raises(ValueError):
        ZLex(0)


@pytest.mark.parametrize("iid", ["h-amalgam", "b3", "z-lex(2)"])
def test_left_invariance_tripwire(iid):
    G = get_instance(iid).group
    ball = G.ball(2)
    for f in ball:
        for g in ball:
            for h in ball:
                if compare_left(G, g, h) is Comparison.LESS:
                    assert compare_left(G, G.multiply(f, g), G.multiply(f, h)) is Comparison.LESS
