"""Groups carrying a positive cone, and the orders a cone induces.

A cone ``P`` gives a left order by ``g < h`` iff ``g^-1 h`` is in ``P``.
Right orders use ``g < h`` iff ``h g^-1`` is in ``P``; with this convention
any subsemigroup partitioning the group yields a right-invariant order, so
the same cone object serves both sides and only ``order_kind`` differs.
"""

from __future__ import annotations

import enum
from typing import Any, Callable, Hashable, Iterable, Optional, Sequence

from .words import Word, iter_ball, parse_word


class ConeSign(enum.Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    IDENTITY = "Identity"
    INCOMPARABLE = "Incomparable"

    def __str__(self) -> str:
        return self.value


class Comparison(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"

    def __str__(self) -> str:
        return self.value


class OrderKind(enum.Enum):
    TOTAL_LEFT = "TotalLeft"
    TOTAL_RIGHT = "TotalRight"
    PARTIAL_BI = "PartialBi"


class OrderKindError(ValueError):
    """A comparison was requested on the wrong side of the order."""


class OrderedGroup:
    """A finitely generated group with a decidable cone.

    Subclasses supply the group operations and ``cone_sign``.  Elements must
    be hashable values; ``key`` may be overridden when structural equality
    of element objects is coarser than group equality.
    """

    name: str = "group"
    generators: tuple[str, ...] = ()
    order_kind: OrderKind = OrderKind.TOTAL_LEFT

    def __init__(self) -> None:
        self._balls: dict[int, list] = {}

    # group structure -----------------------------------------------------
    @property
    def identity(self) -> Any:
        raise NotImplementedError

    def multiply(self, g, h):
        raise NotImplementedError

    def invert(self, g):
        raise NotImplementedError

    def normalize(self, w: Word):
        raise NotImplementedError

    def is_identity(self, g) -> bool:
        return self.key(g) == self.key(self.identity)

    def cone_sign(self, g) -> ConeSign:
        raise NotImplementedError

    # conveniences ----------------------------------------------------------
    def key(self, g) -> Hashable:
        return g

    def equal(self, g, h) -> bool:
        return self.is_identity(self.multiply(self.invert(g), h))

    def is_positive(self, g) -> bool:
        return self.cone_sign(g) is ConeSign.POSITIVE

    def sign_label(self, g) -> str:
        return str(self.cone_sign(g))

    def parse(self, text: str):
        return self.normalize(parse_word(text, self.generators))

    def format(self, g) -> str:
        raise NotImplementedError

    def ball(self, radius: int) -> list:
        """Distinct elements represented by words of length <= radius.

        Order is that of first appearance in the length-lexicographic word
        enumeration.
        """
        if radius not in self._balls:
            seen: dict[Hashable, Any] = {}
            for w in iter_ball(self.generators, radius):
                g = self.normalize(w)
                seen.setdefault(self.key(g), g)
            self._balls[radius] = list(seen.values())
        return self._balls[radius]

    def with_order_kind(self, kind: OrderKind) -> "OrderedGroup":
        """Shallow copy reinterpreting the same cone as another order kind."""
        clone = object.__new__(type(self))
        clone.__dict__.update(self.__dict__)
        clone.order_kind = kind
        return clone

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


_SIGN_TO_CMP = {
    ConeSign.POSITIVE: Comparison.LESS,
    ConeSign.NEGATIVE: Comparison.GREATER,
    ConeSign.IDENTITY: Comparison.EQUAL,
    ConeSign.INCOMPARABLE: Comparison.INCOMPARABLE,
}


def compare_left(G: OrderedGroup, g, h) -> Comparison:
    if G.order_kind is OrderKind.TOTAL_RIGHT:
        raise OrderKindError(f"{G.name} carries a right order; use compare_right")
    result = _SIGN_TO_CMP[G.cone_sign(G.multiply(G.invert(g), h))]
    if result is Comparison.INCOMPARABLE and G.order_kind is OrderKind.TOTAL_LEFT:
        raise AssertionError(f"total left order on {G.name} returned Incomparable")
    return result


def compare_right(G: OrderedGroup, g, h) -> Comparison:
    if G.order_kind is not OrderKind.TOTAL_RIGHT:
        raise OrderKindError(f"{G.name} does not carry a right order; use compare_left")
    return _SIGN_TO_CMP[G.cone_sign(G.multiply(h, G.invert(g)))]


def compare(G: OrderedGroup, g, h) -> Comparison:
    """Dispatch to the comparison matching the group's order kind."""
    if G.order_kind is OrderKind.TOTAL_RIGHT:
        return compare_right(G, g, h)
    return compare_left(G, g, h)


def convexity_violation(
    G: OrderedGroup,
    member: Callable[[Any], bool],
    ball: Sequence,
) -> Optional[tuple]:
    """First triple (x, y, z) of ball elements with x < y < z, x and z members, y not.

    Scans x, then z, then y in ball order, so the witness is reproducible.
    """
    members = [g for g in ball if member(g)]
    outsiders = [g for g in ball if not member(g)]
    if not outsiders:
        return None
    for x in members:
        above = [y for y in outsiders if compare(G, x, y) is Comparison.LESS]
        if not above:
            continue
        for z in members:
            if compare(G, x, z) is not Comparison.LESS:
                continue
            for y in above:
                if compare(G, y, z) is Comparison.LESS:
                    return (x, y, z)
    return None


def elements_from_words(G: OrderedGroup, words: Iterable[Word]) -> list:
    return [G.normalize(w) for w in words]
