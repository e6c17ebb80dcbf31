"""The group H = <y, z | y^3 = z^3> and its explicit positive cone.

Every element is written uniquely as an alternating product of syllables
``y^{+-1}`` and ``z^{+-1}`` followed by a power of the central element
``Δ = y^3 = z^3``.  A square never survives: ``y^2 = y^-1 Δ``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache

from .order import ConeSign, OrderedGroup, OrderKind
from .words import SignedLetter, Word, WordSyntaxError, format_word, parse_word

H_GENERATORS = ("y", "z")


@dataclass(frozen=True)
class HNormalForm:
    syllables: tuple = ()  # tuple[tuple[str, int], ...]
    delta_exp: int = 0

    def __hash__(self) -> int:
        try:
            return self.__dict__["_hash"]
        except KeyError:
            h = hash((self.syllables, self.delta_exp))
            object.__setattr__(self, "_hash", h)
            return h

    def __str__(self) -> str:
        return format_h(self)


H_IDENTITY = HNormalForm()


class HConeClass(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    IDENTITY = "Identity"
    NOT_POSITIVE = "NotPositive"


def _check_letter(x: SignedLetter) -> None:
    if x.generator not in H_GENERATORS:
        raise ValueError(f"letter {x} is not a generator of H")


def h_push(nf: HNormalForm, x: SignedLetter) -> HNormalForm:
    """Normal form of ``nf * x``."""
    _check_letter(x)
    syl = nf.syllables
    delta = nf.delta_exp
    if syl and syl[-1][0] == x.generator:
        e = syl[-1][1]
        if e == x.sign:
            # g g = g^-1 Δ   and   g^-1 g^-1 = g Δ^-1
            return HNormalForm(syl[:-1] + ((x.generator, -e),), delta + e)
        # the new last syllable has the other generator, nothing to merge
        return HNormalForm(syl[:-1], delta)
    return HNormalForm(syl + ((x.generator, x.sign),), delta)


def h_normalize(w: Word) -> HNormalForm:
    nf = H_IDENTITY
    for x in w:
        nf = h_push(nf, x)
    return nf


@lru_cache(maxsize=1 << 18)
def h_mul(p: HNormalForm, q: HNormalForm) -> HNormalForm:
    nf = p
    for g, e in q.syllables:
        nf = h_push(nf, SignedLetter(g, e))
    if q.delta_exp:
        nf = HNormalForm(nf.syllables, nf.delta_exp + q.delta_exp)
    return nf


def h_inv(p: HNormalForm) -> HNormalForm:
    return HNormalForm(tuple((g, -e) for g, e in reversed(p.syllables)), -p.delta_exp)


@lru_cache(maxsize=1 << 16)
def h_exp(p: HNormalForm) -> int:
    return sum(e for _, e in p.syllables) + 3 * p.delta_exp


def h_cone_class(p: HNormalForm) -> HConeClass:
    if p == H_IDENTITY:
        return HConeClass.IDENTITY
    ex = h_exp(p)
    if ex > 0:
        return HConeClass.A
    if ex == 0 and p.delta_exp > 0:
        return HConeClass.B
    # a zero first y-exponent means the form opens with a z-syllable
    if ex == 0 and p.delta_exp == 0 and p.syllables[0][0] == "y":
        return HConeClass.C
    return HConeClass.NOT_POSITIVE


POSITIVE_CLASSES = (HConeClass.A, HConeClass.B, HConeClass.C)


@lru_cache(maxsize=1 << 16)
def h_sign(p: HNormalForm) -> ConeSign:
    if p == H_IDENTITY:
        return ConeSign.IDENTITY
    if h_cone_class(p) in POSITIVE_CLASSES:
        return ConeSign.POSITIVE
    if h_cone_class(h_inv(p)) in POSITIVE_CLASSES:
        return ConeSign.NEGATIVE
    return ConeSign.INCOMPARABLE


def serialize_h(p: HNormalForm) -> Word:
    """A word for ``p``: its syllables, then |n| copies of y^3 or y^-3."""
    letters = [SignedLetter(g, e) for g, e in p.syllables]
    s = 1 if p.delta_exp > 0 else -1
    letters.extend([SignedLetter("y", s)] * (3 * abs(p.delta_exp)))
    return tuple(letters)


def format_h(p: HNormalForm) -> str:
    body = "".join(g if e > 0 else g.upper() for g, e in p.syllables)
    return f"{body} Δ^{p.delta_exp}" if body else f"Δ^{p.delta_exp}"


_DELTA = re.compile(r"Δ(?:\^(-?\d+))?")


def parse_h(text: str) -> HNormalForm:
    """Parse a word over y, z, optionally carrying ``Δ^n`` tokens (Δ is central)."""
    delta = 0
    for m in _DELTA.finditer(text):
        delta += int(m.group(1)) if m.group(1) is not None else 1
    stripped = _DELTA.sub(lambda m: " " * len(m.group(0)), text)
    if "^" in stripped:
        raise WordSyntaxError(text, stripped.index("^"), "exponent without Δ")
    nf = h_normalize(parse_word(stripped, H_GENERATORS))
    return HNormalForm(nf.syllables, nf.delta_exp + delta)


def semigroup_case(p: HNormalForm, q: HNormalForm) -> str | None:
    """Which case of the semigroup argument covers the positive pair (p, q)."""
    cp, cq = h_cone_class(p), h_cone_class(q)
    if cp is HConeClass.A:
        return "case1"
    if cq is HConeClass.A:
        return "case1-mirror"
    return {
        (HConeClass.B, HConeClass.B): "case2",
        (HConeClass.C, HConeClass.C): "case3",
        (HConeClass.B, HConeClass.C): "case4",
        (HConeClass.C, HConeClass.B): "case5",
    }.get((cp, cq))


class AmalgamH(OrderedGroup):
    """H with the class-(A)/(B)/(C) cone as a total left order."""

    name = "h-amalgam"
    generators = H_GENERATORS
    order_kind = OrderKind.TOTAL_LEFT

    @property
    def identity(self):
        return H_IDENTITY

    def multiply(self, g, h):
        return h_mul(g, h)

    def invert(self, g):
        return h_inv(g)

    def normalize(self, w):
        return h_normalize(w)

    def is_identity(self, g):
        return g == H_IDENTITY

    def cone_sign(self, g):
        return h_sign(g)

    def sign_label(self, g):
        sign = h_sign(g)
        if sign is ConeSign.POSITIVE:
            return f"Positive (class {h_cone_class(g).value})"
        if sign is ConeSign.NEGATIVE:
            return f"Negative (inverse class {h_cone_class(h_inv(g)).value})"
        return str(sign)

    def parse(self, text):
        return parse_h(text)

    def format(self, g):
        return format_h(g)

    def product_case(self, g, h):
        return semigroup_case(g, h)

    def word_of(self, g) -> str:
        return format_word(serialize_h(g))
