"""Registered groups and matched pairs, addressable by id from the CLI."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .amalgam import AmalgamH, HNormalForm, h_exp, serialize_h
from .braid import BraidB3, CorruptedB3, flip_element
from .order import ConeSign, OrderedGroup, OrderKind
from .words import parse_word
from .zappa_szep import MatchedPair, ZappaSzepGroup

ZLEX_LETTERS = "cdefghijklmnopqrstuvwx"


class ZLex(OrderedGroup):
    """Free abelian group of rank n with the lexicographic cone.

    Lex is a total bi-order; the kind is reported as ``PartialBi`` so the
    group can serve as a factor for bi-order lifting.
    """

    order_kind = OrderKind.PARTIAL_BI

    def __init__(self, n: int, letters: str | None = None, name: str | None = None):
        super().__init__()
        if n < 1:
            raise ValueError("z-lex rank must be at least 1")
        letters = letters or ZLEX_LETTERS[:n]
        if len(letters) != n:
            raise ValueError(f"need {n} generator letters, got {letters!r}")
        self.n = n
        self.generators = tuple(letters)
        self.name = name or f"z-lex({n})"
        self._index = {g: i for i, g in enumerate(self.generators)}

    @property
    def identity(self):
        return (0,) * self.n

    def multiply(self, g, h):
        return tuple(x + y for x, y in zip(g, h))

    def invert(self, g):
        return tuple(-x for x in g)

    def normalize(self, w):
        v = [0] * self.n
        for x in w:
            v[self._index[x.generator]] += x.sign
        return tuple(v)

    def is_identity(self, g):
        return not any(g)

    def cone_sign(self, g):
        for x in g:
            if x:
                return ConeSign.POSITIVE if x > 0 else ConeSign.NEGATIVE
        return ConeSign.IDENTITY

    def parse(self, text):
        if text.strip() == "1":
            return self.identity
        return self.normalize(parse_word(text, self.generators))

    def format(self, g):
        parts = [(c if x > 0 else c.upper()) * abs(x) for c, x in zip(self.generators, g)]
        return "".join(parts) or "1"


# the worked example -----------------------------------------------------------

def flip_parity(h: HNormalForm) -> int:
    return h_exp(h) % 2


def build_flip_parity_example(name: str = "g-paper") -> MatchedPair:
    """H ⋈ B3 with trivial alpha and beta_h = flip^(exp h mod 2).

    Presented by <y, z, a, b | aba = bab, y^3 = z^3, ay = yb, by = ya,
    az = zb, bz = za>.
    """
    H, K = AmalgamH(), BraidB3()

    def alpha(k, h):
        return h

    def beta(h, k):
        return flip_element(k) if flip_parity(h) else k

    return MatchedPair(H, K, alpha, beta, name=name)


def build_bad_beta_example(name: str = "g-bad-beta") -> MatchedPair:
    """Negative control: beta flips on y but fixes z, which y^3 = z^3 forbids.

    beta_h is read off the serialised normal form (Δ written as y^3), so it is
    a function of the element but fails the anti-homomorphism law.
    """
    H, K = AmalgamH(), BraidB3()

    def alpha(k, h):
        return h

    @lru_cache(maxsize=None)
    def y_parity(h):
        return sum(1 for x in serialize_h(h) if x.generator == "y") % 2

    def beta(h, k):
        return flip_element(k) if y_parity(h) else k

    return MatchedPair(H, K, alpha, beta, name=name)


def build_z_lex(n: int, letters: str | None = None) -> ZLex:
    return ZLex(n, letters)


def build_thm2_direct(name: str = "thm2-direct") -> MatchedPair:
    H = ZLex(1, "c", name="z-lex(1)[c]")
    K = ZLex(1, "d", name="z-lex(1)[d]")
    return MatchedPair(H, K, lambda k, h: h, lambda h, k: k, name=name)


def build_thm2_shear(name: str = "thm2-shear") -> MatchedPair:
    """H = Z^2 (lex), K = Z, alpha_k(m, n) = (m, n + k m), beta trivial."""
    H = ZLex(2, "cd", name="z-lex(2)[cd]")
    K = ZLex(1, "e", name="z-lex(1)[e]")

    def alpha(k, h):
        m, n = h
        return (m, n + k[0] * m)

    return MatchedPair(H, K, alpha, lambda h, k: k, name=name)


# registry --------------------------------------------------------------------

@dataclass
class Instance:
    id: str
    group: OrderedGroup
    pair: MatchedPair | None = None
    default_cone: str | None = None
    bi_pair: bool = False

    def product(self, cone: str | None = None) -> ZappaSzepGroup:
        if self.pair is None:
            raise ValueError(f"{self.id} is not a product instance")
        cone = cone or self.default_cone
        if cone == self.default_cone:
            return self.group  # type: ignore[return-value]
        return ZappaSzepGroup(self.pair, cone, name=self.id)


def _pair_instance(iid: str, mp: MatchedPair, cone: str, bi: bool) -> Instance:
    return Instance(iid, ZappaSzepGroup(mp, cone, name=iid), mp, cone, bi)


_FIXED = {
    "h-amalgam": lambda: Instance("h-amalgam", AmalgamH()),
    "b3": lambda: Instance("b3", BraidB3()),
    "b3-corrupt": lambda: Instance("b3-corrupt", CorruptedB3()),
    "g-paper": lambda: _pair_instance("g-paper", build_flip_parity_example(), "thm1", False),
    "g-bad-beta": lambda: _pair_instance("g-bad-beta", build_bad_beta_example(), "thm1", False),
    "thm2-direct": lambda: _pair_instance("thm2-direct", build_thm2_direct(), "thm2", True),
    "thm2-shear": lambda: _pair_instance("thm2-shear", build_thm2_shear(), "thm2", True),
}

_ZLEX = re.compile(r"^z-lex(?:\((\d+)\)|[-:](\d+))$")

INSTANCE_IDS = tuple(_FIXED) + ("z-lex(n)",)


class UnknownInstance(KeyError):
    def __str__(self) -> str:
        return f"unknown instance {self.args[0]!r}; known: {', '.join(INSTANCE_IDS)}"


def get_instance(iid: str) -> Instance:
    if iid in _FIXED:
        return _FIXED[iid]()
    m = _ZLEX.match(iid)
    if m:
        n = int(m.group(1) or m.group(2))
        group = build_z_lex(n)
        return Instance(group.name, group)
    raise UnknownInstance(iid)
