"""Zappa-Szep products H ⋈ K and the orders lifted onto them.

A matched pair supplies ``alpha(k, h)`` (K acting on H) and ``beta(h, k)``
(H acting on K).  Elements are pairs ``(h, k)`` standing for the unique
factorisation ``g = hk``; multiplication is

    (h1, k1)(h2, k2) = (h1 alpha_{k1}(h2), beta_{h2}(k1) k2).

The hypotheses of the lifting results are checked on balls, never assumed:
the sign functions work on any pair and the ``check_*`` functions report
where a hypothesis breaks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable, NamedTuple

from .order import Comparison, ConeSign, OrderedGroup, OrderKind, compare_left
from .report import DEFAULT_MAX_VIOLATIONS, VerificationReport, scan
from .words import WordSyntaxError, parse_word


class ZSElement(NamedTuple):
    h: Any
    k: Any


@dataclass(eq=False)
class MatchedPair:
    H: OrderedGroup
    K: OrderedGroup
    alpha: Callable[[Any, Any], Any]  # (k, h) -> h'
    beta: Callable[[Any, Any], Any]   # (h, k) -> k'
    name: str = "pair"

    @property
    def identity(self) -> ZSElement:
        return ZSElement(self.H.identity, self.K.identity)

    def embed_h(self, h) -> ZSElement:
        return ZSElement(h, self.K.identity)

    def embed_k(self, k) -> ZSElement:
        return ZSElement(self.H.identity, k)

    def same_h(self, x, y) -> bool:
        return self.H.key(x) == self.H.key(y)

    def same_k(self, x, y) -> bool:
        return self.K.key(x) == self.K.key(y)


def zs_mul(mp: MatchedPair, g1: ZSElement, g2: ZSElement) -> ZSElement:
    H, K = mp.H, mp.K
    return ZSElement(
        H.multiply(g1.h, mp.alpha(g1.k, g2.h)),
        K.multiply(mp.beta(g2.h, g1.k), g2.k),
    )


def zs_inv(mp: MatchedPair, g: ZSElement) -> ZSElement:
    h_inv = mp.H.invert(g.h)
    k_inv = mp.K.invert(g.k)
    return ZSElement(mp.alpha(k_inv, h_inv), mp.beta(h_inv, k_inv))


def zs_equal(mp: MatchedPair, g1: ZSElement, g2: ZSElement) -> bool:
    return mp.same_h(g1.h, g2.h) and mp.same_k(g1.k, g2.k)


# lifted cones ---------------------------------------------------------------

def in_thm1_cone(mp: MatchedPair, g: ZSElement) -> bool:
    if mp.H.is_positive(g.h):
        return True
    return mp.H.is_identity(g.h) and mp.K.is_positive(g.k)


def in_thm1_right_cone(mp: MatchedPair, g: ZSElement) -> bool:
    if mp.K.is_positive(g.k):
        return True
    return mp.K.is_identity(g.k) and mp.H.is_positive(g.h)


def in_thm2_cone(mp: MatchedPair, g: ZSElement) -> bool:
    hp = mp.H.is_positive(g.h)
    kp = mp.K.is_positive(g.k)
    if hp and kp:
        return True
    if mp.H.is_identity(g.h):
        return kp
    if mp.K.is_identity(g.k):
        return hp
    return False


def _sign_from_cone(mp: MatchedPair, g: ZSElement, member) -> ConeSign:
    if mp.H.is_identity(g.h) and mp.K.is_identity(g.k):
        return ConeSign.IDENTITY
    if member(mp, g):
        return ConeSign.POSITIVE
    if member(mp, zs_inv(mp, g)):
        return ConeSign.NEGATIVE
    return ConeSign.INCOMPARABLE


def thm1_sign(mp: MatchedPair, g: ZSElement) -> ConeSign:
    """Lexicographic lift with H dominant; total when alpha preserves P_H."""
    return _sign_from_cone(mp, g, in_thm1_cone)


def thm1_right_sign(mp: MatchedPair, g: ZSElement) -> ConeSign:
    """Mirror lift with K dominant, read as a right order."""
    return _sign_from_cone(mp, g, in_thm1_right_cone)


def thm2_sign(mp: MatchedPair, g: ZSElement) -> ConeSign:
    return _sign_from_cone(mp, g, in_thm2_cone)


CONES = {
    "thm1": (thm1_sign, in_thm1_cone, OrderKind.TOTAL_LEFT),
    "thm1-right": (thm1_right_sign, in_thm1_right_cone, OrderKind.TOTAL_RIGHT),
    "thm2": (thm2_sign, in_thm2_cone, OrderKind.PARTIAL_BI),
}

_PAIR = re.compile(r"^\s*\((?P<h>[^;()]*);(?P<k>[^;()]*)\)\s*$")


class ZappaSzepGroup(OrderedGroup):
    """H ⋈ K as an ordered group under one of the lifted cones."""

    def __init__(self, mp: MatchedPair, cone: str = "thm1", name: str | None = None):
        super().__init__()
        if cone not in CONES:
            raise ValueError(f"unknown cone {cone!r}; choose from {sorted(CONES)}")
        self.mp = mp
        self.cone = cone
        self._sign, self._member, self.order_kind = CONES[cone]
        self.name = name or mp.name
        self.generators = tuple(mp.H.generators) + tuple(mp.K.generators)
        if set(mp.H.generators) & set(mp.K.generators):
            raise ValueError("factor alphabets must be disjoint")

    @property
    def identity(self):
        return self.mp.identity

    def multiply(self, g, h):
        return zs_mul(self.mp, g, h)

    def invert(self, g):
        return zs_inv(self.mp, g)

    def key(self, g):
        return (self.mp.H.key(g.h), self.mp.K.key(g.k))

    def is_identity(self, g):
        return self.mp.H.is_identity(g.h) and self.mp.K.is_identity(g.k)

    def cone_sign(self, g):
        return self._sign(self.mp, g)

    def in_cone(self, g) -> bool:
        return self._member(self.mp, g)

    def normalize(self, w):
        H, K = self.mp.H, self.mp.K
        g = self.identity
        for x in w:
            if x.generator in H.generators:
                g = zs_mul(self.mp, g, ZSElement(H.normalize((x,)), K.identity))
            else:
                g = zs_mul(self.mp, g, ZSElement(H.identity, K.normalize((x,))))
        return g

    def parse(self, text):
        """Accept ``(h-word;k-word)`` or a flat word over both alphabets."""
        m = _PAIR.match(text)
        if m:
            h_text, k_text = m.group("h"), m.group("k")
            h = self.mp.H.parse(h_text) if h_text.strip() else self.mp.H.identity
            k = self.mp.K.parse(k_text) if k_text.strip() else self.mp.K.identity
            return ZSElement(h, k)
        if any(c in text for c in "();"):
            raise WordSyntaxError(text, 0, "expected (h-word;k-word) or a flat word")
        return self.normalize(parse_word(text, self.generators))

    def format(self, g):
        H, K = self.mp.H, self.mp.K
        hs = "" if H.is_identity(g.h) else H.format(g.h)
        ks = "" if K.is_identity(g.k) else K.format(g.k)
        return f"({hs};{ks})"

    def ball(self, radius: int) -> list:
        return self.product_ball(radius, radius)

    def product_ball(self, rH: int, rK: int) -> list:
        key = ("product", rH, rK)
        if key not in self._balls:
            self._balls[key] = [
                ZSElement(h, k) for h in self.mp.H.ball(rH) for k in self.mp.K.ball(rK)
            ]
        return self._balls[key]


# condition checkers ------------------------------------------------------------

def _radii_name(mp: MatchedPair, instance: str | None) -> str:
    return instance or mp.name


def check_matched_pair(mp: MatchedPair, rH: int, rK: int, workers: int = 1,
                       cap: int = DEFAULT_MAX_VIOLATIONS, instance: str | None = None) -> VerificationReport:
    """Action laws and the two compatibility identities over ball elements."""
    H, K = mp.H, mp.K
    Hb, Kb = H.ball(rH), K.ball(rK)
    a, b = mp.alpha, mp.beta
    fh, fk = H.format, K.format
    h1_, k1_ = H.identity, K.identity

    def alpha_unit(t, fi, i, h):
        t.check(mp.same_h(a(k1_, h), h), "alpha-identity", (fi, i), lambda: [fh(h)],
                lambda: fh(h), lambda: fh(a(k1_, h)))

    def beta_unit(t, fi, i, k):
        t.check(mp.same_k(b(h1_, k), k), "beta-identity", (fi, i), lambda: [fk(k)],
                lambda: fk(k), lambda: fk(b(h1_, k)))

    def alpha_fixes_one(t, fi, i, k):
        t.check(H.is_identity(a(k, h1_)), "alpha-fixes-identity", (fi, i), lambda: [fk(k)],
                "1", lambda: fh(a(k, h1_)))

    def beta_fixes_one(t, fi, i, h):
        t.check(K.is_identity(b(h, k1_)), "beta-fixes-identity", (fi, i), lambda: [fh(h)],
                "1", lambda: fk(b(h, k1_)))

    def alpha_hom(t, fi, i, k1):
        for j, k2 in enumerate(Kb):
            k12 = K.multiply(k1, k2)
            for l, h in enumerate(Hb):
                lhs, rhs = a(k12, h), a(k1, a(k2, h))
                t.check(mp.same_h(lhs, rhs), "alpha-homomorphism", (fi, i, j, l),
                        lambda: [fk(k1), fk(k2), fh(h)], lambda: fh(rhs), lambda: fh(lhs))

    def beta_antihom(t, fi, i, h1):
        for j, h2 in enumerate(Hb):
            h12 = H.multiply(h1, h2)
            for l, k in enumerate(Kb):
                lhs, rhs = b(h12, k), b(h2, b(h1, k))
                t.check(mp.same_k(lhs, rhs), "beta-antihomomorphism", (fi, i, j, l),
                        lambda: [fh(h1), fh(h2), fk(k)], lambda: fk(rhs), lambda: fk(lhs))

    def alpha_compat(t, fi, i, k):
        for j, h1 in enumerate(Hb):
            k_moved = b(h1, k)
            left = a(k, h1)
            for l, h2 in enumerate(Hb):
                lhs = a(k, H.multiply(h1, h2))
                rhs = H.multiply(left, a(k_moved, h2))
                t.check(mp.same_h(lhs, rhs), "alpha-compatibility", (fi, i, j, l),
                        lambda: [fk(k), fh(h1), fh(h2)], lambda: fh(rhs), lambda: fh(lhs))

    def beta_compat(t, fi, i, h):
        for j, k1 in enumerate(Kb):
            for l, k2 in enumerate(Kb):
                lhs = b(h, K.multiply(k1, k2))
                rhs = K.multiply(b(a(k2, h), k1), b(h, k2))
                t.check(mp.same_k(lhs, rhs), "beta-compatibility", (fi, i, j, l),
                        lambda: [fh(h), fk(k1), fk(k2)], lambda: fk(rhs), lambda: fk(lhs))

    def alpha_bij(t, fi, i, k):
        ki = K.invert(k)
        for j, h in enumerate(Hb):
            back = a(ki, a(k, h))
            t.check(mp.same_h(back, h), "alpha-bijective", (fi, i, j),
                    lambda: [fk(k), fh(h)], lambda: fh(h), lambda: fh(back))

    def beta_bij(t, fi, i, h):
        hi = H.invert(h)
        for j, k in enumerate(Kb):
            back = b(hi, b(h, k))
            t.check(mp.same_k(back, k), "beta-bijective", (fi, i, j),
                    lambda: [fh(h), fk(k)], lambda: fk(k), lambda: fk(back))

    families = [
        ("alpha-identity", Hb, alpha_unit),
        ("beta-identity", Kb, beta_unit),
        ("alpha-fixes-identity", Kb, alpha_fixes_one),
        ("beta-fixes-identity", Hb, beta_fixes_one),
        ("alpha-homomorphism", Kb, alpha_hom),
        ("beta-antihomomorphism", Hb, beta_antihom),
        ("alpha-compatibility", Kb, alpha_compat),
        ("beta-compatibility", Hb, beta_compat),
        ("alpha-bijective", Kb, alpha_bij),
        ("beta-bijective", Hb, beta_bij),
    ]
    return scan("matched-pair", _radii_name(mp, instance), (rH, rK), families, workers, cap)


def check_star(mp: MatchedPair, rH: int, rK: int, workers: int = 1,
               cap: int = DEFAULT_MAX_VIOLATIONS, instance: str | None = None) -> VerificationReport:
    """alpha_k maps positive elements of H to positive elements, for every k."""
    H, K = mp.H, mp.K
    positives = [h for h in H.ball(rH) if H.is_positive(h)]
    Kb = K.ball(rK)

    def body(t, fi, i, k):
        for j, h in enumerate(positives):
            img = mp.alpha(k, h)
            t.check(H.is_positive(img), "alpha-preserves-P_H", (fi, i, j),
                    lambda: [K.format(k), H.format(h)], "Positive", lambda: str(H.cone_sign(img)))

    return scan("star", _radii_name(mp, instance), (rH, rK), [("star", Kb, body)], workers, cap)


def check_right_star(mp: MatchedPair, rH: int, rK: int, workers: int = 1,
                     cap: int = DEFAULT_MAX_VIOLATIONS, instance: str | None = None) -> VerificationReport:
    """beta_h maps positive elements of K to positive elements, for every h."""
    H, K = mp.H, mp.K
    positives = [k for k in K.ball(rK) if K.is_positive(k)]
    Hb = H.ball(rH)

    def body(t, fi, i, h):
        for j, k in enumerate(positives):
            img = mp.beta(h, k)
            t.check(K.is_positive(img), "beta-preserves-Q_K", (fi, i, j),
                    lambda: [H.format(h), K.format(k)], "Positive", lambda: str(K.cone_sign(img)))

    return scan("right-star", _radii_name(mp, instance), (rH, rK), [("right-star", Hb, body)], workers, cap)


def check_thm2_conditions(mp: MatchedPair, rH: int, rK: int, workers: int = 1,
                          cap: int = DEFAULT_MAX_VIOLATIONS, instance: str | None = None) -> VerificationReport:
    """Cone-restricted action conditions and conjugation-closure of each factor cone.

    A conjugate ``k h k^-1`` is computed in the product; it counts as lying in
    ``P_H`` only if its K-part is trivial and its H-part is positive.
    """
    H, K = mp.H, mp.K
    Hb, Kb = H.ball(rH), K.ball(rK)
    PH = [h for h in Hb if H.is_positive(h)]
    PK = [k for k in Kb if K.is_positive(k)]
    fh, fk = H.format, K.format

    def star_alpha(t, fi, i, k):
        for j, h in enumerate(PH):
            img = mp.alpha(k, h)
            t.check(H.is_positive(img), "star-alpha", (fi, i, j),
                    lambda: [fk(k), fh(h)], "Positive", lambda: str(H.cone_sign(img)))

    def star_beta(t, fi, i, h):
        for j, k in enumerate(PK):
            img = mp.beta(h, k)
            t.check(K.is_positive(img), "star-beta", (fi, i, j),
                    lambda: [fh(h), fk(k)], "Positive", lambda: str(K.cone_sign(img)))

    def fmt(g):
        return f"({fh(g.h)};{fk(g.k)})"

    def conj_h(t, fi, i, k):
        ek = mp.embed_k(k)
        ek_inv = zs_inv(mp, ek)
        for j, h in enumerate(PH):
            c = zs_mul(mp, zs_mul(mp, ek, mp.embed_h(h)), ek_inv)
            ok = K.is_identity(c.k) and H.is_positive(c.h)
            t.check(ok, "double-star-kPk^-1", (fi, i, j),
                    lambda: [fk(k), fh(h)], "(positive;1)", lambda: fmt(c))

    def conj_k(t, fi, i, h):
        eh = mp.embed_h(h)
        eh_inv = zs_inv(mp, eh)
        for j, k in enumerate(PK):
            c = zs_mul(mp, zs_mul(mp, eh, mp.embed_k(k)), eh_inv)
            ok = H.is_identity(c.h) and K.is_positive(c.k)
            t.check(ok, "double-star-hPh^-1", (fi, i, j),
                    lambda: [fh(h), fk(k)], "(1;positive)", lambda: fmt(c))

    families = [
        ("star-alpha", PK, star_alpha),
        ("star-beta", PH, star_beta),
        ("double-star-kPk^-1", Kb, conj_h),
        ("double-star-hPh^-1", Hb, conj_k),
    ]
    return scan("thm2-conditions", _radii_name(mp, instance), (rH, rK), families, workers, cap)


def _weakly_below(G: OrderedGroup, x, y) -> bool:
    """x^-1 y lies in the cone or is trivial."""
    s = G.cone_sign(G.multiply(G.invert(x), y))
    return s in (ConeSign.POSITIVE, ConeSign.IDENTITY)


def _weakly_below_right(G: OrderedGroup, x, y) -> bool:
    """y x^-1 lies in the cone or is trivial."""
    s = G.cone_sign(G.multiply(y, G.invert(x)))
    return s in (ConeSign.POSITIVE, ConeSign.IDENTITY)


def check_thm2_monotonicity(mp: MatchedPair, rH: int, rK: int, workers: int = 1,
                            cap: int = DEFAULT_MAX_VIOLATIONS, instance: str | None = None) -> VerificationReport:
    """Monotonicity of the actions in each argument.

    For ``h < h'`` and any k, the factorisations of ``kh < kh'`` give
    ``alpha_k(h) <= alpha_k(h')`` and ``beta_h(k) <= beta_{h'}(k)`` with at least
    one inequality strict; symmetrically for ``k < k'`` acting on any h.
    """
    H, K = mp.H, mp.K
    Hb, Kb = H.ball(rH), K.ball(rK)
    fh, fk = H.format, K.format
    a, b = mp.alpha, mp.beta

    def in_h(t, fi, i, h):
        for j, h2 in enumerate(Hb):
            if compare_left(H, h, h2) is not Comparison.LESS:
                continue
            for l, k in enumerate(Kb):
                x, x2 = a(k, h), a(k, h2)
                y, y2 = b(h, k), b(h2, k)
                w = lambda: [fh(h), fh(h2), fk(k)]
                t.check(_weakly_below(H, x, x2), "alpha-monotone-in-h", (fi, i, j, l, 0), w,
                        lambda: f"{fh(x)} <= {fh(x2)}", "violated")
                t.check(_weakly_below_right(K, y, y2), "beta-monotone-in-h", (fi, i, j, l, 1), w,
                        lambda: f"{fk(y)} <= {fk(y2)}", "violated")
                t.check(not (mp.same_h(x, x2) and mp.same_k(y, y2)), "strict-in-h", (fi, i, j, l, 2), w,
                        "some strict inequality", "both equal")

    def in_k(t, fi, i, k):
        for j, k2 in enumerate(Kb):
            if compare_left(K, k, k2) is not Comparison.LESS:
                continue
            for l, h in enumerate(Hb):
                x, x2 = a(k, h), a(k2, h)
                y, y2 = b(h, k), b(h, k2)
                w = lambda: [fk(k), fk(k2), fh(h)]
                t.check(_weakly_below(H, x, x2), "alpha-monotone-in-k", (fi, i, j, l, 0), w,
                        lambda: f"{fh(x)} <= {fh(x2)}", "violated")
                t.check(_weakly_below_right(K, y, y2), "beta-monotone-in-k", (fi, i, j, l, 1), w,
                        lambda: f"{fk(y)} <= {fk(y2)}", "violated")
                t.check(not (mp.same_h(x, x2) and mp.same_k(y, y2)), "strict-in-k", (fi, i, j, l, 2), w,
                        "some strict inequality", "both equal")

    families = [("monotone-in-h", Hb, in_h), ("monotone-in-k", Kb, in_k)]
    return scan("thm2-monotonicity", _radii_name(mp, instance), (rH, rK), families, workers, cap)


def check_product_identities(mp: MatchedPair, rH: int, rK: int, workers: int = 1,
                             cap: int = DEFAULT_MAX_VIOLATIONS, instance: str | None = None) -> VerificationReport:
    """Refactoring ``kh = alpha_k(h) beta_h(k)`` and the inverse identity
    ``alpha_{k^-1}(h^-1) = alpha_{beta_{h^-1}(k^-1)}(h)^-1``."""
    H, K = mp.H, mp.K
    Hb, Kb = H.ball(rH), K.ball(rK)
    fh, fk = H.format, K.format
    a, b = mp.alpha, mp.beta

    def body(t, fi, i, h):
        hi = H.invert(h)
        for j, k in enumerate(Kb):
            ki = K.invert(k)
            kh = zs_mul(mp, mp.embed_k(k), mp.embed_h(h))
            expect = ZSElement(a(k, h), b(h, k))
            t.check(zs_equal(mp, kh, expect), "kh-refactoring", (fi, i, j, 0),
                    lambda: [fh(h), fk(k)], lambda: f"({fh(expect.h)};{fk(expect.k)})",
                    lambda: f"({fh(kh.h)};{fk(kh.k)})")
            lhs = a(ki, hi)
            rhs = H.invert(a(b(hi, ki), h))
            t.check(mp.same_h(lhs, rhs), "inverse-identity", (fi, i, j, 1),
                    lambda: [fh(h), fk(k)], lambda: fh(rhs), lambda: fh(lhs))

    return scan("product-identities", _radii_name(mp, instance), (rH, rK),
                [("product-identities", Hb, body)], workers, cap)
