"""Exhaustive property suites over ordered groups and matched pairs.

Every suite walks a ball in enumeration order, counts each assertion it
evaluates, and keeps up to ``cap`` violations with replayable witnesses.
"""

from __future__ import annotations

from .amalgam import AmalgamH, h_exp, h_mul
from .braid import IDENTITY_MATRIX, certificate, handle_reduce, sign_of_reduced
from .order import ConeSign, OrderedGroup, OrderKind, OrderKindError, compare_left, compare_right
from .report import DEFAULT_MAX_VIOLATIONS, VerificationReport, scan
from .words import format_word, iter_ball
from .zappa_szep import ZappaSzepGroup, ZSElement, zs_mul

SEMIGROUP_CASES = ("case1", "case1-mirror", "case2", "case3", "case4", "case5")


def _left_less(G, g, h) -> bool:
    # straight from the cone, so a broken lift is reported rather than raised
    return G.cone_sign(G.multiply(G.invert(g), h)) is ConeSign.POSITIVE


def _right_less(G, g, h) -> bool:
    return G.cone_sign(G.multiply(h, G.invert(g))) is ConeSign.POSITIVE


def verify_semigroup(G: OrderedGroup, r: int, workers: int = 1,
                     cap: int = DEFAULT_MAX_VIOLATIONS) -> VerificationReport:
    ball = G.ball(r)
    positives = [g for g in ball if G.cone_sign(g) is ConeSign.POSITIVE]
    tagger = getattr(G, "product_case", None)

    def body(t, fi, i, g):
        for j, h in enumerate(positives):
            gh = G.multiply(g, h)
            s = G.cone_sign(gh)
            if tagger is not None:
                case = tagger(g, h)
                if case:
                    t.tag(case)
            t.check(s is ConeSign.POSITIVE, "P.P in P", (fi, i, j),
                    lambda: [G.format(g), G.format(h)], "Positive", str(s))

    order = SEMIGROUP_CASES if tagger is not None else ()
    return scan("semigroup", G.name, (r,), [("semigroup", positives, body)], workers, cap, order)


def verify_partition(G: OrderedGroup, r: int, workers: int = 1,
                     cap: int = DEFAULT_MAX_VIOLATIONS) -> VerificationReport:
    """Each element is exactly one of: identity, in P, inverse in P."""

    def body(t, fi, i, g):
        ident = G.is_identity(g)
        pos = G.cone_sign(g) is ConeSign.POSITIVE
        neg = G.cone_sign(G.invert(g)) is ConeSign.POSITIVE
        hits = int(ident) + int(pos) + int(neg)
        if ident:
            t.check(G.cone_sign(g) is ConeSign.IDENTITY, "sign(1) = Identity", (fi, i, 0),
                    lambda: [G.format(g)], "Identity", str(G.cone_sign(g)))
        t.check(hits == 1, "P | P^-1 | {1}", (fi, i, 1), lambda: [G.format(g)],
                "exactly one of identity/positive/inverse-positive",
                f"identity={ident} positive={pos} inverse-positive={neg}")

    return scan("partition", G.name, (r,), [("partition", G.ball(r), body)], workers, cap)


def verify_left_invariance(G: OrderedGroup, r: int, workers: int = 1,
                           cap: int = DEFAULT_MAX_VIOLATIONS) -> VerificationReport:
    ball = G.ball(r)
    if G.order_kind is OrderKind.TOTAL_RIGHT:
        raise OrderKindError(f"{G.name} carries a right order")
    pairs = [(g, h) for g in ball for h in ball if _left_less(G, g, h)]

    def body(t, fi, i, f):
        for j, (g, h) in enumerate(pairs):
            ok = _left_less(G, G.multiply(f, g), G.multiply(f, h))
            t.check(ok, "g<h => fg<fh", (fi, i, j),
                    lambda: [G.format(f), G.format(g), G.format(h)], "Less",
                    lambda: str(compare_left(G.with_order_kind(OrderKind.PARTIAL_BI),
                                             G.multiply(f, g), G.multiply(f, h))))

    return scan("left-invariance", G.name, (r,), [("left-invariance", ball, body)], workers, cap)


def verify_right_invariance(G: OrderedGroup, r: int, workers: int = 1,
                            cap: int = DEFAULT_MAX_VIOLATIONS) -> VerificationReport:
    ball = G.ball(r)
    if G.order_kind is not OrderKind.TOTAL_RIGHT:
        raise OrderKindError(f"{G.name} does not carry a right order")
    pairs = [(g, h) for g in ball for h in ball if _right_less(G, g, h)]

    def body(t, fi, i, f):
        for j, (g, h) in enumerate(pairs):
            ok = _right_less(G, G.multiply(g, f), G.multiply(h, f))
            t.check(ok, "g<h => gf<hf", (fi, i, j),
                    lambda: [G.format(f), G.format(g), G.format(h)], "Less",
                    lambda: str(compare_right(G, G.multiply(g, f), G.multiply(h, f))))

    return scan("right-invariance", G.name, (r,), [("right-invariance", ball, body)], workers, cap)


def verify_conjugation(G: OrderedGroup, r: int, workers: int = 1,
                       cap: int = DEFAULT_MAX_VIOLATIONS) -> VerificationReport:
    ball = G.ball(r)
    positives = [p for p in ball if G.cone_sign(p) is ConeSign.POSITIVE]

    def body(t, fi, i, g):
        gi = G.invert(g)
        for j, p in enumerate(positives):
            c = G.multiply(G.multiply(g, p), gi)
            s = G.cone_sign(c)
            t.check(s is ConeSign.POSITIVE, "gPg^-1 in P", (fi, i, j),
                    lambda: [G.format(g), G.format(p)], "Positive", lambda: f"{s} {G.format(c)}")

    return scan("conjugation", G.name, (r,), [("conjugation", ball, body)], workers, cap)


def _require_product(G, cone: str) -> ZappaSzepGroup:
    if not isinstance(G, ZappaSzepGroup) or G.cone != cone:
        raise ValueError(f"suite needs a product group carrying the {cone!r} cone")
    return G


def verify_convexity_K(G: ZappaSzepGroup, r: int, workers: int = 1,
                       cap: int = DEFAULT_MAX_VIOLATIONS) -> VerificationReport:
    """K is convex in the lifted left order and P restricted to K is P_K.

    By left invariance it suffices to rule out 1 < g < k' with g outside K.
    """
    G = _require_product(G, "thm1")
    mp = G.mp
    H, K = mp.H, mp.K
    Kb = K.ball(r)
    outside = [g for g in G.ball(r) if not H.is_identity(g.h) and G.in_cone(g)]
    Kemb = [mp.embed_k(k) for k in Kb]

    def convex(t, fi, i, g):
        for j, k in enumerate(Kemb):
            between = _left_less(G, g, k)
            t.check(not between, "no 1<g<k' with g outside K", (fi, i, j),
                    lambda: [G.format(g), G.format(k)], "not between", "1 < g < k'")

    def restrict(t, fi, i, k):
        s, sk = G.cone_sign(mp.embed_k(k)), K.cone_sign(k)
        t.check(s is sk, "P cap K = P_K", (fi, i), lambda: [K.format(k)], str(sk), str(s))

    families = [("convex", outside, convex), ("restriction", Kb, restrict)]
    return scan("convexity-k", G.name, (r,), families, workers, cap)


def verify_convexity_H(G: ZappaSzepGroup, r: int, workers: int = 1,
                       cap: int = DEFAULT_MAX_VIOLATIONS) -> VerificationReport:
    """H is convex in the lifted right order and Q restricted to H is Q_H."""
    G = _require_product(G, "thm1-right")
    mp = G.mp
    H, K = mp.H, mp.K
    Hb = H.ball(r)
    outside = [g for g in G.ball(r) if not K.is_identity(g.k) and G.in_cone(g)]
    Hemb = [mp.embed_h(h) for h in Hb]

    def convex(t, fi, i, g):
        for j, h in enumerate(Hemb):
            between = _right_less(G, g, h)
            t.check(not between, "no 1<g<h' with g outside H", (fi, i, j),
                    lambda: [G.format(g), G.format(h)], "not between", "1 < g < h'")

    def restrict(t, fi, i, h):
        s, sh = G.cone_sign(mp.embed_h(h)), H.cone_sign(h)
        t.check(s is sh, "Q cap H = Q_H", (fi, i), lambda: [H.format(h)], str(sh), str(s))

    families = [("convex", outside, convex), ("restriction", Hb, restrict)]
    return scan("convexity-h", G.name, (r,), families, workers, cap)


def verify_group_laws(G: OrderedGroup, r: int, workers: int = 1,
                      cap: int = DEFAULT_MAX_VIOLATIONS) -> VerificationReport:
    """Associativity on triples, two-sided inverses, neutral identity."""
    ball = G.ball(r)
    one = G.identity
    same = lambda x, y: G.key(x) == G.key(y)

    def assoc(t, fi, i, f):
        for j, g in enumerate(ball):
            fg = G.multiply(f, g)
            for l, h in enumerate(ball):
                lhs = G.multiply(fg, h)
                rhs = G.multiply(f, G.multiply(g, h))
                t.check(same(lhs, rhs), "associativity", (fi, i, j, l),
                        lambda: [G.format(f), G.format(g), G.format(h)],
                        G.format(rhs), lambda: G.format(lhs))

    def inverse(t, fi, i, g):
        gi = G.invert(g)
        for n, (x, y) in enumerate(((g, gi), (gi, g))):
            p = G.multiply(x, y)
            t.check(G.is_identity(p), "inverse", (fi, i, n), lambda: [G.format(g)],
                    "1", lambda: G.format(p))
        t.check(G.key(G.invert(gi)) == G.key(g), "inverse-involution", (fi, i, 2),
                lambda: [G.format(g)], lambda: G.format(g), lambda: G.format(G.invert(gi)))
        for n, p in enumerate((G.multiply(one, g), G.multiply(g, one))):
            t.check(same(p, g), "identity-neutral", (fi, i, 3 + n), lambda: [G.format(g)],
                    G.format(g), lambda: G.format(p))

    families = [("associativity", ball, assoc), ("inverse", ball, inverse)]
    return scan("group-laws", G.name, (r,), families, workers, cap)


def verify_dual_oracle(r: int, workers: int = 1, cap: int = DEFAULT_MAX_VIOLATIONS,
                       step_limit: int = 10**6, instance: str = "b3") -> VerificationReport:
    """Handle reduction against the Burau matrix on every word of the ball."""
    words = list(iter_ball(("a", "b"), r))

    def body(t, fi, i, w):
        red = handle_reduce(w, step_limit)
        cert = certificate(w)
        trivial_by_handles = sign_of_reduced(red) is ConeSign.IDENTITY
        trivial_by_matrix = cert == IDENTITY_MATRIX
        t.check(trivial_by_handles == trivial_by_matrix, "identity-agreement", (fi, i, 0),
                lambda: [format_word(w)], f"matrix-trivial={trivial_by_matrix}",
                f"handle-trivial={trivial_by_handles}")
        t.check(certificate(red) == cert, "reduction-preserves-braid", (fi, i, 1),
                lambda: [format_word(w), format_word(red)], "equal certificates", "differ")
        a_signs = {x.sign for x in red if x.generator == "a"}
        t.check(len(a_signs) <= 1, "handle-free", (fi, i, 2),
                lambda: [format_word(w), format_word(red)], "one a-sign", "mixed")

    return scan("dual-oracle", instance, (r,), [("dual-oracle", words, body)], workers, cap)


def verify_exp_homomorphism(r: int, workers: int = 1, cap: int = DEFAULT_MAX_VIOLATIONS,
                            instance: str = "h-amalgam") -> VerificationReport:
    H = AmalgamH()
    ball = H.ball(r)

    def body(t, fi, i, p):
        ep = h_exp(p)
        for j, q in enumerate(ball):
            lhs = h_exp(h_mul(p, q))
            t.check(lhs == ep + h_exp(q), "exp(pq) = exp(p) + exp(q)", (fi, i, j),
                    lambda: [H.format(p), H.format(q)], str(ep + h_exp(q)), str(lhs))

    return scan("exp-homomorphism", instance, (r,), [("exp-homomorphism", ball, body)], workers, cap)
