"""The three-strand braid group K = <a, b | aba = bab>.

Signs come from handle reduction: a word is rewritten until its a-letters
all share one sign, and that sign (or, for a-free words b^m, the sign of m)
is the sign of the braid.  Equality is decided independently through the
reduced Burau representation, which is faithful on three strands.
"""

from __future__ import annotations

from functools import lru_cache

from .laurent import IDENTITY_MATRIX, LaurentMatrix, LaurentPoly, T, matrix
from .order import ConeSign, OrderedGroup, OrderKind
from .words import SignedLetter, Word, format_word, free_reduce, invert_word, parse_word

K_GENERATORS = ("a", "b")
DEFAULT_STEP_LIMIT = 10**6

_T_INV = LaurentPoly.monomial(1, -1)
_NEG_T = LaurentPoly.monomial(-1, 1)
_NEG_T_INV = LaurentPoly.monomial(-1, -1)

BURAU = {
    SignedLetter("a", 1): matrix([[_NEG_T, 1], [0, 1]]),
    SignedLetter("a", -1): matrix([[_NEG_T_INV, _T_INV], [0, 1]]),
    SignedLetter("b", 1): matrix([[1, 0], [T, _NEG_T]]),
    SignedLetter("b", -1): matrix([[1, 0], [1, _NEG_T_INV]]),
}


class StepLimitExceeded(RuntimeError):
    """Handle reduction ran past its step budget."""


def certificate(w: Word) -> LaurentMatrix:
    m = IDENTITY_MATRIX
    for x in w:
        if x.generator not in K_GENERATORS:
            raise ValueError(f"letter {x} is not a generator of B3")
        m = m @ BURAU[x]
    return m


_A = "a"


def _leftmost_handle(w: Word):
    """(start, end) of the first a^e ... a^-e with a-free interior, or None."""
    prev = None
    for i, x in enumerate(w):
        if x.generator != _A:
            continue
        if prev is not None and w[prev].sign == -x.sign:
            return prev, i
        prev = i
    return None


def handle_reduce(w: Word, step_limit: int = DEFAULT_STEP_LIMIT) -> Word:
    w = free_reduce(w)
    steps = 0
    while True:
        span = _leftmost_handle(w)
        if span is None:
            return w
        steps += 1
        if steps > step_limit:
            raise StepLimitExceeded(f"handle reduction exceeded {step_limit} steps")
        i, j = span
        e = w[i].sign
        middle = []
        for x in w[i + 1 : j]:
            # x is b^d; it becomes b^-e a^d b^e
            middle += [SignedLetter("b", -e), SignedLetter(_A, x.sign), SignedLetter("b", e)]
        w = free_reduce(w[:i] + tuple(middle) + w[j + 1 :])


def sign_of_reduced(w: Word) -> ConeSign:
    """Sign of a handle-free word."""
    if not w:
        return ConeSign.IDENTITY
    for x in w:
        if x.generator == _A:
            return ConeSign.POSITIVE if x.sign > 0 else ConeSign.NEGATIVE
    m = sum(x.sign for x in w)
    return ConeSign.POSITIVE if m > 0 else ConeSign.NEGATIVE


def b3_sign(w: Word, step_limit: int = DEFAULT_STEP_LIMIT) -> ConeSign:
    return sign_of_reduced(handle_reduce(w, step_limit))


def flip(w: Word) -> Word:
    swap = {"a": "b", "b": "a"}
    return tuple(SignedLetter(swap[x.generator], x.sign) for x in w)


class B3Element:
    """A braid: handle-free representative plus its Burau matrix.

    Equality and hashing use the matrix only.
    """

    __slots__ = ("reduced_word", "certificate", "_hash")

    def __init__(self, reduced_word: Word, certificate: LaurentMatrix):
        self.reduced_word = reduced_word
        self.certificate = certificate
        self._hash = hash(certificate)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, B3Element) and self._hash == other._hash and self.certificate == other.certificate

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"B3Element({format_word(self.reduced_word)!r})"

    def __str__(self) -> str:
        return format_word(self.reduced_word) or "1"


B3_IDENTITY = B3Element((), IDENTITY_MATRIX)


def b3_element(w: Word, step_limit: int = DEFAULT_STEP_LIMIT) -> B3Element:
    return B3Element(handle_reduce(w, step_limit), certificate(w))


def b3_mul(u: Word, v: Word, step_limit: int = DEFAULT_STEP_LIMIT) -> B3Element:
    return b3_element(tuple(u) + tuple(v), step_limit)


def b3_inv(u: Word, step_limit: int = DEFAULT_STEP_LIMIT) -> B3Element:
    return b3_element(invert_word(u), step_limit)


def b3_equal(u: Word, v: Word, step_limit: int = DEFAULT_STEP_LIMIT) -> bool:
    """Braid equality; the Burau and handle-reduction routes must agree."""
    by_matrix = certificate(u) == certificate(v)
    by_handles = b3_sign(tuple(u) + invert_word(v), step_limit) is ConeSign.IDENTITY
    if by_matrix != by_handles:
        raise AssertionError(
            f"equality oracles disagree on {format_word(u)!r} vs {format_word(v)!r}"
        )
    return by_matrix


@lru_cache(maxsize=1 << 18)
def _mul_elements(g: B3Element, h: B3Element, step_limit: int) -> B3Element:
    return B3Element(
        handle_reduce(g.reduced_word + h.reduced_word, step_limit),
        g.certificate @ h.certificate,
    )


@lru_cache(maxsize=1 << 16)
def _inv_element(g: B3Element, step_limit: int) -> B3Element:
    return b3_element(invert_word(g.reduced_word), step_limit)


@lru_cache(maxsize=1 << 16)
def flip_element(g: B3Element) -> B3Element:
    w = flip(g.reduced_word)
    return B3Element(handle_reduce(w), certificate(w))


class BraidB3(OrderedGroup):
    """B3 with the handle-reduction cone as a total left order."""

    name = "b3"
    generators = K_GENERATORS
    order_kind = OrderKind.TOTAL_LEFT

    def __init__(self, step_limit: int = DEFAULT_STEP_LIMIT):
        super().__init__()
        self.step_limit = step_limit

    @property
    def identity(self):
        return B3_IDENTITY

    def multiply(self, g, h):
        return _mul_elements(g, h, self.step_limit)

    def invert(self, g):
        return _inv_element(g, self.step_limit)

    def normalize(self, w):
        return b3_element(w, self.step_limit)

    def is_identity(self, g):
        return g.certificate == IDENTITY_MATRIX

    def cone_sign(self, g):
        return sign_of_reduced(g.reduced_word)

    def parse(self, text):
        if text.strip() == "1":
            return B3_IDENTITY
        return self.normalize(parse_word(text, self.generators))

    def format(self, g):
        return str(g)


class CorruptedB3(BraidB3):
    """Negative control: also declares every negative a-free braid b^-m positive."""

    name = "b3-corrupt"

    def cone_sign(self, g):
        sign = super().cone_sign(g)
        if sign is ConeSign.NEGATIVE and all(x.generator == "b" for x in g.reduced_word):
            return ConeSign.POSITIVE
        return sign
