"""Integer Laurent polynomials in one variable t, and 2x2 matrices over them."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, NamedTuple


class LaurentPoly:
    """Finite-support map exponent -> nonzero integer coefficient."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[int, int] = defaultdict(int)
        for e, c in items:
            acc[e] += c
        self.terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = hash(self.terms)

    @classmethod
    def monomial(cls, coef: int, exp: int = 0) -> "LaurentPoly":
        return cls(((exp, coef),))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly(self.terms + other.terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly((e, -c) for e, c in self.terms)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.terms or not other.terms:
            return ZERO
        return LaurentPoly((e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return self._hash

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and self.terms[0][1] in (1, -1)

    def __call__(self, t):
        return sum(c * t**e for e, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if mono and abs(c) == 1:
                parts.append(("-" if c < 0 else "+") + mono)
            else:
                parts.append(f"{c:+d}{mono}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    __repr__ = __str__


ZERO = LaurentPoly()
ONE = LaurentPoly.monomial(1)
T = LaurentPoly.monomial(1, 1)


class LaurentMatrix(NamedTuple):
    """Row-major 2x2 matrix [[a, b], [c, d]]."""

    a: LaurentPoly
    b: LaurentPoly
    c: LaurentPoly
    d: LaurentPoly

    def __matmul__(self, o: "LaurentMatrix") -> "LaurentMatrix":
        return LaurentMatrix(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def det(self) -> LaurentPoly:
        return self.a * self.d - self.b * self.c

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


IDENTITY_MATRIX = LaurentMatrix(ONE, ZERO, ZERO, ONE)


def matrix(rows) -> LaurentMatrix:
    """Build from nested rows whose entries are LaurentPoly or int."""
    (a, b), (c, d) = rows
    lift = lambda x: x if isinstance(x, LaurentPoly) else LaurentPoly.monomial(x)
    return LaurentMatrix(lift(a), lift(b), lift(c), lift(d))
