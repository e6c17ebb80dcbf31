"""Signed words over finite alphabets.

Text grammar: a lowercase letter is a positive generator, the matching
uppercase letter its inverse; whitespace is ignored and the empty string is
the identity. ``"yzY"`` parses to ``(y+, z+, y-)``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Sequence


class SignedLetter(NamedTuple):
    generator: str
    sign: int

    def inverse(self) -> "SignedLetter":
        return SignedLetter(self.generator, -self.sign)

    def __str__(self) -> str:
        return self.generator if self.sign > 0 else self.generator.upper()


Word = tuple  # tuple[SignedLetter, ...]


class WordSyntaxError(ValueError):
    """Raised for malformed word text; ``position`` is the offending index."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"{reason} at position {position} in {text!r}")


def letter(generator: str, sign: int = 1) -> SignedLetter:
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return SignedLetter(generator, sign)


def parse_word(text: str, alphabet: Iterable[str] | None = None) -> Word:
    allowed = None if alphabet is None else set(alphabet)
    out = []
    for i, ch in enumerate(text):
        if ch.isspace():
            continue
        if not ch.isalpha() or not ch.isascii():
            raise WordSyntaxError(text, i, f"unexpected character {ch!r}")
        gen = ch.lower()
        if allowed is not None and gen not in allowed:
            raise WordSyntaxError(text, i, f"generator {gen!r} not in alphabet {''.join(sorted(allowed))}")
        out.append(SignedLetter(gen, 1 if ch.islower() else -1))
    return tuple(out)


def format_word(w: Sequence[SignedLetter]) -> str:
    return "".join(str(x) for x in w)


def free_reduce(w: Iterable[SignedLetter]) -> Word:
    stack: list[SignedLetter] = []
    for x in w:
        if stack and stack[-1].generator == x.generator and stack[-1].sign == -x.sign:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def is_freely_reduced(w: Sequence[SignedLetter]) -> bool:
    return all(
        not (p.generator == q.generator and p.sign == -q.sign) for p, q in zip(w, w[1:])
    )


def invert_word(w: Sequence[SignedLetter]) -> Word:
    return tuple(x.inverse() for x in reversed(w))


def ordered_letters(alphabet: Iterable[str]) -> list[SignedLetter]:
    """Letters in enumeration order: generators sorted, positive before negative."""
    gens = sorted(set(alphabet))
    return [SignedLetter(g, s) for g in gens for s in (1, -1)]


def iter_ball(alphabet: Iterable[str], radius: int) -> Iterator[Word]:
    """Yield freely reduced words of length <= radius, length-then-lexicographic."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    letters = ordered_letters(alphabet)
    layer: list[Word] = [()]
    yield ()
    for _ in range(radius):
        nxt = []
        for w in layer:
            for x in letters:
                if w and w[-1].generator == x.generator and w[-1].sign == -x.sign:
                    continue
                nxt.append(w + (x,))
        for w in nxt:
            yield w
        layer = nxt


def enumerate_ball(alphabet: Iterable[str], radius: int) -> list[Word]:
    return list(iter_ball(alphabet, radius))


def ball_size(n_generators: int, radius: int) -> int:
    """Number of freely reduced words of length <= radius on n generators."""
    if n_generators == 0:
        return 1
    k = 2 * n_generators
    return 1 + sum(k * (k - 1) ** (i - 1) for i in range(1, radius + 1))
