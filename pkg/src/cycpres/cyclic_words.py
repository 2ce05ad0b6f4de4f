"""Words in the free group F_n with cyclic-shift structure.

A word is a sequence of letters (generator index, nonzero exponent).  The
shift automorphism sends generator i to generator i+1 mod n; the n cyclic
shifts of a single word are the relators of the groups this package studies,
and on the abelianization level everything is captured by the exponent-sum
vector and its circulant matrix.

Text grammar: whitespace-separated tokens, one letter each.  ``x3`` is
generator 3, ``X3`` its inverse, and an optional suffix ``^e`` (e a nonzero
integer) raises the letter to a power, so ``X3^2`` means generator 3 with
exponent -2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .exact_linear import IntMatrix
from .poly import IntPoly

__all__ = [
    "CyclicWord",
    "WordParseError",
    "parse_word",
    "word_to_text",
    "shift",
    "exponent_sums",
    "circulant_of",
    "rep_poly",
]

_TOKEN_RE = re.compile(r"([xX])([0-9]+)(?:\^(-?[0-9]+))?\Z")


class WordParseError(ValueError):
    """Malformed word text; ``position`` is the character offset of the bad token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class CyclicWord:
    """Word in F_n as a sequence of (generator index, exponent) letters."""

    n: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank n must be a positive integer")
        for idx, exp in self.letters:
            if not 0 <= idx < self.n:
                raise ValueError(f"generator index {idx} out of range [0, {self.n})")
            if exp == 0:
                raise ValueError("letter exponents must be nonzero")


def parse_word(text: str, n: int) -> CyclicWord:
    """Parse a word over generators x0..x(n-1) from the text grammar."""
    if n < 1:
        raise ValueError("rank n must be a positive integer")
    letters = []
    pos = 0
    length = len(text)
    while pos < length:
        if text[pos].isspace():
            pos += 1
            continue
        end = pos
        while end < length and not text[end].isspace():
            end += 1
        token = text[pos:end]
        m = _TOKEN_RE.match(token)
        if not m:
            raise WordParseError(f"malformed token {token!r}", pos)
        kind, idx_text, exp_text = m.groups()
        idx = int(idx_text)
        if idx >= n:
            raise WordParseError(f"generator index {idx} out of range for n={n}", pos)
        exp = 1 if exp_text is None else int(exp_text)
        if exp == 0:
            raise WordParseError("zero exponent is not a letter", pos)
        if kind == "X":
            exp = -exp
        letters.append((idx, exp))
        pos = end
    return CyclicWord(n, tuple(letters))


def word_to_text(w: CyclicWord) -> str:
    """Serialize back to the grammar; parse_word(word_to_text(w), w.n) == w."""
    parts = []
    for idx, exp in w.letters:
        head = f"x{idx}" if exp > 0 else f"X{idx}"
        mag = abs(exp)
        parts.append(head if mag == 1 else f"{head}^{mag}")
    return " ".join(parts)


def shift(w: CyclicWord) -> CyclicWord:
    """The shift automorphism: every generator index is bumped by 1 mod n."""
    return CyclicWord(w.n, tuple(((i + 1) % w.n, e) for i, e in w.letters))


def exponent_sums(w: CyclicWord) -> tuple[int, ...]:
    """c_i = total exponent of generator i in w."""
    c = [0] * w.n
    for i, e in w.letters:
        c[i] += e
    return tuple(c)


def circulant_of(c) -> IntMatrix:
    """n x n circulant whose row i is c cyclically shifted right by i.

    Row i holds the exponent sums of the i-th shifted relator; column j
    corresponds to generator j.
    """
    c = [int(x) for x in c]
    n = len(c)
    entries = tuple(c[(j - i) % n] for i in range(n) for j in range(n))
    return IntMatrix(n, n, entries)


def rep_poly(c) -> IntPoly:
    """The representer polynomial sum of c_i t^i."""
    return IntPoly.from_coeffs(c)
