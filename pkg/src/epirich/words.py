"""Finite words over small integer alphabets.

Letters are dense integers 0..size-1.  Internally a word stores one
character per letter (``chr(letter)``) so that scanning, slicing and
set operations run at C speed; glyphs are presentation only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import AlphabetMismatchError, InvalidArgumentError

_DIGIT_GLYPHS = "0123456789"


def _default_glyphs(size: int) -> tuple[str, ...]:
    if size <= 10:
        return tuple(_DIGIT_GLYPHS[:size])
    return tuple(str(i) for i in range(size))


@dataclass(frozen=True)
class Alphabet:
    """A set of letters 0..size-1 with an optional glyph per letter."""

    size: int
    glyphs: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.size < 1:
            raise InvalidArgumentError("alphabet size must be >= 1")
        if self.glyphs is not None:
            if len(self.glyphs) != self.size:
                raise InvalidArgumentError("need one glyph per letter")
            if len(set(self.glyphs)) != self.size:
                raise InvalidArgumentError("glyph map must be injective")

    def glyph(self, letter: int) -> str:
        if not 0 <= letter < self.size:
            raise AlphabetMismatchError(f"letter {letter} outside alphabet of size {self.size}")
        if self.glyphs is not None:
            return self.glyphs[letter]
        return _default_glyphs(self.size)[letter]

    @property
    def letters(self) -> range:
        return range(self.size)


BINARY = Alphabet(2)
TERNARY = Alphabet(3)
#: codomain of binary projections; letter 0 prints as A, letter 1 as B
AB = Alphabet(2, ("A", "B"))


class Word:
    """Immutable finite word.  Compares by letters and alphabet size."""

    __slots__ = ("chars", "alphabet")

    def __init__(self, letters: Iterable[int], alphabet: Alphabet | None = None):
        seq = tuple(letters)
        if alphabet is None:
            alphabet = Alphabet(max(seq) + 1 if seq else 1)
        for l in seq:
            if not 0 <= l < alphabet.size:
                raise AlphabetMismatchError(f"letter {l} outside alphabet of size {alphabet.size}")
        object.__setattr__(self, "chars", "".join(map(chr, seq)))
        object.__setattr__(self, "alphabet", alphabet)

    @classmethod
    def from_chars(cls, chars: str, alphabet: Alphabet) -> "Word":
        """Fast constructor from the internal character encoding."""
        if chars and ord(max(chars)) >= alphabet.size:
            raise AlphabetMismatchError("character outside alphabet")
        w = object.__new__(cls)
        object.__setattr__(w, "chars", chars)
        object.__setattr__(w, "alphabet", alphabet)
        return w

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(map(ord, self.chars))

    def __len__(self) -> int:
        return len(self.chars)

    def __iter__(self) -> Iterator[int]:
        return iter(map(ord, self.chars))

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word.from_chars(self.chars[item], self.alphabet)
        return ord(self.chars[item])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.chars == other.chars
            and self.alphabet.size == other.alphabet.size
        )

    def __hash__(self) -> int:
        return hash((self.chars, self.alphabet.size))

    def __lt__(self, other: "Word") -> bool:
        # lexicographic in integer letter order; chr() preserves it
        return self.chars < other.chars

    def __le__(self, other: "Word") -> bool:
        return self.chars <= other.chars

    def __add__(self, other: "Word") -> "Word":
        alpha = self.alphabet if self.alphabet.size >= other.alphabet.size else other.alphabet
        return Word.from_chars(self.chars + other.chars, alpha)

    def __mul__(self, times: int) -> "Word":
        return Word.from_chars(self.chars * times, self.alphabet)

    def reverse(self) -> "Word":
        return Word.from_chars(self.chars[::-1], self.alphabet)

    @property
    def is_palindrome(self) -> bool:
        return self.chars == self.chars[::-1]

    def is_empty(self) -> bool:
        return not self.chars

    def __str__(self) -> str:
        glyphs = self.alphabet.glyphs or _default_glyphs(self.alphabet.size)
        return "".join(glyphs[ord(c)] for c in self.chars)

    def __repr__(self) -> str:
        return f"Word({str(self)!r}, size={self.alphabet.size})"


EMPTY = Word.from_chars("", Alphabet(1))


def parse_word(text: str, alphabet: Alphabet | None = None) -> Word:
    """Parse a digit string such as ``"0102010"`` into a Word."""
    letters = []
    for ch in text:
        if ch not in _DIGIT_GLYPHS:
            raise InvalidArgumentError(f"cannot parse letter {ch!r}; expected a digit")
        letters.append(int(ch))
    return Word(letters, alphabet)
