"""Factor index of a finite word: occurrences, extensions, special factors.

Extension sets are *observed* sets: an occurrence at the very start
(end) of the source contributes no left (right) extension, so a finite
prefix never invents context the infinite word may not have.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    InsufficientContextError,
    InvalidArgumentError,
    NotInLanguageError,
)
from .words import Word


@dataclass(frozen=True)
class ExtensionReport:
    """Observed left/right/both-sided letter extensions of a factor."""

    factor: Word
    left: frozenset[int]
    right: frozenset[int]
    both_sided: frozenset[tuple[int, int]]


class FactorClass(Enum):
    ORDINARY = "ordinary"
    LEFT_SPECIAL = "leftSpecial"
    RIGHT_SPECIAL = "rightSpecial"
    BISPECIAL = "bispecial"


class FactorIndex:
    """Queryable structure over all factors of ``source`` up to ``max_len``.

    Per-length factor sets and extension maps are built lazily and
    cached.  The caches fill idempotently (recomputation yields the
    same value), so concurrent readers are safe; at worst two threads
    duplicate one per-length scan.
    """

    def __init__(self, source: Word, max_len: int):
        if max_len < 0 or max_len > len(source):
            raise InvalidArgumentError("max_len must satisfy 0 <= max_len <= |source|")
        self.source = source
        self.max_len = max_len
        self._chars = source.chars
        self._factor_sets: dict[int, frozenset[str]] = {}
        self._ext_maps: dict[int, dict[str, tuple[set, set, set]]] = {}

    # -- raw access -------------------------------------------------

    def factor_set(self, n: int) -> frozenset[str]:
        """Distinct length-n factors in the internal character encoding."""
        if n < 0 or n > self.max_len:
            raise InvalidArgumentError(f"length {n} exceeds indexed depth {self.max_len}")
        cached = self._factor_sets.get(n)
        if cached is None:
            text = self._chars
            cached = frozenset(text[i : i + n] for i in range(len(text) - n + 1))
            self._factor_sets[n] = cached
        return cached

    def _ext_map(self, n: int) -> dict[str, tuple[set, set, set]]:
        if n < 0 or n > self.max_len:
            raise InvalidArgumentError(f"length {n} exceeds indexed depth {self.max_len}")
        cached = self._ext_maps.get(n)
        if cached is None:
            text = self._chars
            last = len(text)
            cached = {}
            for i in range(last - n + 1):
                f = text[i : i + n]
                entry = cached.get(f)
                if entry is None:
                    entry = cached[f] = (set(), set(), set())
                if i > 0:
                    entry[0].add(text[i - 1])
                if i + n < last:
                    entry[1].add(text[i + n])
                    if i > 0:
                        entry[2].add((text[i - 1], text[i + n]))
            self._ext_maps[n] = cached
        return cached

    def contains(self, f: Word) -> bool:
        if len(f) > self.max_len:
            raise InvalidArgumentError("factor longer than indexed depth")
        return f.chars in self._chars

    def occurrences(self, f: Word) -> tuple[int, ...]:
        """All (possibly overlapping) occurrence positions of ``f``."""
        if len(f) > self.max_len:
            raise InvalidArgumentError("factor longer than indexed depth")
        text, sub = self._chars, f.chars
        out = []
        i = text.find(sub)
        while i != -1:
            out.append(i)
            i = text.find(sub, i + 1)
        return tuple(out)

    # -- spec operations ---------------------------------------------

    def extensions(self, f: Word) -> ExtensionReport:
        ext = self._ext_map(len(f)).get(f.chars)
        if ext is None:
            raise NotInLanguageError(f"{f!r} is not a factor of the source")
        left, right, pairs = ext
        return ExtensionReport(
            factor=f,
            left=frozenset(map(ord, left)),
            right=frozenset(map(ord, right)),
            both_sided=frozenset((ord(a), ord(b)) for a, b in pairs),
        )

    def classify_factor(self, f: Word) -> FactorClass:
        report = self.extensions(f)
        left_special = len(report.left) >= 2
        right_special = len(report.right) >= 2
        if left_special and right_special:
            return FactorClass.BISPECIAL
        if left_special:
            return FactorClass.LEFT_SPECIAL
        if right_special:
            return FactorClass.RIGHT_SPECIAL
        return FactorClass.ORDINARY

    def bilateral_order(self, f: Word) -> int:
        report = self.extensions(f)
        if not report.both_sided:
            raise InsufficientContextError(f"no both-sided extension of {f!r} observed")
        return len(report.both_sided) - len(report.right) - len(report.left) + 1

    def factor_complexity(self, n: int) -> int:
        return len(self.factor_set(n))

    def enumerate_bispecial(self, max_len: int) -> list[Word]:
        """All bispecial factors of length <= max_len, by length then lex order."""
        if max_len > self.max_len:
            raise InvalidArgumentError("max_len exceeds indexed depth")
        alpha = self.source.alphabet
        out = []
        for n in range(max_len + 1):
            found = [
                f
                for f, (left, right, _) in self._ext_map(n).items()
                if len(left) >= 2 and len(right) >= 2
            ]
            out.extend(Word.from_chars(f, alpha) for f in sorted(found))
        return out


def build_index(w: Word, max_len: int) -> FactorIndex:
    return FactorIndex(w, max_len)
