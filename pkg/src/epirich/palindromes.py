"""Involutory antimorphisms, palindromic closure and the defect census.

The census is backed by an incremental index of distinct palindromic
factors (an eertree): appending one letter creates at most one new
palindrome, which makes whole-prefix defect profiles linear in the
prefix length.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import AlphabetMismatchError, InvalidArgumentError
from .words import Word

_EXCHANGE = str.maketrans({chr(0): chr(1), chr(1): chr(0)})


class AntimorphismKind(Enum):
    R = "R"
    E = "E"
    RE = "RE"


def _require_binary(kind: AntimorphismKind, w: Word):
    if kind is not AntimorphismKind.R and w.alphabet.size != 2:
        raise AlphabetMismatchError(f"{kind.value} is defined over binary alphabets only")


def apply_psi_chars(kind: AntimorphismKind, chars: str) -> str:
    """Apply R, E or RE to the internal character encoding."""
    if kind is AntimorphismKind.R:
        return chars[::-1]
    if kind is AntimorphismKind.E:
        return chars.translate(_EXCHANGE)[::-1]
    # RE = E after R: reversing twice leaves the letter exchange
    return chars.translate(_EXCHANGE)


def apply_antimorphism(kind: AntimorphismKind, w: Word) -> Word:
    _require_binary(kind, w)
    return Word.from_chars(apply_psi_chars(kind, w.chars), w.alphabet)


def is_psi_palindrome(kind: AntimorphismKind, w: Word) -> bool:
    _require_binary(kind, w)
    return w.chars == apply_psi_chars(kind, w.chars)


class Eertree:
    """Online index of the distinct palindromic factors of a word.

    Nodes 0 and 1 are the two roots (length -1 and 0).  After each
    ``append`` the node of the longest palindromic suffix is ``_last``.
    """

    __slots__ = ("_s", "_len", "_link", "_next", "_last", "length_counts")

    def __init__(self):
        self._s: list[str] = []
        self._len = [-1, 0]
        self._link = [0, 0]
        self._next: list[dict[str, int]] = [{}, {}]
        self._last = 1
        self.length_counts: dict[int, int] = {}

    @property
    def distinct_palindromes(self) -> int:
        """Number of distinct nonempty palindromic factors seen so far."""
        return len(self._len) - 2

    @property
    def longest_suffix_length(self) -> int:
        return self._len[self._last]

    def _suffix_palindrome(self, node: int, pos: int) -> int:
        s, lens, links = self._s, self._len, self._link
        while True:
            l = lens[node]
            if pos - l - 1 >= 0 and s[pos - l - 1] == s[pos]:
                return node
            node = links[node]

    def append(self, ch: str) -> bool:
        """Append one letter; return True when a new palindrome appears."""
        s = self._s
        s.append(ch)
        pos = len(s) - 1
        cur = self._suffix_palindrome(self._last, pos)
        nxt = self._next[cur]
        node = nxt.get(ch)
        if node is not None:
            self._last = node
            return False
        new_len = self._len[cur] + 2
        if new_len == 1:
            link = 1
        else:
            link = self._next[self._suffix_palindrome(self._link[cur], pos)][ch]
        self._len.append(new_len)
        self._link.append(link)
        self._next.append({})
        node = len(self._len) - 1
        nxt[ch] = node
        self._last = node
        self.length_counts[new_len] = self.length_counts.get(new_len, 0) + 1
        return True

    def extend(self, chars: str):
        for ch in chars:
            self.append(ch)


@dataclass(frozen=True)
class PalindromeCensus:
    """Distinct-palindrome counts of a finite word, including the empty word."""

    word: Word
    distinct_palindromes: int
    defect: int
    per_length_counts: tuple[int, ...]


def census(w: Word) -> PalindromeCensus:
    tree = Eertree()
    tree.extend(w.chars)
    distinct = tree.distinct_palindromes + 1  # + empty word
    max_len = max(tree.length_counts, default=0)
    counts = [0] * (max_len + 1)
    counts[0] = 1
    for length, c in tree.length_counts.items():
        counts[length] = c
    return PalindromeCensus(
        word=w,
        distinct_palindromes=distinct,
        defect=len(w) + 1 - distinct,
        per_length_counts=tuple(counts),
    )


def defect(w: Word) -> int:
    tree = Eertree()
    tree.extend(w.chars)
    return len(w) - tree.distinct_palindromes


class DefectTracker:
    """Defect of a growing prefix, updated one letter at a time."""

    __slots__ = ("_tree", "_length")

    def __init__(self):
        self._tree = Eertree()
        self._length = 0

    def append(self, ch: str):
        self._tree.append(ch)
        self._length += 1

    @property
    def length(self) -> int:
        return self._length

    @property
    def defect(self) -> int:
        return self._length - self._tree.distinct_palindromes


def defect_profile(src, checkpoints) -> list[tuple[int, int]]:
    """Defect of the length-n prefix of ``src`` at each checkpoint.

    Checkpoints must be strictly increasing positive lengths; the
    resulting defects are nondecreasing.
    """
    cps = list(checkpoints)
    if not cps:
        return []
    if any(b <= a for a, b in zip(cps, cps[1:])) or cps[0] < 1:
        raise InvalidArgumentError("checkpoints must be positive and strictly increasing")
    chars = src.prefix_chars(cps[-1])
    tracker = DefectTracker()
    out = []
    pos = 0
    for cp in cps:
        while pos < cp:
            tracker.append(chars[pos])
            pos += 1
        out.append((cp, tracker.defect))
    return out


def longest_palindromic_suffix(w: Word) -> Word:
    if len(w) == 0:
        raise InvalidArgumentError("the empty word has no palindromic suffix")
    tree = Eertree()
    tree.extend(w.chars)
    return w[len(w) - tree.longest_suffix_length :]


def palindromic_closure(w: Word) -> Word:
    """Shortest palindrome having ``w`` as a prefix."""
    if w.chars == w.chars[::-1]:
        return w
    suffix_len = len(longest_palindromic_suffix(w))
    head = w.chars[: len(w) - suffix_len]
    return Word.from_chars(w.chars + head[::-1], w.alphabet)


def psi_palindromic_complexity(index, n: int, kind: AntimorphismKind) -> int:
    """Number of length-n factors fixed by the given antimorphism."""
    if kind is not AntimorphismKind.R and index.source.alphabet.size != 2:
        raise AlphabetMismatchError(f"{kind.value} requires a binary source")
    return sum(1 for f in index.factor_set(n) if f == apply_psi_chars(kind, f))


def palindromes_centered(index, center: int | None, max_len: int) -> int:
    """Distinct R-palindromic factors with the given center, up to max_len.

    ``center=None`` selects the even-length palindromes (centered at the
    empty word), a letter selects odd-length palindromes around it.
    """
    if max_len > index.max_len:
        raise InvalidArgumentError("max_len exceeds indexed depth")
    count = 0
    for n in range(max_len + 1):
        if center is None:
            if n % 2:
                continue
        else:
            if n % 2 == 0:
                continue
        mid = chr(center) if center is not None else None
        for f in index.factor_set(n):
            if f != f[::-1]:
                continue
            if mid is not None and f[n // 2] != mid:
                continue
            count += 1
    return count
