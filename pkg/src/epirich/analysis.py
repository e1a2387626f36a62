"""Return words, derivated words and richness checkers.

All checkers report *witnessed* verdicts relative to a stated prefix
depth: a PASS is evidence bounded by the scanned data, a FAIL comes
with a concrete counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    AlphabetMismatchError,
    InsufficientContextError,
    InvalidArgumentError,
    NotInLanguageError,
    PreconditionError,
)
from .factors import FactorIndex
from .generators import PrefixSource, _BufferedSource
from .palindromes import AntimorphismKind, apply_psi_chars
from .morphisms import Morphism
from .words import Alphabet, Word


def _occurrences(text: str, sub: str) -> list[int]:
    out = []
    i = text.find(sub)
    while i != -1:
        out.append(i)
        i = text.find(sub, i + 1)
    return out


# -- return words ----------------------------------------------------------

@dataclass(frozen=True)
class ReturnWordReport:
    """Return words of a factor witnessed within a fixed prefix depth."""

    factor: Word
    return_words: tuple[Word, ...]
    complete_return_words: tuple[Word, ...]
    truncated: bool
    depth: int


def return_words(src: PrefixSource, w: Word, depth: int) -> ReturnWordReport:
    """All return words of ``w`` witnessed in ``prefix(depth)``.

    Return words are listed in first-occurrence order.  ``truncated``
    is set when the prefix ends strictly after the final occurrence,
    i.e. an unfinished return window was cut off.
    """
    text = src.prefix_chars(depth)
    sub = w.chars
    occ = _occurrences(text, sub)
    if not occ:
        raise NotInLanguageError(f"{w!r} does not occur in the prefix of length {depth}")
    stems: dict[str, None] = {}
    for i, j in zip(occ, occ[1:]):
        stems.setdefault(text[i:j], None)
    alpha = src.alphabet
    rws = tuple(Word.from_chars(s, alpha) for s in stems)
    return ReturnWordReport(
        factor=w,
        return_words=rws,
        complete_return_words=tuple(r + w for r in rws),
        truncated=occ[-1] + len(sub) < depth,
        depth=depth,
    )


class _DerivedSource(_BufferedSource):
    """Recoding of the base word by return words of a fixed factor."""

    _STALL_FACTOR = 1024  # gap bound far beyond any uniformly recurrent source

    def __init__(self, base: PrefixSource, factor: Word, stems: list[str],
                 alphabet: Alphabet, start: int):
        super().__init__(alphabet)
        self._base = base
        self._factor = factor.chars
        self._codes = {s: chr(i) for i, s in enumerate(stems)}
        self._pos = start          # start of the next undecoded stem
        self._depth = start + 1

    def _extend_to(self, n: int):
        codes = self._codes
        sub = self._factor
        while len(self._letters) < n:
            if self._depth > self._STALL_FACTOR * (self._pos + len(sub) + 1):
                raise InsufficientContextError(
                    "the factor stopped recurring within the scanned prefix"
                )
            self._depth = max(2 * self._depth, self._pos + len(sub) + 2, 1024)
            text = self._base.prefix_chars(self._depth)
            nxt = text.find(sub, self._pos + 1)
            while nxt != -1 and len(self._letters) < n:
                stem = text[self._pos:nxt]
                code = codes.get(stem)
                if code is None:
                    raise InsufficientContextError(
                        "encountered a return word beyond the analysed depth"
                    )
                self._letters.append(code)
                self._pos = nxt
                nxt = text.find(sub, self._pos + 1)


@dataclass(frozen=True)
class DerivatedWord:
    """Base word recoded by the return words of ``factor``.

    ``base`` prefixes factor as g * psi(derived-prefix) * tail, where
    psi maps coding letter k to the k-th return word in first-occurrence
    order (rendered 1..s).
    """

    base: PrefixSource
    factor: Word
    coding_alphabet: Alphabet
    derived: PrefixSource
    psi: Morphism
    g: Word


def derivated_word(src: PrefixSource, w: Word, depth: int) -> DerivatedWord:
    text = src.prefix_chars(depth)
    occ = _occurrences(text, w.chars)
    if len(occ) < 2:
        raise InsufficientContextError(
            f"need at least two occurrences of {w!r} within depth {depth}"
        )
    stems: dict[str, None] = {}
    for i, j in zip(occ, occ[1:]):
        stems.setdefault(text[i:j], None)
    ordered = list(stems)
    coding = Alphabet(len(ordered), tuple(str(i + 1) for i in range(len(ordered))))
    psi = Morphism(
        domain=coding,
        codomain=src.alphabet,
        images=tuple(Word.from_chars(s, src.alphabet) for s in ordered),
    )
    derived = _DerivedSource(src, w, ordered, coding, occ[0])
    return DerivatedWord(
        base=src,
        factor=w,
        coding_alphabet=coding,
        derived=derived,
        psi=psi,
        g=Word.from_chars(text[: occ[0]], src.alphabet),
    )


# -- verdicts --------------------------------------------------------------

@dataclass(frozen=True)
class CheckVerdict:
    """Outcome of a witnessed property check at a stated depth."""

    check: str
    parameters: dict = field(compare=False)
    depth: int
    passed: bool
    counterexample: tuple[Word, ...] | None = None
    truncated: bool = False

    def __bool__(self) -> bool:
        return self.passed

    def record(self) -> dict:
        rec = {
            "check": self.check,
            "parameters": {k: str(v) for k, v in self.parameters.items()},
            "depth": self.depth,
            "verdict": "PASS" if self.passed else "FAIL",
            "truncated": self.truncated,
        }
        if self.counterexample is not None:
            rec["counterexample"] = [str(w) for w in self.counterexample]
        return rec


def check_rich_crw(index: FactorIndex, max_len: int) -> CheckVerdict:
    """Complete-return-word richness test.

    Fails when some factor holding exactly two occurrences of a word w
    or its reversal, one as prefix and one as suffix, is not a
    palindrome; such factors are exactly the spans between consecutive
    occurrences of the pair {w, reverse(w)}.
    """
    if max_len > index.max_len:
        raise InvalidArgumentError("max_len exceeds indexed depth")
    text = index.source.chars
    for n in range(1, max_len + 1):
        for f in sorted(index.factor_set(n)):  # deterministic counterexample
            rf = f[::-1]
            if rf < f:
                continue  # the pair is handled once
            positions = _occurrences(text, f)
            if rf != f:
                positions = sorted(set(positions) | set(_occurrences(text, rf)))
            for i, j in zip(positions, positions[1:]):
                span = text[i : j + n]
                if span != span[::-1]:
                    return CheckVerdict(
                        check="rich-crw",
                        parameters={"max_len": max_len},
                        depth=len(text),
                        passed=False,
                        counterexample=(Word.from_chars(span, index.source.alphabet),),
                        truncated=max_len < len(text),
                    )
    return CheckVerdict(
        check="rich-crw",
        parameters={"max_len": max_len},
        depth=len(text),
        passed=True,
        truncated=max_len < len(text),
    )


def closed_under(index: FactorIndex, kind: AntimorphismKind, max_len: int) -> bool:
    """Whether every witnessed factor up to max_len has its image witnessed."""
    if kind is not AntimorphismKind.R and index.source.alphabet.size != 2:
        raise AlphabetMismatchError(f"{kind.value} requires a binary source")
    if max_len > index.max_len:
        raise InvalidArgumentError("max_len exceeds indexed depth")
    for n in range(1, max_len + 1):
        factors = index.factor_set(n)
        for f in factors:
            if apply_psi_chars(kind, f) not in factors:
                return False
    return True


def pext(index: FactorIndex, p: Word) -> set[Word]:
    """Witnessed palindromic extensions a+p+a of a palindromic factor."""
    if not p.is_palindrome:
        raise InvalidArgumentError("palindromic extensions need a palindrome")
    try:
        report = index.extensions(p)
    except NotInLanguageError:
        raise InvalidArgumentError(f"{p!r} is not a factor of the source") from None
    alpha = index.source.alphabet
    return {
        Word.from_chars(chr(a) + p.chars + chr(a), alpha)
        for a, b in report.both_sided
        if a == b
    }


def check_rich_bispecial(index: FactorIndex, max_len: int) -> CheckVerdict:
    """Bilateral-order richness test over witnessed bispecial factors.

    Each bispecial palindrome must satisfy b(w) = #Pext(w) - 1 and each
    non-palindromic bispecial factor b(w) = 0.  The source must be
    closed under reversal at this depth.
    """
    if max_len > index.max_len:
        raise InvalidArgumentError("max_len exceeds indexed depth")
    if not closed_under(index, AntimorphismKind.R, max_len):
        raise PreconditionError(
            f"source is not closed under reversal up to length {max_len} at this depth"
        )
    for f in index.enumerate_bispecial(max_len):
        report = index.extensions(f)
        if not report.both_sided:
            continue  # extension data touches only the prefix boundary
        b = len(report.both_sided) - len(report.right) - len(report.left) + 1
        if f.is_palindrome:
            expected = sum(1 for a, c in report.both_sided if a == c) - 1
        else:
            expected = 0
        if b != expected:
            return CheckVerdict(
                check="rich-bispecial",
                parameters={"max_len": max_len},
                depth=len(index.source),
                passed=False,
                counterexample=(f,),
                truncated=max_len < len(index.source),
            )
    return CheckVerdict(
        check="rich-bispecial",
        parameters={"max_len": max_len},
        depth=len(index.source),
        passed=True,
        truncated=max_len < len(index.source),
    )


# -- H-richness ------------------------------------------------------------

@dataclass(frozen=True)
class HProfile:
    """Rows (n, C(n+1)-C(n)+4, sum of R- and E-palindrome counts at n, n+1)."""

    rows: tuple[tuple[int, int, int], ...]
    depth: int

    @property
    def equality_failures(self) -> tuple[int, ...]:
        return tuple(n for n, lhs, rhs in self.rows if lhs != rhs)

    @property
    def is_h_rich(self) -> bool:
        return not self.equality_failures


_H_KINDS = (AntimorphismKind.R, AntimorphismKind.E, AntimorphismKind.RE)


def h_profile(index: FactorIndex, n_max: int) -> HProfile:
    """Complexity-versus-palindromicity profile of a binary source.

    Requires closure under the identity, reversal, exchange and their
    composition up to n_max + 1.
    """
    if index.source.alphabet.size != 2:
        raise AlphabetMismatchError("H-profiles are defined for binary sources")
    if n_max + 1 > index.max_len:
        raise InvalidArgumentError("index depth must reach n_max + 1")
    for kind in _H_KINDS:
        if not closed_under(index, kind, n_max + 1):
            raise PreconditionError(
                f"source is not closed under {kind.value} up to length {n_max + 1}"
            )

    def pal_counts(n):
        factors = index.factor_set(n)
        r = sum(1 for f in factors if f == f[::-1])
        e = sum(1 for f in factors if f == apply_psi_chars(AntimorphismKind.E, f))
        return r, e

    rows = []
    counts = {n: pal_counts(n) for n in range(1, n_max + 2)}
    for n in range(1, n_max + 1):
        lhs = index.factor_complexity(n + 1) - index.factor_complexity(n) + 4
        rhs = counts[n + 1][0] + counts[n][0] + counts[n + 1][1] + counts[n][1]
        rows.append((n, lhs, rhs))
    return HProfile(rows=tuple(rows), depth=len(index.source))


# -- gap and extension palindromicity ---------------------------------------

def letter_gap_palindromicity(index: FactorIndex, subset: set[int]) -> CheckVerdict:
    """Whether every gap between consecutive subset letters is a palindrome."""
    alpha = index.source.alphabet
    chosen = frozenset(subset)
    if not chosen or len(chosen) >= alpha.size:
        raise InvalidArgumentError("subset must be proper and nonempty")
    if any(not 0 <= a < alpha.size for a in chosen):
        raise AlphabetMismatchError("subset letters outside the alphabet")
    text = index.source.chars
    marks = {chr(a) for a in chosen}
    prev = None
    for i, ch in enumerate(text):
        if ch not in marks:
            continue
        if prev is not None:
            gap = text[prev + 1 : i]
            if gap != gap[::-1]:
                return CheckVerdict(
                    check="letter-gap-palindromicity",
                    parameters={"subset": sorted(chosen)},
                    depth=len(text),
                    passed=False,
                    counterexample=(Word.from_chars(gap, alpha),),
                    truncated=True,
                )
        prev = i
    return CheckVerdict(
        check="letter-gap-palindromicity",
        parameters={"subset": sorted(chosen)},
        depth=len(text),
        passed=True,
        truncated=True,
    )


def extension_pivot_letters(index: FactorIndex, w: Word) -> set[int]:
    """Candidate letters for the two-way extension anchor of ``w``.

    When non-palindromic both-sided extensions are witnessed, every one
    of them carries the anchor on one side, so the candidates are the
    letters present in all of them.  Without such extensions the only
    information is the palindromic extensions a+w+a themselves.
    """
    report = index.extensions(w)
    non_pal = [(x, y) for x, y in report.both_sided if x != y]
    if non_pal:
        return {a for a in index.source.alphabet.letters
                if all(a == x or a == y for x, y in non_pal)}
    return {x for x, y in report.both_sided if x == y}


def e_extension_palindromicity(index: FactorIndex, w: Word, e_set: set[int],
                               a: int) -> CheckVerdict:
    """Interior palindromicity between consecutive e_set-extensions of w.

    A site is an occurrence x+w+y with both x and y in e_set.  For each
    pair of consecutive sites the factor starting at the first site and
    ending at the second must have a palindromic interior (first and
    last letter removed).  The letter ``a`` must be the unique letter
    extending w on both sides, recomputed from the data.
    """
    alpha = index.source.alphabet
    chosen = frozenset(e_set)
    if a not in chosen:
        raise InvalidArgumentError("the two-way letter must belong to the extension set")
    if any(not 0 <= x < alpha.size for x in chosen):
        raise AlphabetMismatchError("extension-set letters outside the alphabet")
    if not w.is_palindrome:
        raise InvalidArgumentError("the anchor factor must be a palindrome")
    pivots = extension_pivot_letters(index, w)
    if len(pivots) != 1:
        raise PreconditionError(
            f"anchor letter of {w!r} is not determined at this depth: candidates {sorted(pivots)}"
        )
    if pivots != {a}:
        raise PreconditionError(
            f"anchor letter of {w!r} at this depth is {next(iter(pivots))}, not {a}"
        )
    text = index.source.chars
    sub = w.chars
    marks = {chr(x) for x in chosen}
    n = len(sub)
    sites = [
        p
        for p in _occurrences(text, sub)
        if p > 0 and p + n < len(text) and text[p - 1] in marks and text[p + n] in marks
    ]
    params = {"factor": w, "e_set": sorted(chosen), "a": a}
    for p, q in zip(sites, sites[1:]):
        interior = text[p : q + n]  # strip the flanking e_set letters
        if interior != interior[::-1]:
            return CheckVerdict(
                check="e-extension-palindromicity",
                parameters=params,
                depth=len(text),
                passed=False,
                counterexample=(Word.from_chars(interior, alpha),),
                truncated=True,
            )
    return CheckVerdict(
        check="e-extension-palindromicity",
        parameters=params,
        depth=len(text),
        passed=True,
        truncated=True,
    )


def check_distinct_return_lengths(src: PrefixSource, w: Word, depth: int) -> CheckVerdict:
    """Whether all witnessed return words of w have pairwise distinct lengths."""
    report = return_words(src, w, depth)
    by_length: dict[int, Word] = {}
    for r in report.return_words:
        other = by_length.get(len(r))
        if other is not None:
            return CheckVerdict(
                check="distinct-return-lengths",
                parameters={"factor": w},
                depth=depth,
                passed=False,
                counterexample=(other, r),
                truncated=report.truncated,
            )
        by_length[len(r)] = r
    return CheckVerdict(
        check="distinct-return-lengths",
        parameters={"factor": w},
        depth=depth,
        passed=True,
        truncated=report.truncated,
    )
