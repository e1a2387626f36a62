"""Prefix sources for infinite words.

Standard episturmian words are generated by iterated palindromic
closure along an eventually periodic directive sequence.  Further
sources cover substitution fixed points, periodic words, letterwise
morphic images and the binary preimage under the sliding-xor operator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import AlphabetMismatchError, InvalidArgumentError
from .palindromes import Eertree
from .words import EMPTY, Alphabet, Word


@dataclass(frozen=True)
class DirectiveSpec:
    """Seed word plus eventually periodic directive sequence.

    The directive letters are indexed from 1: the n-th closure step
    builds ``w_n = closure(w_{n-1} + letter(n))`` starting from
    ``w_0 = seed``.
    """

    alphabet: Alphabet
    period: Word
    preperiod: Word = EMPTY
    seed: Word = EMPTY

    def __post_init__(self):
        if len(self.period) == 0:
            raise InvalidArgumentError("directive period must be nonempty")
        for w in (self.period, self.preperiod, self.seed):
            if w.chars and ord(max(w.chars)) >= self.alphabet.size:
                raise AlphabetMismatchError("directive letters outside the declared alphabet")

    def letter_char(self, n: int) -> str:
        """Directive letter at 1-based position n, as an internal char."""
        if n < 1:
            raise InvalidArgumentError("directive positions are 1-based")
        pre = self.preperiod.chars
        if n <= len(pre):
            return pre[n - 1]
        return self.period.chars[(n - 1 - len(pre)) % len(self.period)]

    def letter(self, n: int) -> int:
        return ord(self.letter_char(n))

    @property
    def separating_letter(self) -> int:
        return self.letter(1)

    def ell(self) -> int | None:
        """Least l such that letter(1)^l is not a prefix of the directive.

        Returns None for the degenerate all-one-letter directive.
        """
        first = self.letter_char(1)
        horizon = len(self.preperiod) + len(self.period)
        for n in range(2, horizon + 2):
            if self.letter_char(n) != first:
                return n
        return None

    def letters_from(self, n: int) -> frozenset[int]:
        """The set of directive letters at positions m >= n."""
        if n < 1:
            raise InvalidArgumentError("directive positions are 1-based")
        out = set(self.period.letters)
        out.update(self.preperiod.letters[n - 1 :])
        return frozenset(out)

    def separating_block_is_factor(self) -> bool:
        """Whether the block letter(1)^ell occurs in the generated word.

        True iff the first directive letter reappears at some position
        beyond ell.
        """
        l = self.ell()
        if l is None:
            return False  # the word is letter^omega; letter^l is undefined
        first = self.letter_char(1)
        if first in self.period.chars:
            return True
        return first in self.preperiod.chars[l:]


def directive(period: str | Word, preperiod: str | Word = "", seed: str | Word = "",
              alphabet_size: int | None = None) -> DirectiveSpec:
    """Convenience factory accepting digit strings."""
    from .words import parse_word

    def as_word(x):
        return x if isinstance(x, Word) else parse_word(x) if x else EMPTY

    per, pre, sd = as_word(period), as_word(preperiod), as_word(seed)
    if alphabet_size is None:
        alphabet_size = max(
            max((l for l in w), default=0) for w in (per, pre, sd)
        ) + 1
    alpha = Alphabet(alphabet_size)
    return DirectiveSpec(alphabet=alpha, period=per, preperiod=pre, seed=sd)


class PrefixSource:
    """Produces arbitrarily long prefixes of one fixed infinite word."""

    alphabet: Alphabet

    def prefix_chars(self, n: int) -> str:
        raise NotImplementedError

    def prefix(self, n: int) -> Word:
        return Word.from_chars(self.prefix_chars(n), self.alphabet)


class _BufferedSource(PrefixSource):
    """Common storage: a growing list of letter characters."""

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self._letters: list[str] = []
        self._joined = ""

    def _extend_to(self, n: int):
        raise NotImplementedError

    def prefix_chars(self, n: int) -> str:
        if n < 0:
            raise InvalidArgumentError("prefix length must be >= 0")
        if len(self._letters) < n:
            self._extend_to(n)
        if len(self._joined) < n:
            self._joined = "".join(self._letters)
        return self._joined[:n]


class EpisturmianSource(_BufferedSource):
    """Standard episturmian word from a directive spec.

    With an empty seed each closure step appends the directive letter
    followed by a suffix copy determined by the previous palindromic
    prefix that ends just before that letter's last use; with a seed
    the generic closure engine (an eertree tracking the longest
    palindromic suffix) is used instead.
    """

    def __init__(self, spec: DirectiveSpec):
        super().__init__(spec.alphabet)
        self.spec = spec
        self._n = 0
        self._prefix_pal_lengths = [len(spec.seed)]
        if len(spec.seed) == 0:
            self._mlen: dict[str, int] = {}
            self._tree = None
        else:
            self._tree = Eertree()
            self._letters.extend(spec.seed.chars)
            self._tree.extend(spec.seed.chars)

    def _step(self):
        self._n += 1
        x = self.spec.letter_char(self._n)
        cur = self._letters
        if self._tree is None:
            length = len(cur)
            j = self._mlen.get(x)
            tail = cur[:] if j is None else cur[j + 1 :]
            cur.append(x)
            cur.extend(tail)
            self._mlen[x] = length
        else:
            tree = self._tree
            cur.append(x)
            tree.append(x)
            head_len = len(cur) - tree.longest_suffix_length
            for c in reversed(cur[:head_len]):
                cur.append(c)
                tree.append(c)
        self._prefix_pal_lengths.append(len(cur))

    def _extend_to(self, n: int):
        while len(self._letters) < n:
            self._step()

    def prefix_palindrome_length(self, i: int) -> int:
        """Length of w_i, the i-th word of the closure chain (w_0 = seed)."""
        while len(self._prefix_pal_lengths) <= i:
            self._step()
        return self._prefix_pal_lengths[i]

    def prefix_palindrome(self, i: int) -> Word:
        return self.prefix(self.prefix_palindrome_length(i))


def standard_episturmian(spec: DirectiveSpec) -> EpisturmianSource:
    return EpisturmianSource(spec)


class FixedPointSource(_BufferedSource):
    """Fixed point of a prolongable endomorphism, expanded online."""

    def __init__(self, morphism, start: int):
        images = [img.chars for img in morphism.images]
        if morphism.domain.size != morphism.codomain.size:
            raise InvalidArgumentError("fixed points need an endomorphism")
        if not 0 <= start < morphism.domain.size:
            raise AlphabetMismatchError("start letter outside the domain")
        img = images[start]
        if len(img) < 2 or img[0] != chr(start):
            raise InvalidArgumentError("morphism is not prolongable at the start letter")
        super().__init__(morphism.codomain)
        self._images = images
        self._letters.extend(img)
        self._pos = 1

    def _extend_to(self, n: int):
        letters = self._letters
        images = self._images
        while len(letters) < n:
            if self._pos >= len(letters):
                raise InvalidArgumentError("fixed point is finite; cannot extend")
            letters.extend(images[ord(letters[self._pos])])
            self._pos += 1


def fixed_point(morphism, start: int) -> FixedPointSource:
    return FixedPointSource(morphism, start)


class PeriodicSource(_BufferedSource):
    def __init__(self, p: Word):
        if len(p) == 0:
            raise InvalidArgumentError("period must be nonempty")
        super().__init__(p.alphabet)
        self._period = p.chars

    def _extend_to(self, n: int):
        missing = n - len(self._letters)
        reps = missing // len(self._period) + 1
        self._letters.extend(self._period * reps)


def periodic_source(p: Word) -> PeriodicSource:
    return PeriodicSource(p)


class MorphicImageSource(_BufferedSource):
    """Letterwise image of another source under a morphism."""

    _STALL_LIMIT = 1 << 20

    def __init__(self, morphism, src: PrefixSource):
        if src.alphabet.size > morphism.domain.size:
            raise AlphabetMismatchError("source alphabet exceeds the morphism domain")
        if all(len(img) == 0 for img in morphism.images):
            raise InvalidArgumentError("an all-erasing morphism generates no word")
        super().__init__(morphism.codomain)
        self._table = morphism.translation_table()
        self._src = src
        self._consumed = 0

    def _extend_to(self, n: int):
        stalled = 0
        while len(self._letters) < n:
            step = max(1024, n - len(self._letters))
            upto = self._consumed + step
            fresh = self._src.prefix_chars(upto)[self._consumed :]
            self._consumed = upto
            out = fresh.translate(self._table)
            if out:
                self._letters.extend(out)
                stalled = 0
            else:
                stalled += step
                if stalled >= self._STALL_LIMIT:
                    raise InvalidArgumentError(
                        "image source stalled: the morphism erases the visible tail"
                    )


def image_source(morphism, src: PrefixSource) -> MorphicImageSource:
    return MorphicImageSource(morphism, src)


_EXAMPLE3_GLUE = "0110220110"  # letters interleaved between the 11 copies


class Example3Source(PrefixSource):
    """Ternary word built by the 11-fold copy-and-glue recurrence.

    Level words satisfy ``v_i = v 0 v 1 v 1 v 0 v 2 v 2 v 0 v 1 v 1 v 0 v``
    with ``v = v_{i-1}`` and ``v_0`` empty; the word is rich while a
    suitable binary morphic image of it has unbounded defect.
    """

    def __init__(self):
        self.alphabet = Alphabet(3)
        self._word = ""
        self._level = 0

    def _grow(self):
        v = self._word
        parts = [v]
        for t in _EXAMPLE3_GLUE:
            parts.append(chr(int(t)))
            parts.append(v)
        self._word = "".join(parts)
        self._level += 1

    def level_word(self, i: int) -> Word:
        while self._level < i:
            self._grow()
        size = _level_length(i)
        return Word.from_chars(self._word[:size], self.alphabet)

    def prefix_chars(self, n: int) -> str:
        if n < 0:
            raise InvalidArgumentError("prefix length must be >= 0")
        while len(self._word) < n:
            self._grow()
        return self._word[:n]


def _level_length(i: int) -> int:
    length = 0
    for _ in range(i):
        length = 11 * length + 10
    return length


def example3_word() -> Example3Source:
    return Example3Source()


def example3_level(i: int) -> Word:
    return Example3Source().level_word(i)


class SPreimageSource(_BufferedSource):
    """The binary word w with sliding-xor image equal to ``src``.

    w[0] is the chosen first letter and w[i+1] = w[i] xor src[i]; the
    two choices of first letter give letter-exchanged twins.
    """

    def __init__(self, src: PrefixSource, first: int):
        if src.alphabet.size != 2:
            raise AlphabetMismatchError("preimages are defined for binary sources")
        if first not in (0, 1):
            raise InvalidArgumentError("first letter must be 0 or 1")
        super().__init__(Alphabet(2))
        self._src = src
        self._letters.append(chr(first))

    def _extend_to(self, n: int):
        letters = self._letters
        have = len(letters)
        image = self._src.prefix_chars(n - 1)
        acc = ord(letters[-1])
        for ch in image[have - 1 :]:
            acc ^= ord(ch)
            letters.append(chr(acc))


def s_preimage_source(src: PrefixSource, first: int) -> SPreimageSource:
    return SPreimageSource(src, first)


def separating_letter(index) -> int | None:
    """The smallest letter occurring in every length-2 factor, if any."""
    if index.max_len < 2 or len(index.source) < 2:
        raise InvalidArgumentError("need an index of depth >= 2 over a word of length >= 2")
    pairs = index.factor_set(2)
    for letter in index.source.alphabet.letters:
        ch = chr(letter)
        if all(ch in f for f in pairs):
            return letter
    return None


def random_directive_spec(rng: random.Random, alphabet_size: int,
                          max_preperiod: int = 4, max_period: int = 6) -> DirectiveSpec:
    """Seeded random eventually periodic directive.

    The period is rejection-sampled until every alphabet letter occurs
    in it, so the sample is a genuinely k-ary episturmian word.
    """
    if alphabet_size > max_period:
        raise InvalidArgumentError("period too short to contain every letter")
    alpha = Alphabet(alphabet_size)
    pre_len = rng.randint(0, max_preperiod)
    pre = [rng.randrange(alphabet_size) for _ in range(pre_len)]
    while True:
        per_len = rng.randint(1, max_period)
        per = [rng.randrange(alphabet_size) for _ in range(per_len)]
        if len(set(per)) == alphabet_size:
            break
    return DirectiveSpec(
        alphabet=alpha,
        period=Word(per, alpha),
        preperiod=Word(pre, alpha),
    )
