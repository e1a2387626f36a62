"""Morphisms between free monoids and their palindromicity classes.

Three classes of morphisms are recognised, each witnessed by a
palindromic radius r: images share the prefix r with palindromic
remainders (class P), images are r times a palindrome up to stripping
a palindromic suffix of r (standard P), and images followed by r are
palindromes anchored by r at both ends (the return-word class).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AlphabetMismatchError, InvalidArgumentError
from .words import AB, Alphabet, Word


@dataclass(frozen=True)
class Morphism:
    """Total map letter -> word, acting on words by concatenation."""

    domain: Alphabet
    codomain: Alphabet
    images: tuple[Word, ...]
    _table: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.images) != self.domain.size:
            raise InvalidArgumentError("need exactly one image per domain letter")
        fixed = []
        for img in self.images:
            if img.chars and ord(max(img.chars)) >= self.codomain.size:
                raise AlphabetMismatchError("image letter outside the codomain")
            fixed.append(Word.from_chars(img.chars, self.codomain))
        object.__setattr__(self, "images", tuple(fixed))
        table = {i: img.chars for i, img in enumerate(fixed)}
        object.__setattr__(self, "_table", table)

    def translation_table(self) -> dict:
        return self._table

    def image_chars(self, letter_char: str) -> str:
        return self._table[ord(letter_char)]

    def apply(self, w: Word) -> Word:
        if w.chars and ord(max(w.chars)) >= self.domain.size:
            raise AlphabetMismatchError("word contains letters outside the domain")
        return Word.from_chars(w.chars.translate(self._table), self.codomain)

    def __call__(self, w: Word) -> Word:
        return self.apply(w)

    @property
    def max_image_length(self) -> int:
        return max(len(img) for img in self.images)

    def __str__(self) -> str:
        return ", ".join(
            f"{self.domain.glyph(a)}->{img}" for a, img in enumerate(self.images)
        )


def morphism(images: dict[int, str] | list[str], codomain_size: int | None = None,
             codomain: Alphabet | None = None) -> Morphism:
    """Build a morphism from digit-string images, e.g. ``["01", "0"]``."""
    from .words import parse_word

    if isinstance(images, dict):
        keys = sorted(images)
        if keys != list(range(len(keys))):
            raise InvalidArgumentError("domain letters must be dense 0..k-1")
        seq = [images[k] for k in keys]
    else:
        seq = list(images)
    words = [parse_word(s) for s in seq]
    if codomain is None:
        size = codomain_size
        if size is None:
            size = max((max(w, default=0) for w in words), default=0) + 1
        codomain = Alphabet(size)
    return Morphism(domain=Alphabet(len(seq)), codomain=codomain,
                    images=tuple(Word.from_chars(w.chars, codomain) for w in words))


def identity_morphism(alpha: Alphabet) -> Morphism:
    return Morphism(alpha, alpha, tuple(Word([a], alpha) for a in alpha.letters))


def compose(outer: Morphism, inner: Morphism) -> Morphism:
    """The morphism sending a letter to outer(inner(letter))."""
    if inner.codomain.size != outer.domain.size:
        raise AlphabetMismatchError("inner codomain must match outer domain")
    return Morphism(
        domain=inner.domain,
        codomain=outer.codomain,
        images=tuple(outer.apply(img) for img in inner.images),
    )


def is_primitive(m: Morphism) -> bool:
    """Whether some power of the incidence matrix is strictly positive.

    Exponents up to the squared alphabet size are checked, which is
    sufficient for primitivity.
    """
    k = m.domain.size
    if m.codomain.size != k:
        raise InvalidArgumentError("primitivity is defined for endomorphisms")
    reach = [[False] * k for _ in range(k)]
    for b, img in enumerate(m.images):
        for ch in set(img.chars):
            reach[ord(ch)][b] = True
    step = [row[:] for row in reach]
    for _ in range(k * k):
        if all(all(row) for row in step):
            return True
        step = [
            [any(step[i][t] and reach[t][j] for t in range(k)) for j in range(k)]
            for i in range(k)
        ]
    return False


@dataclass(frozen=True)
class ClassWitness:
    """A radius palindrome plus the per-letter decomposition it certifies.

    ``details[a]`` is ("q", q) when image(a) = radius + q with q a
    palindrome, and ("strip", p) when image(a) + p = radius with p a
    proper palindromic suffix of the radius.
    """

    class_tag: str
    radius: Word
    details: dict[int, tuple[str, Word]]


def _is_pal(chars: str) -> bool:
    return chars == chars[::-1]


def class_p_witness(m: Morphism) -> ClassWitness | None:
    """Longest palindrome r prefixing every image with palindromic remainders."""
    images = [img.chars for img in m.images]
    common = images[0]
    for img in images[1:]:
        limit = min(len(common), len(img))
        i = 0
        while i < limit and common[i] == img[i]:
            i += 1
        common = common[:i]
    for size in range(len(common), -1, -1):
        r = common[:size]
        if not _is_pal(r):
            continue
        if all(_is_pal(img[size:]) for img in images):
            alpha = m.codomain
            details = {a: ("q", Word.from_chars(img[size:], alpha))
                       for a, img in enumerate(images)}
            return ClassWitness("P", Word.from_chars(r, alpha), details)
    return None


def standard_p_witness(m: Morphism) -> ClassWitness | None:
    """Shortest radius r decomposing every image as r + palindrome, or as
    r with a proper palindromic suffix removed."""
    images = [img.chars for img in m.images]
    longest = max(images, key=len)
    alpha = m.codomain
    for size in range(0, 2 * len(longest) + 1):
        r = _radius_candidate(images, longest, size)
        if r is None or not _is_pal(r):
            continue
        details = {}
        for a, img in enumerate(images):
            if len(img) >= size:
                if not img.startswith(r):
                    details = None
                    break
                q = img[size:]
                if not _is_pal(q):
                    details = None
                    break
                details[a] = ("q", Word.from_chars(q, alpha))
            else:
                strip = r[len(img):]
                if not img or not r.startswith(img) or not _is_pal(strip):
                    details = None
                    break
                details[a] = ("strip", Word.from_chars(strip, alpha))
        if details is not None:
            return ClassWitness("standardP", Word.from_chars(r, alpha), details)
    return None


def _radius_candidate(images: list[str], longest: str, size: int) -> str | None:
    """The only possible radius of the given length, if consistent."""
    anchors = [img for img in images if len(img) >= size]
    if anchors:
        r = anchors[0][:size]
        if any(img[:size] != r for img in anchors[1:]):
            return None
        return r
    # every image is shorter; a palindromic radius is pinned by the
    # longest image mirrored onto the tail (possible while size <= 2*len)
    out = list(longest) + [""] * (size - len(longest))
    for i in range(len(longest), size):
        j = size - 1 - i
        if j >= len(longest):
            return None
        out[i] = out[j]
    return "".join(out)


def is_pret(m: Morphism, r: Word) -> bool:
    """Return-word class membership with respect to the palindrome r.

    Checks, for every domain letter b: image(b) + r is a palindrome
    carrying r as a prefix and as a suffix at distinct occurrences, and
    images are pairwise distinct.
    """
    if r.chars and ord(max(r.chars)) >= m.codomain.size:
        raise AlphabetMismatchError("radius contains letters outside the codomain")
    rc = r.chars
    if not _is_pal(rc):
        return False
    seen = set()
    for img in m.images:
        ic = img.chars
        if not ic:
            return False  # prefix and suffix occurrence of r would coincide
        whole = ic + rc
        if not _is_pal(whole):
            return False
        if not whole.startswith(rc):
            return False
        if ic in seen:
            return False
        seen.add(ic)
    return True


def find_pret_radius(m: Morphism) -> Word | None:
    """Shortest radius for the return-word class, if one exists.

    Any radius r makes image(b*)+r a palindrome for the longest image
    b*, which forces r to be a prefix of image(b*) repeated, so only
    those candidates need trying.  The search stops at four times the
    image length; compositions of morphisms found by this search stay
    within that bound in practice, but radii beyond it are not found.
    """
    longest = max(m.images, key=lambda img: len(img.chars)).chars
    if not longest:
        return None
    for size in range(4 * len(longest) + 1):
        reps = size // len(longest) + 1
        candidate = Word.from_chars((longest * reps)[:size], m.codomain)
        if is_pret(m, candidate):
            return candidate
    return None


def conjugacy_witness(m1: Morphism, m2: Morphism) -> Word | None:
    """A word w with w*m1(a) = m2(a)*w for all letters, searched up to
    the maximal image length."""
    if m1.domain.size != m2.domain.size or m1.codomain.size != m2.codomain.size:
        raise AlphabetMismatchError("conjugacy needs identical domain and codomain")
    lefts = [img.chars for img in m1.images]
    rights = [img.chars for img in m2.images]
    if any(len(a) != len(b) for a, b in zip(lefts, rights)):
        return None
    anchor = max(rights, key=len)
    bound = max((len(img) for img in rights), default=0)
    for size in range(bound + 1):
        if anchor:
            reps = size // len(anchor) + 1
            w = (anchor * reps)[:size]
        elif size > 0:
            break  # all images empty: only the empty witness is canonical
        else:
            w = ""
        if all(w + a == b + w for a, b in zip(lefts, rights)):
            return Word.from_chars(w, m1.codomain)
    return None


def binary_projection(alpha: Alphabet, subset: set[int] | frozenset[int]) -> Morphism:
    """Letter-to-letter map onto {A, B}: subset letters go to A."""
    chosen = frozenset(subset)
    if not chosen or len(chosen) >= alpha.size:
        raise InvalidArgumentError("projection subset must be proper and nonempty")
    if any(not 0 <= a < alpha.size for a in chosen):
        raise AlphabetMismatchError("subset letters outside the alphabet")
    images = tuple(Word([0 if a in chosen else 1], AB) for a in alpha.letters)
    return Morphism(domain=alpha, codomain=AB, images=images)


def sigma(a: int, alpha: Alphabet) -> Morphism:
    """The elementary episturmian morphism a -> a, b -> ab (b != a)."""
    if not 0 <= a < alpha.size:
        raise AlphabetMismatchError("letter outside the alphabet")
    images = tuple(
        Word([a], alpha) if b == a else Word([a, b], alpha) for b in alpha.letters
    )
    return Morphism(domain=alpha, codomain=alpha, images=images)


def s_operator(w: Word) -> Word:
    """Sliding xor: output[i] = w[i] + w[i+1] mod 2, one letter shorter."""
    if w.alphabet.size != 2:
        raise AlphabetMismatchError("the sliding xor is defined on binary words")
    if len(w) == 0:
        raise InvalidArgumentError("need at least one letter")
    chars = w.chars
    out = [chr(ord(a) ^ ord(b)) for a, b in zip(chars, chars[1:])]
    return Word.from_chars("".join(out), w.alphabet)


def s_preimage(v: Word, first: int) -> Word:
    """The unique w with w[0] = first whose sliding xor equals v."""
    if v.alphabet.size != 2:
        raise AlphabetMismatchError("the sliding xor is defined on binary words")
    if first not in (0, 1):
        raise InvalidArgumentError("first letter must be 0 or 1")
    acc = first
    out = [chr(acc)]
    for ch in v.chars:
        acc ^= ord(ch)
        out.append(chr(acc))
    return Word.from_chars("".join(out), Alphabet(2))


# -- fixed morphisms used across experiments ------------------------------

def fibonacci_morphism() -> Morphism:
    return morphism(["01", "0"], codomain_size=2)


def tribonacci_morphism() -> Morphism:
    return morphism(["01", "02", "0"], codomain_size=3)


def example3_morphism() -> Morphism:
    """Binary-image companion of the Example3Source word.

    The images of letters 1 and 2 differ in a single trailing letter;
    the map is in the return-word class with radius 010.
    """
    return morphism(["0100", "01011", "010111"], codomain_size=2)
