import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epirich import (
    AlphabetMismatchError,
    Alphabet,
    AntimorphismKind,
    DefectTracker,
    InvalidArgumentError,
    Word,
    apply_antimorphism,
    build_index,
    census,
    defect,
    defect_profile,
    directive,
    example3_morphism,
    example3_word,
    image_source,
    is_psi_palindrome,
    longest_palindromic_suffix,
    morphism,
    palindromes_centered,
    palindromic_closure,
    parse_word,
    periodic_source,
    psi_palindromic_complexity,
    standard_episturmian,
)
from oracles import all_words, brute_closure, naive_defect, palindromic_factors

B = Alphabet(2)
R, E, RE = AntimorphismKind.R, AntimorphismKind.E, AntimorphismKind.RE


class TestAntimorphisms:
    def test_exchange_reverses_and_swaps(self):
        assert str(apply_antimorphism(E, parse_word("011", B))) == "001"

    def test_reversal(self):
        assert str(apply_antimorphism(R, parse_word("012"))) == "210"

    def test_re_is_exchange_in_place(self):
        # E(R(01)) = E(10) = 10: the double reversal cancels
        assert str(apply_antimorphism(RE, parse_word("01", B))) == "10"
        assert str(apply_antimorphism(E, parse_word("10", B))) == "10"

    def test_involution(self):
        for kind in (R, E, RE):
            for letters in all_words(2, 6):
                w = Word(letters, B)
                assert apply_antimorphism(kind, apply_antimorphism(kind, w)) == w

    def test_nonbinary_rejected(self):
        with pytest.raises(AlphabetMismatchError):
            apply_antimorphism(E, parse_word("012"))
        with pytest.raises(AlphabetMismatchError):
            is_psi_palindrome(RE, parse_word("012"))

    def test_psi_palindromes(self):
        assert is_psi_palindrome(R, parse_word("010", B))
        assert is_psi_palindrome(E, parse_word("01", B))
        assert not is_psi_palindrome(E, parse_word("00", B))


class TestClosure:
    def test_longest_palindromic_suffix(self):
        assert str(longest_palindromic_suffix(parse_word("0101", B))) == "101"
        assert str(longest_palindromic_suffix(parse_word("0110", B))) == "0110"
        assert str(longest_palindromic_suffix(Word([0, 1], B))) == "1"

    def test_lps_empty_rejected(self):
        with pytest.raises(InvalidArgumentError):
            longest_palindromic_suffix(Word([], B))

    def test_closure_examples(self):
        assert str(palindromic_closure(parse_word("0101", B))) == "01010"
        assert str(palindromic_closure(parse_word("0102"))) == "0102010"

    def test_closure_fixes_palindromes(self):
        for text in ("", "0", "010", "0110"):
            w = parse_word(text, B) if text else Word([], B)
            assert palindromic_closure(w) == w

    def test_closure_matches_brute_force_exhaustive(self):
        for sizes, max_len in ((2, 10), (3, 7)):
            alpha = Alphabet(sizes)
            for letters in all_words(sizes, max_len):
                got = palindromic_closure(Word(letters, alpha))
                assert got.letters == brute_closure(letters)

    @given(st.lists(st.integers(0, 2), min_size=0, max_size=10))
    @settings(max_examples=200, deadline=None)
    def test_closure_is_shortest_palindrome_with_prefix(self, letters):
        w = Word(tuple(letters), Alphabet(3))
        c = palindromic_closure(w)
        assert c.is_palindrome
        assert c.chars.startswith(w.chars)
        assert len(c) <= 2 * len(w) or len(w) == 0
        assert c.letters == brute_closure(w.letters)


class TestCensus:
    def test_census_0100(self):
        c = census(parse_word("0100", B))
        assert c.distinct_palindromes == 5
        assert c.defect == 0

    def test_census_empty(self):
        c = census(Word([], B))
        assert c.distinct_palindromes == 1
        assert c.defect == 0

    def test_census_defect_one_word(self):
        # the 12-letter binary image with exactly one missing palindrome
        c = census(parse_word("110100110010", B))
        assert c.defect == 1
        assert c.distinct_palindromes == 12

    def test_per_length_counts(self):
        c = census(parse_word("0100", B))
        # palindromes: eps, 0, 1, 00, 010
        assert c.per_length_counts == (1, 2, 1, 1)

    def test_census_matches_naive_exhaustive(self):
        for sizes, max_len in ((2, 12), (3, 8)):
            alpha = Alphabet(sizes)
            for letters in all_words(sizes, max_len):
                c = census(Word(letters, alpha))
                pals = palindromic_factors(letters)
                assert c.distinct_palindromes == len(pals)
                assert c.defect == naive_defect(letters)

    @given(st.lists(st.integers(0, 2), min_size=0, max_size=16))
    @settings(max_examples=300, deadline=None)
    def test_census_matches_naive_random(self, letters):
        letters = tuple(letters)
        w = Word(letters, Alphabet(3))
        c = census(w)
        assert c.distinct_palindromes == len(palindromic_factors(letters))
        assert c.defect == naive_defect(letters)

    @given(st.lists(st.integers(0, 1), min_size=1, max_size=16))
    @settings(max_examples=200, deadline=None)
    def test_prefix_extension_adds_at_most_one_palindrome(self, letters):
        tracker = DefectTracker()
        seen = 1  # the empty prefix already contains the empty palindrome
        for i, l in enumerate(letters):
            tracker.append(chr(l))
            pals = len(palindromic_factors(tuple(letters[: i + 1])))
            assert pals - seen in (0, 1)
            seen = pals
            assert tracker.defect == (i + 1) + 1 - pals

    @given(st.lists(st.integers(0, 1), min_size=0, max_size=14))
    @settings(max_examples=200, deadline=None)
    def test_defect_symmetry_and_prefix_monotonicity(self, letters):
        letters = tuple(letters)
        w = Word(letters, B)
        assert defect(w) == defect(w.reverse())
        defects = [defect(w[:i]) for i in range(len(w) + 1)]
        assert all(b >= a for a, b in zip(defects, defects[1:]))


class TestDefectProfile:
    def test_fibonacci_is_rich(self):
        prof = defect_profile(standard_episturmian(directive("01")), [10, 100, 1000])
        assert prof == [(10, 0), (100, 0), (1000, 0)]

    def test_checkpoints_must_increase(self):
        src = standard_episturmian(directive("01"))
        with pytest.raises(InvalidArgumentError):
            defect_profile(src, [10, 10])
        with pytest.raises(InvalidArgumentError):
            defect_profile(src, [0, 10])

    def test_image_defect_plateau(self):
        pi = morphism(["110100110010", "1"], codomain_size=2)
        img = image_source(pi, standard_episturmian(directive("01")))
        prof = defect_profile(img, [1000, 5000, 20000])
        assert [d for _, d in prof] == [2, 2, 2]

    def test_recurrence_image_defects_increase(self):
        phi = example3_morphism()
        lengths = [len(phi.apply(example3_word().level_word(i))) for i in range(1, 4)]
        prof = defect_profile(image_source(phi, example3_word()), lengths)
        values = [d for _, d in prof]
        assert values == [2, 4, 6]


class TestPsiComplexity:
    def test_letters_are_palindromes(self, fibonacci_prefix_10k):
        idx = build_index(fibonacci_prefix_10k[:1000], 10)
        assert psi_palindromic_complexity(idx, 1, R) == 2

    def test_odd_exchange_palindromes_vanish(self):
        idx = build_index(periodic_source(parse_word("01", B)).prefix(40), 10)
        assert psi_palindromic_complexity(idx, 3, E) == 0
        assert psi_palindromic_complexity(idx, 2, E) == 2

    def test_requires_binary_for_exchange(self, tribonacci_prefix_10k):
        idx = build_index(tribonacci_prefix_10k[:100], 5)
        with pytest.raises(AlphabetMismatchError):
            psi_palindromic_complexity(idx, 2, E)


class TestCenteredPalindromes:
    def test_tribonacci_has_palindromes_at_every_center(self, tribonacci_prefix_10k):
        idx = build_index(tribonacci_prefix_10k[:5000], 21)
        assert palindromes_centered(idx, 1, 20) == 10
        assert palindromes_centered(idx, 1, 20) >= 3
        assert palindromes_centered(idx, None, 20) == 11

    def test_missing_letter_center(self):
        idx = build_index(periodic_source(parse_word("0", B)).prefix(20), 10)
        assert palindromes_centered(idx, 1, 10) == 0

    def test_center_parity(self):
        idx = build_index(parse_word("0110", B), 4)
        # even-length palindromes only: eps, 11, 0110
        assert palindromes_centered(idx, None, 4) == 3
