import random

import pytest

from epirich import (
    Alphabet,
    AlphabetMismatchError,
    DirectiveSpec,
    InvalidArgumentError,
    Word,
    build_index,
    directive,
    example3_level,
    example3_word,
    fibonacci_morphism,
    fixed_point,
    identity_morphism,
    image_source,
    morphism,
    palindromic_closure,
    parse_word,
    periodic_source,
    random_directive_spec,
    return_words,
    s_preimage_source,
    separating_letter,
    standard_episturmian,
    tribonacci_morphism,
)
from oracles import iterate_closure_chain

B = Alphabet(2)
T = Alphabet(3)


class TestDirectiveSpec:
    def test_letter_indexing_is_one_based(self):
        spec = directive("12", preperiod="0")
        assert [spec.letter(n) for n in range(1, 6)] == [0, 1, 2, 1, 2]

    def test_period_must_be_nonempty(self):
        with pytest.raises(InvalidArgumentError):
            DirectiveSpec(alphabet=B, period=Word([], B))

    def test_letters_must_fit_alphabet(self):
        with pytest.raises(AlphabetMismatchError):
            DirectiveSpec(alphabet=B, period=parse_word("012"))

    def test_ell(self):
        assert directive("01").ell() == 2
        assert directive("0012").ell() == 3
        assert directive("01023").ell() == 2
        assert directive("0", alphabet_size=2).ell() is None

    def test_letters_from(self):
        spec = directive("12", preperiod="012")
        assert spec.letters_from(1) == {0, 1, 2}
        assert spec.letters_from(2) == {1, 2}
        assert spec.letters_from(5) == {1, 2}

    def test_separating_block_is_factor(self):
        assert directive("01").separating_block_is_factor()
        # the first letter never recurs past ell
        assert not directive("12", preperiod="0").separating_block_is_factor()


class TestEpisturmian:
    def test_fibonacci_palindromic_prefixes(self):
        src = standard_episturmian(directive("01"))
        assert str(src.prefix_palindrome(1)) == "0"
        assert str(src.prefix_palindrome(2)) == "010"
        assert str(src.prefix_palindrome(3)) == "010010"

    def test_tribonacci_third_prefix(self):
        src = standard_episturmian(directive("012"))
        assert str(src.prefix_palindrome(3)) == "0102010"

    def test_constant_directive(self):
        src = standard_episturmian(directive("0", alphabet_size=1))
        assert src.prefix_chars(10) == chr(0) * 10

    def test_prefixes_nest(self):
        src = standard_episturmian(directive("0102"))
        long = src.prefix_chars(500)
        assert src.prefix_chars(100) == long[:100]

    def test_closure_chain_matches_brute_force(self):
        spec = directive("0212", preperiod="1")
        src = standard_episturmian(spec)
        chain = iterate_closure_chain((), [spec.letter(n) for n in range(1, 9)])
        for i, expected in enumerate(chain):
            assert src.prefix_palindrome(i).letters == expected

    def test_every_closure_prefix_is_palindromic_prefix(self):
        src = standard_episturmian(directive("021", preperiod="10"))
        for i in range(1, 10):
            w = src.prefix_palindrome(i)
            assert w.is_palindrome
            assert src.prefix_chars(len(w) + 5).startswith(w.chars)

    def test_nonempty_seed_uses_generic_closure_engine(self):
        spec = directive("01", seed="011")
        src = standard_episturmian(spec)
        chain = iterate_closure_chain((0, 1, 1), [spec.letter(n) for n in range(1, 8)])
        for i, expected in enumerate(chain):
            assert src.prefix_palindrome(i).letters == expected

    def test_fibonacci_directive_equals_fixed_point(self):
        src = standard_episturmian(directive("01"))
        fp = fixed_point(fibonacci_morphism(), 0)
        assert src.prefix_chars(10000) == fp.prefix_chars(10000)

    def test_first_directive_letter_is_separating(self):
        for per, pre in (("01", ""), ("012", ""), ("20011", "3"), ("102", "2")):
            spec = directive(per, preperiod=pre)
            src = standard_episturmian(spec)
            idx = build_index(src.prefix(5000), 4)
            assert separating_letter(idx) == spec.separating_letter

    def test_separating_letter_tie_break(self):
        # in (01)^omega both letters separate; the smallest is returned
        idx = build_index(periodic_source(parse_word("01", B)).prefix(40), 4)
        assert separating_letter(idx) == 0

    def test_separating_block_lengths(self):
        # interior runs of the separating letter have length ell-1 or ell
        for per in ("01", "012", "0012"):
            spec = directive(per)
            src = standard_episturmian(spec)
            text = src.prefix_chars(20000)
            mark = chr(spec.separating_letter)
            ell = spec.ell()
            runs = set()
            i = 0
            while i < len(text):
                if text[i] == mark:
                    j = i
                    while j < len(text) and text[j] == mark:
                        j += 1
                    if i > 0 and j < len(text):
                        runs.add(j - i)
                    i = j
                else:
                    i += 1
            assert runs <= {ell - 1, ell}

    def test_complete_returns_of_palindromic_prefixes_are_closures(self):
        # the complete return words of w_n are the closures (w_n x)^R
        # over the letters x still to come in the directive
        for per, pre in (("012", ""), ("12", "012")):
            spec = directive(per, preperiod=pre)
            src = standard_episturmian(spec)
            for n in range(1, 5):
                wn = src.prefix_palindrome(n)
                witnessed = {
                    w.chars for w in return_words(src, wn, 30000).complete_return_words
                }
                predicted = {
                    palindromic_closure(wn + Word([x], spec.alphabet)).chars
                    for x in spec.letters_from(n + 1)
                }
                assert witnessed == predicted


class TestFixedPoint:
    def test_tribonacci_fixed_point(self):
        src = fixed_point(tribonacci_morphism(), 0)
        assert src.prefix_chars(7) == parse_word("0102010").chars

    def test_not_prolongable(self):
        with pytest.raises(InvalidArgumentError):
            fixed_point(morphism(["0", "1"]), 0)
        with pytest.raises(InvalidArgumentError):
            fixed_point(morphism(["10", "1"]), 0)

    def test_finite_fixed_point_detected(self):
        # 0 -> 01, 1 -> eps: the expansion dies after two letters
        m = morphism({0: "01", 1: ""}, codomain_size=2)
        src = fixed_point(m, 0)
        with pytest.raises(InvalidArgumentError):
            src.prefix(10)


class TestPeriodic:
    def test_simple_period(self):
        src = periodic_source(parse_word("01", B))
        assert str(src.prefix(5)) == "01010"

    def test_empty_period_rejected(self):
        with pytest.raises(InvalidArgumentError):
            periodic_source(Word([], B))

    def test_block_period(self):
        src = periodic_source(parse_word("001", B))
        assert str(src.prefix(9)) == "001001001"


class TestImageSource:
    def test_morphic_image_matches_apply(self):
        phi = morphism(["0100", "01011", "010111"], codomain_size=2)
        base = example3_word()
        img = image_source(phi, base)
        assert img.prefix_chars(9) == phi.apply(base.prefix(2)).chars

    def test_identity_image(self):
        src = image_source(identity_morphism(T), standard_episturmian(directive("012")))
        assert src.prefix_chars(200) == standard_episturmian(directive("012")).prefix_chars(200)

    def test_all_erasing_rejected(self):
        m = morphism({0: "", 1: ""}, codomain_size=1)
        with pytest.raises(InvalidArgumentError):
            image_source(m, periodic_source(parse_word("01", B)))

    def test_partially_erasing_image(self):
        m = morphism({0: "0", 1: ""}, codomain_size=1)
        src = image_source(m, periodic_source(parse_word("01", B)))
        assert src.prefix_chars(5) == chr(0) * 5


class TestExample3:
    def test_level_one(self):
        assert str(example3_level(1)) == "0110220110"

    def test_level_two_shape(self):
        v1, v2 = example3_level(1), example3_level(2)
        assert len(v2) == 11 * len(v1) + 10
        assert v2.chars.startswith(v1.chars + chr(0) + v1.chars)

    def test_prefix_consistency(self):
        src = example3_word()
        assert src.prefix_chars(10) == example3_level(1).chars
        assert src.prefix_chars(1000) == example3_level(3).chars[:1000]


class TestSPreimageSource:
    def test_round_trip_against_word_level(self):
        from epirich import s_operator

        base = periodic_source(parse_word("011", B))
        pre = s_preimage_source(base, 1)
        w = pre.prefix(20)
        assert s_operator(w).chars == base.prefix_chars(19)
        assert w[0] == 1

    def test_two_preimages_are_exchanged(self):
        base = standard_episturmian(directive("01"))
        p0 = s_preimage_source(base, 0).prefix_chars(50)
        p1 = s_preimage_source(standard_episturmian(directive("01")), 1).prefix_chars(50)
        exchange = str.maketrans({chr(0): chr(1), chr(1): chr(0)})
        assert p0.translate(exchange) == p1

    def test_requires_binary(self):
        with pytest.raises(AlphabetMismatchError):
            s_preimage_source(standard_episturmian(directive("012")), 0)


class TestRandomDirectives:
    def test_reproducible(self):
        a = random_directive_spec(random.Random(5), 3)
        b = random_directive_spec(random.Random(5), 3)
        assert a == b

    def test_period_covers_alphabet(self):
        rng = random.Random(1)
        for _ in range(50):
            spec = random_directive_spec(rng, 4)
            assert set(spec.period.letters) == {0, 1, 2, 3}
            assert len(spec.preperiod) <= 4
            assert len(spec.period) <= 6

    def test_alphabet_larger_than_period_cap_rejected(self):
        with pytest.raises(InvalidArgumentError):
            random_directive_spec(random.Random(0), 7)
