"""Acceptance suite: one test per criterion, each printing a verdict line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the verdict
lines on passing runs as well.  Every tolerance is exact.
"""

import random
from itertools import combinations, product

from epirich import (
    Alphabet,
    AntimorphismKind,
    Word,
    apply_antimorphism,
    build_index,
    census,
    check_rich_bispecial,
    check_rich_crw,
    class_p_witness,
    defect,
    defect_profile,
    directive,
    e_extension_palindromicity,
    example3_morphism,
    example3_word,
    extension_pivot_letters,
    find_pret_radius,
    image_source,
    is_pret,
    letter_gap_palindromicity,
    morphism,
    parse_word,
    random_directive_spec,
    s_operator,
    s_preimage,
    standard_episturmian,
)
from epirich.cli import (
    _experiment_prop12,
    _experiment_remark7,
    _experiment_theorem1,
    _experiment_theorem2,
)
from oracles import naive_defect

B = Alphabet(2)
T = Alphabet(3)

PI = morphism(["110100110010", "1"], codomain_size=2)


def verdict(number: int, label: str, ok: bool):
    print(f"ACCEPTANCE {number:2d} {label}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {number} ({label}) failed"


def test_criterion_01_episturmian_richness():
    rng = random.Random(20260809)
    ok = True
    for _ in range(50):
        spec = random_directive_spec(rng, 3)
        d = defect_profile(standard_episturmian(spec), [10000])[0][1]
        ok &= d == 0
    verdict(1, "ternary episturmian words are rich at depth 10^4", ok)


def test_criterion_02_fibonacci_image_defect():
    d_letter_image = census(PI.images[0]).defect
    in_class = is_pret(PI, parse_word("11", B))
    profile = defect_profile(
        image_source(PI, standard_episturmian(directive("01"))),
        [1000, 3162, 10000, 31623, 100000],
    )
    values = [d for _, d in profile]
    # the profile reaches 2 before the first checkpoint and stays there
    ok = d_letter_image == 1 and in_class and values == [2, 2, 2, 2, 2]
    verdict(2, "defect-1 image morphism gives image defect exactly 2", ok)


def test_criterion_03_recurrence_word_defect_growth():
    phi = example3_morphism()
    levels = [example3_word().level_word(i) for i in range(1, 6)]
    level_defects = [defect(v) for v in levels[:4]]
    checkpoints = [len(phi.apply(v)) for v in levels]
    profile = defect_profile(image_source(phi, example3_word()), checkpoints)
    values = [d for _, d in profile]
    increasing = all(b > a for a, b in zip(values, values[1:]))
    ok = level_defects == [0, 0, 0, 0] and increasing
    assert values == [2, 4, 6, 8, 10]  # frozen from the census oracle
    verdict(3, "rich levels, strictly growing image defect", ok)


def test_criterion_04_ternary_projections_rich():
    report = _experiment_theorem2()
    ok = report.passed and len(report.rows) == 90
    ok &= all(row["defect"] == 0 for row in report.rows)
    verdict(4, "ternary projections have defect 0 at depth 10^4", ok)


def test_criterion_05_image_defect_plateaus():
    report = _experiment_theorem1()
    ok = report.passed and len(report.rows) == 17
    ok &= all(row["plateau"] == "yes" for row in report.rows)
    verdict(5, "return-word-class images plateau up to depth 10^5", ok)


def test_criterion_06_morphism_classifier_regressions():
    phi = example3_morphism()
    r_phi = find_pret_radius(phi)
    r_pi = find_pret_radius(PI)
    p_fib = class_p_witness(morphism(["01", "0"], codomain_size=2))
    ok = str(r_phi) == "010" and str(r_pi) == "11" and str(p_fib.radius) == "0"

    # independent recheck of every witness against the raw definitions
    def recheck_pret(m, r):
        rc = r.chars
        if rc != rc[::-1]:
            return False
        images = [img.chars for img in m.images]
        if len(set(images)) != len(images):
            return False
        for ic in images:
            whole = ic + rc
            if not ic or whole != whole[::-1] or not whole.startswith(rc):
                return False
        return True

    ok &= recheck_pret(phi, r_phi) and recheck_pret(PI, r_pi)
    r = p_fib.radius.chars
    for img in morphism(["01", "0"], codomain_size=2).images:
        rest = img.chars[len(r):]
        ok &= img.chars.startswith(r) and rest == rest[::-1]
    ok &= r == r[::-1]
    verdict(6, "classifier radii 010 / 11 / 0 recheck", ok)


def test_criterion_07_richness_checker_oracle_equivalence():
    ok = True
    for n in range(0, 15):
        for tup in product((0, 1), repeat=n):
            w = Word(tup, B)
            idx = build_index(w, len(w))
            crw = check_rich_crw(idx, len(w)).passed
            rich = naive_defect(tup) == 0
            if crw != rich:
                ok = False
                break
        if not ok:
            break
    for spec in (directive("01"), directive("012"), directive("0102"),
                 directive("0212", preperiod="1")):
        idx = build_index(standard_episturmian(spec).prefix(10000), 30)
        ok &= check_rich_bispecial(idx, 30).passed
    verdict(7, "checker equivalence (exhaustive <= 14) and bispecial pass", ok)


def test_criterion_08_return_word_lengths():
    report = _experiment_remark7()
    ok = report.passed
    ternary_rows = [r for r in report.rows if r["word"] != "seed=;pre=;per=01023"]
    ok &= all(r["distinct_lengths"] == "yes" for r in ternary_rows)
    quaternary = [r for r in report.rows if r["word"] == "seed=;pre=;per=01023"]
    ok &= len(quaternary) == 1 and quaternary[0]["distinct_lengths"] == "no"
    ok &= any("0010201" in note and "0010301" in note for note in report.notes)
    verdict(8, "return-word lengths: ternary distinct, quaternary pair flagged", ok)


def test_criterion_09_sliding_xor_round_trip():
    ok = True
    for n in range(0, 13):
        for tup in product((0, 1), repeat=n):
            v = Word(tup, B)
            w0 = s_preimage(v, 0)
            w1 = s_preimage(v, 1)
            ok &= s_operator(w0) == v and s_operator(w1) == v
            ok &= apply_antimorphism(AntimorphismKind.RE, w0) == w1
        if not ok:
            break
    verdict(9, "sliding-xor round trip exhaustive <= 12", ok)


def test_criterion_10_h_rich_preimages():
    report = _experiment_prop12()
    ok = report.passed and len(report.rows) == 36
    ok &= all(row["h_rich"] == "yes" for row in report.rows)
    verdict(10, "projection preimages H-rich for n <= 50", ok)


def test_criterion_11_gap_and_extension_palindromicity():
    rng = random.Random(424242)
    sizes = (2, 2, 2, 3, 3, 3, 3, 4, 4, 4)
    samples = [(k, random_directive_spec(rng, k)) for k in sizes]
    ok = True
    gap_checked = ext_checked = 0
    for k, spec in samples:
        idx = build_index(standard_episturmian(spec).prefix(10000), 16)
        letters = list(range(k))
        for size in range(1, k):
            for subset in combinations(letters, size):
                gap_checked += 1
                ok &= letter_gap_palindromicity(idx, set(subset)).passed
        for n in range(0, 7):
            for chars in sorted(idx.factor_set(n)):
                w = Word.from_chars(chars, Alphabet(k))
                if not w.is_palindrome:
                    continue
                pivots = extension_pivot_letters(idx, w)
                if len(pivots) != 1:
                    continue  # anchor not determined: not admissible
                anchor = next(iter(pivots))
                rest = [x for x in letters if x != anchor]
                for size in range(0, k):
                    for extra in combinations(rest, size):
                        ext_checked += 1
                        ok &= e_extension_palindromicity(
                            idx, w, set(extra) | {anchor}, anchor).passed
    ok &= gap_checked > 0 and ext_checked > 0
    verdict(11, f"gap ({gap_checked}) and extension ({ext_checked}) checks", ok)
