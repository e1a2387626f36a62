"""Episturmian words, palindromic defect and morphism classification."""

from .errors import (
    AlphabetMismatchError,
    Error,
    InsufficientContextError,
    InvalidArgumentError,
    NotInLanguageError,
    PreconditionError,
)
from .words import AB, BINARY, EMPTY, TERNARY, Alphabet, Word, parse_word
from .factors import ExtensionReport, FactorClass, FactorIndex, build_index
from .palindromes import (
    AntimorphismKind,
    DefectTracker,
    Eertree,
    PalindromeCensus,
    apply_antimorphism,
    census,
    defect,
    defect_profile,
    is_psi_palindrome,
    longest_palindromic_suffix,
    palindromes_centered,
    palindromic_closure,
    psi_palindromic_complexity,
)
from .generators import (
    DirectiveSpec,
    EpisturmianSource,
    PrefixSource,
    directive,
    example3_level,
    example3_word,
    fixed_point,
    image_source,
    periodic_source,
    random_directive_spec,
    s_preimage_source,
    separating_letter,
    standard_episturmian,
)
from .morphisms import (
    ClassWitness,
    Morphism,
    binary_projection,
    class_p_witness,
    compose,
    conjugacy_witness,
    example3_morphism,
    fibonacci_morphism,
    find_pret_radius,
    identity_morphism,
    is_pret,
    is_primitive,
    morphism,
    s_operator,
    s_preimage,
    sigma,
    standard_p_witness,
    tribonacci_morphism,
)
from .analysis import (
    CheckVerdict,
    DerivatedWord,
    HProfile,
    ReturnWordReport,
    check_distinct_return_lengths,
    check_rich_bispecial,
    check_rich_crw,
    closed_under,
    derivated_word,
    e_extension_palindromicity,
    extension_pivot_letters,
    h_profile,
    letter_gap_palindromicity,
    pext,
    return_words,
)

__version__ = "0.1.0"
