"""Primitive, proper-power and Seifert curves on a genus-two handlebody.

Words in F(A, B), a Whitehead-automorphism oracle, a syllable-pattern
recognizer, and the R-R diagram families with their Seifert invariants.
"""
from .diagrams import (
    classify_form,
    fiber_types,
    form_from_dict,
    homology_check,
    index_via_perp,
    normalize_brz,
    realize_word,
    regular_fiber,
    validate,
    wmn,
)
from .notation import format_word, parse_word
from .oracle import is_primitive_oracle, is_proper_power_oracle, minimize_length, oracle_verdict
from .recognizer import classify, cmz_condition, cmz_syllables
from .sweep import enumerate_cyclic_words, sweep_equivalence
from .words import (
    AbVector,
    CyclicWord,
    Letter,
    Mat2,
    Word,
    abelianize,
    balanced_product,
    cyclic_reduce,
    free_reduce,
    invert,
    perp_coefficient,
    primitive_root,
    snf_diag,
    substitute,
)

__version__ = "0.1.0"
