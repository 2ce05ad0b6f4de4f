"""Exact-arithmetic classification of cyclically presented groups.

The package decides perfectness and abelianization structure for the
five-parameter family P(r,n,k,s,q) and for arbitrary cyclically presented
groups given by a word, using only exact integer arithmetic: circulant
determinants, Smith normal forms, cyclotomic resultants.  Two independent
computation paths (matrix determinants and cyclotomic norm products) are kept
alive everywhere and cross-checked against each other.
"""

from .classify import (
    AbelianReport,
    CorollaryB,
    TypeFlags,
    UnitSymmetry,
    Verdict,
    abelianization,
    corollary_b_classify,
    is_perfect,
    is_unit_at,
    main_lemma_instance,
    newton_girard_check,
    theorem_a_instance,
    type_flags,
    unit_symmetry_search,
)
from .cyclic_words import CyclicWord, WordParseError, parse_word, word_to_text
from .exact_linear import IntMatrix, SmithForm, det, smith_normal_form, sylvester
from .poly import IntPoly, circulant_resultant, cyclotomic, resultant
from .prishchepov import (
    PrishParams,
    Reduction,
    ReductionError,
    flip,
    involution,
    poly_F,
    poly_G,
    poly_general,
    reduce_params,
    word_of,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianReport",
    "CorollaryB",
    "CyclicWord",
    "IntMatrix",
    "IntPoly",
    "PrishParams",
    "Reduction",
    "ReductionError",
    "SmithForm",
    "TypeFlags",
    "UnitSymmetry",
    "Verdict",
    "WordParseError",
    "abelianization",
    "circulant_resultant",
    "corollary_b_classify",
    "cyclotomic",
    "det",
    "flip",
    "involution",
    "is_perfect",
    "is_unit_at",
    "main_lemma_instance",
    "newton_girard_check",
    "parse_word",
    "poly_F",
    "poly_G",
    "poly_general",
    "reduce_params",
    "resultant",
    "smith_normal_form",
    "sylvester",
    "theorem_a_instance",
    "type_flags",
    "unit_symmetry_search",
    "word_of",
    "word_to_text",
]
