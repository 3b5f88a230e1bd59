"""Biquandle presentations and derived invariants of virtual knot closures.

The pipeline: parse a virtual braid word, close it, read off a biquandle
presentation, then linearize the presentation either over Z[s^±1, t^±1]
(giving the normalized generalized Alexander polynomial) or over the
quaternions mod an odd prime (giving a module triviality certificate).
Finite biquandles given as operation tables can be checked against the
defining axioms directly.
"""

from .alexander import (
    block_at,
    braid_matrix_down,
    braid_matrix_up,
    crossing_matrix,
    gap,
    gap_text,
    normalize_gap,
    relation_matrix_from_braid,
    relation_matrix_from_presentation,
)
from .braids import (
    BraidLetter,
    BraidWord,
    ad_inversion,
    apply_relator_move,
    available_moves,
    free_reduce,
    invert_braid,
    markov_move,
    nu,
    parse_braid_word,
    random_braid,
    relator_move_sites,
    render_braid_word,
    sigma,
    vertical_mirror,
)
from .errors import DomainError, ParseError
from .finite import (
    AxiomCheck,
    AxiomReport,
    FiniteBiquandle,
    check_axioms,
    finite_alexander_biquandle,
    finite_quaternionic_biquandle,
    parse_table_file,
)
from .laurent import (
    LaurentMatrix,
    LaurentPoly,
    cofactor_determinant,
    determinant,
    format_poly,
)
from .quaternion import (
    KishinoCertificate,
    Quaternion,
    QRelationSet,
    RankReport,
    fp_rank,
    kishino_certificate,
    left_matrix,
    module_is_trivial,
    q_linearize_term,
    q_relations_from_presentation,
    scalar_restriction,
)
from .terms import (
    BQPresentation,
    BQRelation,
    BQTerm,
    apply_morphism,
    braid_act_down,
    braid_act_up,
    ll,
    lr,
    parse_presentation,
    presentation_from_braid,
    presentation_from_braid_down,
    presentations_equal_up_to_renaming,
    ul,
    ur,
)

__version__ = "0.1.0"

__all__ = [
    "BQPresentation",
    "BQRelation",
    "BQTerm",
    "AxiomCheck",
    "AxiomReport",
    "BraidLetter",
    "BraidWord",
    "DomainError",
    "FiniteBiquandle",
    "KishinoCertificate",
    "LaurentMatrix",
    "LaurentPoly",
    "ParseError",
    "Quaternion",
    "QRelationSet",
    "RankReport",
    "ad_inversion",
    "apply_morphism",
    "apply_relator_move",
    "available_moves",
    "block_at",
    "braid_act_down",
    "braid_act_up",
    "braid_matrix_down",
    "braid_matrix_up",
    "check_axioms",
    "cofactor_determinant",
    "crossing_matrix",
    "determinant",
    "finite_alexander_biquandle",
    "finite_quaternionic_biquandle",
    "format_poly",
    "fp_rank",
    "free_reduce",
    "gap",
    "gap_text",
    "invert_braid",
    "kishino_certificate",
    "left_matrix",
    "ll",
    "lr",
    "markov_move",
    "module_is_trivial",
    "normalize_gap",
    "nu",
    "parse_braid_word",
    "parse_presentation",
    "parse_table_file",
    "presentation_from_braid",
    "presentation_from_braid_down",
    "presentations_equal_up_to_renaming",
    "q_linearize_term",
    "q_relations_from_presentation",
    "random_braid",
    "relation_matrix_from_braid",
    "relation_matrix_from_presentation",
    "relator_move_sites",
    "render_braid_word",
    "scalar_restriction",
    "sigma",
    "ul",
    "ur",
    "vertical_mirror",
]
