"""
Created on Oct 19 2026
"""

from tgtools.tgpresentations.tgRelator import (
    FWord,
    Relator,
    UnknownAlphabet,
    commutator,
)
from tgtools.tgpresentations.tgSchreier import (
    b_to_d,
    b_to_y,
    b_word,
    commutator_b,
    d_to_b,
    d_to_y,
    lex_positive,
    primed_cores,
    rs_conj_general,
    rs_conj_t1,
    rs_relation_cores,
    rs_relation_e,
)
from tgtools.tgpresentations.tgPresentations import (
    PRESENTATIONS,
    SUITES,
    BadWindow,
    VerificationReport,
    WitnessReport,
    minimality_witness,
    presentation,
    relator_holds,
    relators_G,
    relators_G_min,
    relators_H_min,
    relators_S,
    verify_relators,
    window_pairs,
)

__all__ = [
    'FWord',
    'Relator',
    'UnknownAlphabet',
    'commutator',
    'b_to_d',
    'b_to_y',
    'b_word',
    'commutator_b',
    'd_to_b',
    'd_to_y',
    'lex_positive',
    'primed_cores',
    'rs_conj_general',
    'rs_conj_t1',
    'rs_relation_cores',
    'rs_relation_e',
    'PRESENTATIONS',
    'SUITES',
    'BadWindow',
    'VerificationReport',
    'WitnessReport',
    'minimality_witness',
    'presentation',
    'relator_holds',
    'relators_G',
    'relators_G_min',
    'relators_H_min',
    'relators_S',
    'verify_relators',
    'window_pairs',
]
