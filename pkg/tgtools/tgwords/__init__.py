"""
Created on Oct 19 2026
"""

from tgtools.tgwords.tgWords import (
    ALPHABET,
    NAMED_WORDS,
    BadSymbol,
    DeletePair,
    Move,
    NotStable,
    Transpose,
    Word,
    apply_move,
    cyclic_reduce,
    free_reduce,
    is_canonical,
    is_cyclically_reduced,
    is_reduced,
    is_stable,
    relabel,
    replay,
    stable_reduction,
    to_word,
    word_canonical,
    word_orbit,
    word_str,
)

__all__ = [
    'ALPHABET',
    'NAMED_WORDS',
    'BadSymbol',
    'DeletePair',
    'Move',
    'NotStable',
    'Transpose',
    'Word',
    'apply_move',
    'cyclic_reduce',
    'free_reduce',
    'is_canonical',
    'is_cyclically_reduced',
    'is_reduced',
    'is_stable',
    'relabel',
    'replay',
    'stable_reduction',
    'to_word',
    'word_canonical',
    'word_orbit',
    'word_str',
]
