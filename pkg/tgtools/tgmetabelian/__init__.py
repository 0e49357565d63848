"""
Created on Oct 19 2026
"""

from tgtools.tgmetabelian.tgMetabelian import (
    Y_LETTERS,
    MetaNF,
    NotInCommutatorSubgroup,
    OddLength,
    YWord,
    meta_to_tcoords,
    normal_form,
    tcoords_to_meta,
    to_ywords,
    word_normal_form,
    yword_inverse,
    yword_str,
)

__all__ = [
    'Y_LETTERS',
    'MetaNF',
    'NotInCommutatorSubgroup',
    'OddLength',
    'YWord',
    'meta_to_tcoords',
    'normal_form',
    'tcoords_to_meta',
    'to_ywords',
    'word_normal_form',
    'yword_inverse',
    'yword_str',
]
