"""
Created on Oct 19 2026
"""

from tgtools.tgisometry.tgIsometry import (
    T1,
    T1_HALF,
    LinearPart,
    NotATranslation,
    NotInTranslationSubgroup,
    Ref,
    Rot,
    SymIsometry,
    TriangleShape,
    compose,
    conj_index,
    evaluate,
    from_word,
    generator,
    is_identity,
    normal,
    relative_angle,
    rho,
    t_coordinates,
    t_value,
    t_vector,
    translation_vector,
    u_vector,
    uvec_value,
)

__all__ = [
    'T1',
    'T1_HALF',
    'LinearPart',
    'NotATranslation',
    'NotInTranslationSubgroup',
    'Ref',
    'Rot',
    'SymIsometry',
    'TriangleShape',
    'compose',
    'conj_index',
    'evaluate',
    'from_word',
    'generator',
    'is_identity',
    'normal',
    'relative_angle',
    'rho',
    't_coordinates',
    't_value',
    't_vector',
    'translation_vector',
    'u_vector',
    'uvec_value',
]
