"""
Created on Oct 19 2026
"""

from tgtools.tglibs.tgLattice import (
    CoefficientOverflow,
    LatticeMap,
    TCoords,
    UVec,
    WindingMap,
)
from tgtools.tglibs.tgObject import tgObject
from tgtools.tglibs.tgAngle import parse_angle

__all__ = [
    'CoefficientOverflow',
    'LatticeMap',
    'TCoords',
    'UVec',
    'WindingMap',
    'tgObject',
    'parse_angle',
]
