"""
Created on Oct 19 2026
"""

from tgtools.tgsolver.tgExpSum import (
    ExpSum,
    expsum_of,
)
from tgtools.tgsolver.tgZeroSet import (
    NoConvergence,
    ZeroSet,
    zero_set,
)
from tgtools.tgsolver.tgLocus import (
    LocusReport,
    implicit_locus,
    verify_on_locus,
)

__all__ = [
    'ExpSum',
    'expsum_of',
    'NoConvergence',
    'ZeroSet',
    'zero_set',
    'LocusReport',
    'implicit_locus',
    'verify_on_locus',
]
