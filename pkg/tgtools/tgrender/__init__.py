"""
Created on Oct 19 2026
"""

from tgtools.tgrender.tgChain import (
    Chain,
    unfold,
)
from tgtools.tgrender.tgSVG import (
    SVG,
    Style,
    to_svg,
    zeroset_to_svg,
)

__all__ = [
    'Chain',
    'unfold',
    'SVG',
    'Style',
    'to_svg',
    'zeroset_to_svg',
]
