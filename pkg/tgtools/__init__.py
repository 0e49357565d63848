"""
Created on Oct 19 2026

Exact arithmetic on the reflection group of a Euclidean
triangle: words, isometries, metabelian normal forms,
presentations, a stable-relation census and the
trigonometric zero sets the relations reduce to.
"""

from tgtools._version import __version__
from tgtools.Args import UsageError

__all__ = ['__version__', 'UsageError']
