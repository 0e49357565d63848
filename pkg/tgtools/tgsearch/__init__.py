"""
Created on Oct 19 2026
"""

from tgtools.tgsearch.tgEnumerate import (
    brute_force_stable,
    enumerate_stable,
)
from tgtools.tgsearch.tgCensus import (
    CensusTable,
    SearchReport,
    TClass,
    Witness,
    census,
    census_oracle,
    find_nongeneric_candidates,
    rational_line,
    t_class_canonical,
    word_t_class,
    typical_components,
)

__all__ = [
    'brute_force_stable',
    'enumerate_stable',
    'CensusTable',
    'SearchReport',
    'TClass',
    'Witness',
    'census',
    'census_oracle',
    'find_nongeneric_candidates',
    'rational_line',
    't_class_canonical',
    'word_t_class',
    'typical_components',
]
