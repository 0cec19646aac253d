"""
Package des certificats de norme relative

from src.norms import decide_norm, NormStatus
"""

from .certificates import (
    NormBudget,
    NormStatus,
    Obstruction,
    Verdict,
    decide_norm,
    find_obstruction,
    obstruction_minus_one_mod3,
    obstruction_minus_one_mod8,
    witness_search,
)

__all__ = [
    'Verdict',
    'Obstruction',
    'NormStatus',
    'NormBudget',
    'obstruction_minus_one_mod3',
    'obstruction_minus_one_mod8',
    'find_obstruction',
    'witness_search',
    'decide_norm',
]
