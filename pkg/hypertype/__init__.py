"""
hypertype: hypergeometric type functions.

Series and standard solutions of the 2F1, 1F1, 2F0 and 0F1 equations and of
the Gegenbauer and Hermite equations, the operators behind them, their
symmetries, recurrences, connection formulas, classical polynomials and
integral representations.
"""
from .errors import HypertypeError
from .families import Family, FamilyParams
from .numeric_core import SeriesResult, Status
from .series import (
    Normalization, SolutionKind, gegenbauer_solution, hyp0f1, hyp1f1, hyp2f0, hyp2f1, standard_solution,
)

__version__ = '1.0.0'

__all__ = [
    'Family', 'FamilyParams', 'HypertypeError', 'Normalization', 'SeriesResult', 'SolutionKind', 'Status',
    'gegenbauer_solution', 'hyp0f1', 'hyp1f1', 'hyp2f0', 'hyp2f1', 'standard_solution',
]
