"""Exact integer linear algebra: Smith normal form and lattice quotients."""

from .matrix import IntegerMatrix
from .smith import SmithResult, smith_normal_form, torsion_primes_of
from .lattice import quotient_invariants, quotient_torsion, solve_integral

__all__ = [
    'IntegerMatrix',
    'SmithResult',
    'smith_normal_form',
    'torsion_primes_of',
    'quotient_invariants',
    'quotient_torsion',
    'solve_integral',
]
