"""The D4 unipotent Chevalley algebra, its triality maps and Galois descent."""

from .table import (
    HIGHEST,
    POSITIVE_ROOTS,
    RELATIONS,
    D4Table,
    d4_structure_constants,
    root_label,
)
from .algebra import (
    LieUVector,
    ad_bracket,
    ad_matrix,
    ad_u_action,
    ad_u_matrix,
    coefficient_field,
    e_basis,
    e_coordinates,
    fixed_space_basis,
    regular_u,
    triality_action,
    triality_matrix,
    triality_on_e,
)
from .descent import (
    DESCENT_CASES,
    DescentCase,
    RelationCheck,
    d4_descent_solve,
    descent_skeleton,
    solve_descent,
)
from .suite import verify_d4

__all__ = [
    'HIGHEST',
    'POSITIVE_ROOTS',
    'RELATIONS',
    'D4Table',
    'd4_structure_constants',
    'root_label',
    'LieUVector',
    'ad_bracket',
    'ad_matrix',
    'ad_u_action',
    'ad_u_matrix',
    'coefficient_field',
    'e_basis',
    'e_coordinates',
    'fixed_space_basis',
    'regular_u',
    'triality_action',
    'triality_matrix',
    'triality_on_e',
    'DESCENT_CASES',
    'DescentCase',
    'RelationCheck',
    'd4_descent_solve',
    'descent_skeleton',
    'solve_descent',
    'verify_d4',
]
