"""Finite rings, matrix groups over them, centralizers and regularity."""

from .rings import FiniteRing, dual_numbers, finite_field, make_ring, product_ring, truncated_extension
from .linalg import complement_mod_p, kernel_mod_p, nullspace, rank_mod_p, rank_over, row_basis_mod_p, span_vectors
from .matrices import (
    GROUP_FLAVORS,
    LIE_FLAVORS,
    GroupElement,
    LieElement,
    add_scalar,
    all_matrices,
    charpoly,
    det,
    format_matrix,
    identity,
    inverse,
    mat_add,
    mat_mul,
    mat_pow,
    mat_scale,
    mat_sub,
    parse_matrix,
    pgl_canonical,
    random_group_elements,
    random_matrices,
    trace,
)
from .unipotent import (
    count_unipotents,
    element_order,
    enumerate_nilpotents,
    enumerate_unipotents,
    is_nilpotent,
    is_semisimple,
    is_unipotent,
    jordan_decomposition,
    nilpotent_mask,
    projective_point_counts,
    random_unipotents,
    unipotent_mask,
)
from .centralizers import (
    CentralizerPoints,
    LieCentralizer,
    centralizer_bruteforce,
    centralizer_linear,
    centralizer_points,
    commutes_with,
    lie_centralizer,
    noncommuting_pair,
)
from .regularity import ChevalleyRegularity, chevalley_regular, is_regular_typeA
from .suites import (
    center_character_check,
    center_character_suite,
    jordan_suite,
    nilpotent_translate_check,
    pgl2_char2_suite,
)

__all__ = [
    'FiniteRing',
    'dual_numbers',
    'finite_field',
    'make_ring',
    'product_ring',
    'truncated_extension',
    'complement_mod_p',
    'kernel_mod_p',
    'nullspace',
    'rank_mod_p',
    'rank_over',
    'row_basis_mod_p',
    'span_vectors',
    'GROUP_FLAVORS',
    'LIE_FLAVORS',
    'GroupElement',
    'LieElement',
    'add_scalar',
    'all_matrices',
    'charpoly',
    'det',
    'format_matrix',
    'identity',
    'inverse',
    'mat_add',
    'mat_mul',
    'mat_pow',
    'mat_scale',
    'mat_sub',
    'parse_matrix',
    'pgl_canonical',
    'random_group_elements',
    'random_matrices',
    'trace',
    'count_unipotents',
    'element_order',
    'enumerate_nilpotents',
    'enumerate_unipotents',
    'is_nilpotent',
    'is_semisimple',
    'is_unipotent',
    'jordan_decomposition',
    'nilpotent_mask',
    'projective_point_counts',
    'random_unipotents',
    'unipotent_mask',
    'CentralizerPoints',
    'LieCentralizer',
    'centralizer_bruteforce',
    'centralizer_linear',
    'centralizer_points',
    'commutes_with',
    'lie_centralizer',
    'noncommuting_pair',
    'ChevalleyRegularity',
    'chevalley_regular',
    'is_regular_typeA',
    'center_character_check',
    'center_character_suite',
    'jordan_suite',
    'nilpotent_translate_check',
    'pgl2_char2_suite',
]
