"""Root systems, Weyl groups and diagram folding."""

from .cartan import (
    Cartan,
    canonical_cartan,
    connected_components,
    identify_cartan,
    parse_root_type,
    submatrix,
)
from .system import (
    Root,
    RootSystem,
    RootSystemModel,
    build_root_system,
    dual_highest_root_coeffs,
    highest_root_coeffs,
    root_system,
)
from .weyl import (
    cartan_weyl_order,
    fundamental_weight,
    parabolic_index,
    parabolic_index_table,
    parabolic_indices,
    subdiagram_weyl_order,
    weyl_group_order,
    weyl_group_order_by_orbits,
    weyl_orbit,
)
from .folding import (
    DiagramAutomorphism,
    FoldResult,
    fold,
    named_automorphisms,
    type_a_fold_root_strings,
)
from .suite import classical_indices, folding_suite, weyl_suite

__all__ = [
    'Cartan',
    'canonical_cartan',
    'connected_components',
    'identify_cartan',
    'parse_root_type',
    'submatrix',
    'Root',
    'RootSystem',
    'RootSystemModel',
    'build_root_system',
    'dual_highest_root_coeffs',
    'highest_root_coeffs',
    'root_system',
    'cartan_weyl_order',
    'fundamental_weight',
    'parabolic_index',
    'parabolic_index_table',
    'parabolic_indices',
    'subdiagram_weyl_order',
    'weyl_group_order',
    'weyl_group_order_by_orbits',
    'weyl_orbit',
    'DiagramAutomorphism',
    'FoldResult',
    'fold',
    'named_automorphisms',
    'type_a_fold_root_strings',
    'classical_indices',
    'folding_suite',
    'weyl_suite',
]
