"""Type-A Springer maps, their coefficient solvers and verification checks."""

from .maps import (
    DescentData,
    SpringerCoefficients,
    apply_springer,
    inverse_coefficients,
    inverse_springer_batch,
    parse_coefficients,
    solve_split,
    springer_batch,
)
from .quasisplit import (
    DescentObstruction,
    anti_diagonal_w,
    dpsi_batch,
    psi_batch,
    recurrence_holds,
    solve_quasisplit_typeA,
)
from .verify import (
    SUITE_GRID,
    bijection_check,
    centralizer_match_check,
    commutativity_equivalence_check,
    commutativity_suite,
    corrupt_coefficients,
    equivariance_check,
    field_spec,
    jordan_block,
    negative_control_check,
    obstruction_check,
    psi_demonstration,
    quasisplit_bundle,
    recurrence_check,
    springer_suite,
    twisted_equivariance_check,
    uniqueness_check,
    upper_triangular_check,
    verify_springer,
)
from .kawanaka import KawanakaContext, differential_check, kawanaka_check, kawanaka_suite

__all__ = [
    'DescentData',
    'SpringerCoefficients',
    'apply_springer',
    'inverse_coefficients',
    'inverse_springer_batch',
    'parse_coefficients',
    'solve_split',
    'springer_batch',
    'DescentObstruction',
    'anti_diagonal_w',
    'dpsi_batch',
    'psi_batch',
    'recurrence_holds',
    'solve_quasisplit_typeA',
    'SUITE_GRID',
    'bijection_check',
    'centralizer_match_check',
    'commutativity_equivalence_check',
    'commutativity_suite',
    'corrupt_coefficients',
    'equivariance_check',
    'field_spec',
    'jordan_block',
    'negative_control_check',
    'obstruction_check',
    'psi_demonstration',
    'quasisplit_bundle',
    'recurrence_check',
    'springer_suite',
    'twisted_equivariance_check',
    'uniqueness_check',
    'upper_triangular_check',
    'verify_springer',
    'KawanakaContext',
    'differential_check',
    'kawanaka_check',
    'kawanaka_suite',
]
