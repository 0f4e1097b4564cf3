"""Prime classification for root systems and root data."""

from .subsystems import (
    ClosedSubsystem,
    closed_subsystems,
    closed_subsystems_bruteforce,
    is_closed,
    subsystem_from_base,
)
from .datum import RootDatum, center_invariants, fundamental_group_invariants, fundamental_group_order
from .classify import (
    DEFAULT_PRIMES,
    TABLE1_TYPES,
    PrimeReport,
    Table1Row,
    bad_primes,
    bad_primes_by_coefficients,
    classification_table,
    expected_table1,
    singular_primes,
    subsystem_torsion,
    table1_rows,
    torsion_primes,
    torsion_primes_by_coefficients,
)
from .existence import SpringerExistence, springer_exists
from .alcove import AlcoveVertex, alcove_vertex_subsystems
from .suite import alcove_suite, subsystems_suite, table1_suite

__all__ = [
    'ClosedSubsystem',
    'closed_subsystems',
    'closed_subsystems_bruteforce',
    'is_closed',
    'subsystem_from_base',
    'RootDatum',
    'center_invariants',
    'fundamental_group_invariants',
    'fundamental_group_order',
    'DEFAULT_PRIMES',
    'TABLE1_TYPES',
    'PrimeReport',
    'Table1Row',
    'bad_primes',
    'bad_primes_by_coefficients',
    'classification_table',
    'expected_table1',
    'singular_primes',
    'subsystem_torsion',
    'table1_rows',
    'torsion_primes',
    'torsion_primes_by_coefficients',
    'SpringerExistence',
    'springer_exists',
    'AlcoveVertex',
    'alcove_vertex_subsystems',
    'alcove_suite',
    'subsystems_suite',
    'table1_suite',
]
