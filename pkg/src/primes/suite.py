"""
Prime-classification checks for the verification reports.
"""

import logging
from typing import List, Sequence, Tuple

from src.reporting import CheckRecord, CheckRecorder
from src.rootdata import root_system
from src.utilities.environment_manager import get_environment_manager

from .alcove import alcove_vertex_subsystems
from .classify import (
    TABLE1_TYPES,
    bad_primes,
    bad_primes_by_coefficients,
    table1_rows,
    torsion_primes,
    torsion_primes_by_coefficients,
)
from .datum import RootDatum
from .existence import springer_exists
from .subsystems import closed_subsystems, is_closed

logger = logging.getLogger(__name__)

# (type, isogeny, p, expected existence)
EXISTENCE_CASES: Tuple[Tuple[str, str, int, bool], ...] = (
    ("A2", "sc", 3, True),
    ("A2", "adj", 3, False),
    ("D4", "sc", 2, False),
    ("E8", "adj", 7, True),
    ("G2", "sc", 3, False),
    ("C3", "sc", 3, True),
)


def table1_suite(labels: Sequence[str] = TABLE1_TYPES, timings: bool = False) -> List[CheckRecord]:
    """Bad, torsion and singular primes against the reference table, plus existence decisions."""
    rec = CheckRecorder("table1", timings)
    for row in table1_rows(labels):
        rec.record(f"table1.{row.root_type}", "bad, torsion and singular primes match the reference table",
                   row.matches, bad=row.bad, torsion=row.torsion, singular=row.singular, expected=row.expected)
        rec.record(f"table1.torsion-in-bad.{row.root_type}", "torsion primes are bad primes",
                   row.torsion_in_bad)
    for label, isogeny, p, expected in EXISTENCE_CASES:
        decision = springer_exists(RootDatum.from_descriptor(root_system(label), isogeny), p)
        rec.record(f"table1.exists.{label}.{isogeny}.p{p}",
                   "a Springer isomorphism exists iff p is good and does not divide |pi_1|",
                   decision.exists == expected, exists=decision.exists, reasons=decision.reasons)
    return rec.checks


def subsystems_suite(labels: Sequence[str] = TABLE1_TYPES, timings: bool = False) -> List[CheckRecord]:
    """
    Subsystem torsion against highest-root coefficients.

    Systems within the brute-force oracle limit are also enumerated both ways,
    and the extended-diagram list is checked for closure.
    """
    rec = CheckRecorder("subsystems", timings)
    limit = get_environment_manager().get_var_as_int("SPRINGER_ORACLE_MAX_POSITIVE_ROOTS", 12)
    for label in labels:
        rs = root_system(label)
        bad, torsion = bad_primes(rs), torsion_primes(rs)
        rec.record(f"subsystems.bad.{label}", "bad primes from subsystem torsion equal primes of the n_i",
                   bad == bad_primes_by_coefficients(rs), subsystem=bad, coefficients=bad_primes_by_coefficients(rs))
        rec.record(f"subsystems.torsion.{label}", "torsion primes from coroot subsystems equal primes of the n_i^vee",
                   torsion == torsion_primes_by_coefficients(rs), subsystem=torsion,
                   coefficients=torsion_primes_by_coefficients(rs))
        if len(rs.positive_roots) <= limit:
            extended = closed_subsystems(rs, method="extended")
            rec.record(f"subsystems.oracle.{label}", "extended-diagram and brute-force enumerations give the same primes",
                       bad_primes(rs, "extended") == bad_primes(rs, "bruteforce")
                       and torsion_primes(rs, "extended") == torsion_primes(rs, "bruteforce"),
                       extended=len(extended), bruteforce=len(closed_subsystems(rs, method="bruteforce")))
            rec.record(f"subsystems.closed.{label}", "every enumerated subsystem is closed",
                       all(is_closed(rs, sub) for sub in extended))
    logger.info("subsystems suite: %d checks", len(rec.checks))
    return rec.checks


def alcove_suite(labels: Sequence[str] = TABLE1_TYPES, timings: bool = False) -> List[CheckRecord]:
    """Every alcove vertex: cyclic quotient of order n_i, coroot quotient of order n_i^vee dividing n_i."""
    rec = CheckRecorder("alcove", timings)
    for label in labels:
        for vertex in alcove_vertex_subsystems(root_system(label)):
            rec.record(f"alcove.{label}.v{vertex.vertex}",
                       "ZPhi/ZPhi_i is cyclic of order n_i and ZPhi^vee/ZPhi_i^vee has order n_i^vee dividing n_i",
                       vertex.passed, **vertex.model_dump())
    return rec.checks
