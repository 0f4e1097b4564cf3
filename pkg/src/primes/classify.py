"""
Bad, torsion and singular primes.

Bad and torsion primes are computed from the torsion of ZPhi/ZSigma and
ZPhi^vee/ZSigma^vee over the enumerated closed subsystems Sigma, and checked
against the highest-root and dual highest-root coefficients. Singular primes
divide the determinant of the Cartan matrix.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel
from sympy import primefactors

from src.intlinalg import IntegerMatrix, quotient_torsion, torsion_primes_of
from src.rootdata import (
    RootSystem,
    dual_highest_root_coeffs,
    highest_root_coeffs,
    root_system,
)

from .datum import RootDatum, center_invariants, fundamental_group_invariants
from .subsystems import ClosedSubsystem, closed_subsystems

logger = logging.getLogger(__name__)

DEFAULT_PRIMES: Tuple[int, ...] = (2, 3, 5, 7)

TABLE1_TYPES: Tuple[str, ...] = (
    "A1", "A2", "A3", "A4", "A5", "A6", "A7",
    "B2", "B3", "B4", "B5",
    "C3", "C4", "C5",
    "D4", "D5", "D6",
    "E6", "E7", "E8", "F4", "G2",
)


class PrimeReport(BaseModel):
    """Prime classification of a root system, with the invariants of one datum."""

    root_type: str
    isogeny: str = "sc"
    bad: List[int]
    torsion: List[int]
    singular: List[int]
    good: Dict[str, bool]
    very_good: Dict[str, bool]
    fundamental_group_invariants: List[int]
    center_invariants: List[int]
    torus_rank: int = 0
    highest_root: List[int]
    dual_highest_root: List[int]
    subsystem_count: int
    coefficient_check: bool
    torsion_in_bad: bool


def subsystem_torsion(rs: RootSystem, sub: ClosedSubsystem) -> Tuple[List[int], List[int]]:
    """
    Torsion invariant factors of ZPhi/ZSigma and of ZPhi^vee/ZSigma^vee.

    Both lattices are written in the simple (co)root basis, where the ambient
    lattice is the standard one.
    """
    if not sub.base:
        return [], []
    ambient = IntegerMatrix.identity(rs.rank)
    roots = IntegerMatrix.from_columns(sub.base)
    coroots = IntegerMatrix.from_columns([rs.coroot_coefficients(b) for b in sub.base])
    return quotient_torsion(ambient, roots), quotient_torsion(ambient, coroots)


@lru_cache(maxsize=None)
def _subsystem_primes(rs: RootSystem, method: str) -> Tuple[Tuple[int, ...], Tuple[int, ...], int]:
    bad, torsion = set(), set()
    subsystems = closed_subsystems(rs, method=method)
    for sub in subsystems:
        root_part, coroot_part = subsystem_torsion(rs, sub)
        bad.update(torsion_primes_of(tuple(root_part)))
        torsion.update(torsion_primes_of(tuple(coroot_part)))
    logger.debug("%s: %d subsystems, bad %s, torsion %s", rs.label, len(subsystems),
                 sorted(bad), sorted(torsion))
    return tuple(sorted(bad)), tuple(sorted(torsion)), len(subsystems)


def bad_primes(rs: RootSystem, method: str = "auto") -> List[int]:
    """Primes p with p-torsion in ZPhi/ZSigma for some enumerated closed subsystem Sigma."""
    return list(_subsystem_primes(rs, method)[0])


def torsion_primes(rs: RootSystem, method: str = "auto") -> List[int]:
    """Primes p with p-torsion in ZPhi^vee/ZSigma^vee for some enumerated closed subsystem Sigma."""
    return list(_subsystem_primes(rs, method)[1])


def bad_primes_by_coefficients(rs: RootSystem) -> List[int]:
    """Primes dividing some highest-root coefficient n_i."""
    return torsion_primes_of(highest_root_coeffs(rs))


def torsion_primes_by_coefficients(rs: RootSystem) -> List[int]:
    """Primes dividing some dual coefficient n_i^vee."""
    return torsion_primes_of(dual_highest_root_coeffs(rs))


def singular_primes(rs: RootSystem) -> List[int]:
    """Primes dividing |P/ZPhi| = det of the Cartan matrix."""
    return sorted(int(p) for p in primefactors(rs.determinant))


def classification_table(rs: RootSystem,
                         datum: Optional[RootDatum] = None,
                         primes: Sequence[int] = DEFAULT_PRIMES,
                         method: str = "auto") -> PrimeReport:
    """
    Assemble the prime classification of rs.

    Args:
        rs: The root system.
        datum: Root datum for the group invariants; simply connected by default.
        primes: Small primes for which good / very good flags are reported.
        method: Subsystem enumeration method, see closed_subsystems.

    Returns:
        The PrimeReport. good[p] means p is not bad; very_good[p] means good
        and not singular.
    """
    datum = datum if datum is not None else RootDatum.simply_connected(rs)
    bad, torsion, count = _subsystem_primes(rs, method)
    singular = singular_primes(rs)
    by_coefficients = (list(bad) == bad_primes_by_coefficients(rs)
                       and list(torsion) == torsion_primes_by_coefficients(rs))
    if not by_coefficients:
        logger.warning("%s: subsystem primes disagree with highest-root coefficients", rs.label)
    good = {str(p): p not in bad for p in primes}
    return PrimeReport(
        root_type=rs.label,
        isogeny=datum.isogeny,
        bad=list(bad),
        torsion=list(torsion),
        singular=singular,
        good=good,
        very_good={str(p): good[str(p)] and p not in singular for p in primes},
        fundamental_group_invariants=fundamental_group_invariants(datum),
        center_invariants=center_invariants(datum),
        torus_rank=datum.torus_rank,
        highest_root=list(highest_root_coeffs(rs)),
        dual_highest_root=list(dual_highest_root_coeffs(rs)),
        subsystem_count=count,
        coefficient_check=by_coefficients,
        torsion_in_bad=set(torsion) <= set(bad),
    )


def expected_table1(label: str) -> Dict[str, List[int]]:
    """
    Reference bad / torsion / singular primes for an irreducible type.

    A_n: none, none, p | n+1. B_n: 2, 2 for n >= 3, 2. C_n: 2, none, 2.
    D_n: 2, 2, 2. E6: 2,3 / 2,3 / 3. E7: 2,3 / 2,3 / 2. E8: 2,3,5 / 2,3,5 / none.
    F4: 2,3 / 2,3 / none. G2: 2,3 / 2 / none.
    """
    rs = root_system(label)
    family, rank = rs.family, rs.rank
    if family == "A":
        return {"bad": [], "torsion": [], "singular": sorted(int(p) for p in primefactors(rank + 1))}
    if family == "B":
        return {"bad": [2], "torsion": [2] if rank >= 3 else [], "singular": [2]}
    if family == "C":
        return {"bad": [2], "torsion": [], "singular": [2]}
    if family == "D":
        return {"bad": [2], "torsion": [2], "singular": [2]}
    exceptional = {
        "E6": {"bad": [2, 3], "torsion": [2, 3], "singular": [3]},
        "E7": {"bad": [2, 3], "torsion": [2, 3], "singular": [2]},
        "E8": {"bad": [2, 3, 5], "torsion": [2, 3, 5], "singular": []},
        "F4": {"bad": [2, 3], "torsion": [2, 3], "singular": []},
        "G2": {"bad": [2, 3], "torsion": [2], "singular": []},
    }
    return exceptional[rs.label]


class Table1Row(BaseModel):
    root_type: str
    bad: List[int]
    torsion: List[int]
    singular: List[int]
    expected: Dict[str, List[int]]
    matches: bool
    coefficient_check: bool
    torsion_in_bad: bool


def table1_rows(labels: Sequence[str] = TABLE1_TYPES) -> List[Table1Row]:
    """Classify each representative type and compare with the reference table."""
    rows = []
    for label in labels:
        report = classification_table(root_system(label))
        expected = expected_table1(label)
        matches = (report.bad == expected["bad"] and report.torsion == expected["torsion"]
                   and report.singular == expected["singular"])
        rows.append(Table1Row(
            root_type=label,
            bad=report.bad,
            torsion=report.torsion,
            singular=report.singular,
            expected=expected,
            matches=matches,
            coefficient_check=report.coefficient_check,
            torsion_in_bad=report.torsion_in_bad,
        ))
        logger.debug("table row %s: matches=%s", label, matches)
    return rows
