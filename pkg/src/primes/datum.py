"""
Semisimple root data: fundamental group and centre invariants.

A datum is fixed by a lattice X with ZPhi <= X <= P. Weights are written in
fundamental-weight coordinates, where P is the standard lattice and the simple
root alpha_j is column j of the Cartan matrix. X is ZPhi plus the span of
extra generators, so "sc" adds every omega_i and "adj" adds nothing.

The fundamental group X_*/ZPhi^vee is the Pontryagin dual of P/X, so both
have the same invariant factors. The centre of the group is Cartier dual to
X/ZPhi.
"""

import logging
import re
from dataclasses import dataclass
from math import prod
from typing import List, Tuple

from src.intlinalg import IntegerMatrix, quotient_torsion, smith_normal_form
from src.rootdata import RootSystem
from src.utilities.exceptions import InputError

logger = logging.getLogger(__name__)

_GENERATORS_RE = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*(\s*;\s*-?\d+(\s*,\s*-?\d+)*)*\s*$")


@dataclass(frozen=True)
class RootDatum:
    """
    A root datum with character lattice ZPhi + span(generators).

    Attributes:
        root_system: The underlying root system.
        generators: Extra weights in fundamental-weight coordinates.
        isogeny: Descriptor, "sc", "adj" or the generator list as given.
        torus_rank: Rank of a central torus padding the derived group.
    """

    root_system: RootSystem
    generators: Tuple[Tuple[int, ...], ...] = ()
    isogeny: str = "custom"
    torus_rank: int = 0

    def __post_init__(self) -> None:
        for g in self.generators:
            if len(g) != self.root_system.rank:
                raise InputError(
                    f"generator {list(g)} must have {self.root_system.rank} weight coordinates"
                )
        if self.torus_rank < 0:
            raise InputError("torus rank must be non-negative")

    @classmethod
    def simply_connected(cls, rs: RootSystem, torus_rank: int = 0) -> "RootDatum":
        unit = tuple(tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank))
        return cls(rs, unit, "sc", torus_rank)

    @classmethod
    def adjoint(cls, rs: RootSystem, torus_rank: int = 0) -> "RootDatum":
        return cls(rs, (), "adj", torus_rank)

    @classmethod
    def from_descriptor(cls, rs: RootSystem, descriptor: str, torus_rank: int = 0) -> "RootDatum":
        """
        Build a datum from "sc", "adj" or generators such as "1,0,1" or "1,0,0;0,0,1".

        Raises:
            InputError: For an unparseable descriptor or wrong-length generators.
        """
        key = descriptor.strip().lower()
        if key in ("sc", "simply-connected", "simply_connected"):
            return cls.simply_connected(rs, torus_rank)
        if key in ("adj", "adjoint"):
            return cls.adjoint(rs, torus_rank)
        if not _GENERATORS_RE.match(descriptor):
            raise InputError(f"cannot parse isogeny descriptor {descriptor!r}; use sc, adj or e.g. '1,0,1'")
        gens = tuple(tuple(int(x) for x in part.split(",")) for part in descriptor.split(";"))
        return cls(rs, gens, descriptor.strip(), torus_rank)

    def lattice_generators(self) -> IntegerMatrix:
        """Columns spanning X: the simple roots followed by the extra generators."""
        rs = self.root_system
        roots = [tuple(rs.cartan[i][j] for i in range(rs.rank)) for j in range(rs.rank)]
        return IntegerMatrix.from_columns(roots + list(self.generators))

    def lattice_basis(self) -> IntegerMatrix:
        """A basis of X, read off the column transform of a Smith form of its generators."""
        A = self.lattice_generators()
        snf = smith_normal_form(A)
        AV = A @ snf.V
        return IntegerMatrix.from_columns(AV.columns[:snf.rank])


def fundamental_group_invariants(rd: RootDatum) -> List[int]:
    """
    Invariant factors of (X_*/ZPhi^vee)_tors.

    Computed as the invariants of P/X, its Pontryagin dual. Empty for a
    simply connected datum.
    """
    rs = rd.root_system
    result = quotient_torsion(IntegerMatrix.identity(rs.rank), rd.lattice_generators())
    logger.debug("pi_1 of %s (%s): %s", rs.label, rd.isogeny, result)
    return result


def center_invariants(rd: RootDatum) -> List[int]:
    """Invariant factors of X/ZPhi, the character group of the centre."""
    rs = rd.root_system
    roots = IntegerMatrix.from_rows(rs.cartan)
    return quotient_torsion(rd.lattice_basis(), roots)


def fundamental_group_order(rd: RootDatum) -> int:
    return prod(fundamental_group_invariants(rd))
