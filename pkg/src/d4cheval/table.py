"""
Structure constants of Lie U for type D4.

Roots are coefficient vectors (c1, c2, c3, c4) over the simple roots, alpha_2
being the central node. The commutator relations

    (x_alpha(u), x_beta(v)) = x_{alpha+beta}(uv)

are listed in a fixed orientation with constant +1; the table is their
antisymmetrization, and every other pair of positive roots commutes.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Tuple

from src.rootdata import build_root_system
from src.utilities.exceptions import StructureConstantError

logger = logging.getLogger(__name__)

Root = Tuple[int, int, int, int]

A1: Root = (1, 0, 0, 0)
A2: Root = (0, 1, 0, 0)
A3: Root = (0, 0, 1, 0)
A4: Root = (0, 0, 0, 1)
HIGHEST: Root = (1, 2, 1, 1)

POSITIVE_ROOTS: Tuple[Root, ...] = (
    A1, A3, A4, A2,
    (1, 1, 0, 0), (0, 1, 1, 0), (0, 1, 0, 1),
    (1, 1, 1, 0), (1, 1, 0, 1), (0, 1, 1, 1),
    (1, 1, 1, 1),
    HIGHEST,
)

RELATIONS: Tuple[Tuple[Root, Root], ...] = (
    (A1, A2),
    (A2, A3),
    (A1, (0, 1, 1, 0)),
    ((1, 1, 0, 0), A3),
    (A2, A4),
    (A1, (0, 1, 0, 1)),
    (A1, (0, 1, 1, 1)),
    ((1, 1, 0, 0), A4),
    (A2, (1, 1, 1, 1)),
    (A3, (1, 1, 0, 1)),
    (A3, (0, 1, 0, 1)),
    (A4, (0, 1, 1, 0)),
    (A4, (1, 1, 1, 0)),
    ((0, 1, 1, 1), (1, 1, 0, 0)),
    ((0, 1, 1, 0), (1, 1, 0, 1)),
    ((0, 1, 0, 1), (1, 1, 1, 0)),
)


def _add(alpha: Root, beta: Root) -> Root:
    return tuple(a + b for a, b in zip(alpha, beta))  # type: ignore[return-value]


def root_label(alpha: Root) -> str:
    """'a1+2a2+a3+a4' style name of a positive root."""
    terms = []
    for i, c in enumerate(alpha):
        if c:
            terms.append(f"{'' if c == 1 else c}a{i + 1}")
    return "+".join(terms)


@dataclass(frozen=True)
class D4Table:
    """The antisymmetrized constants, indexed by position in POSITIVE_ROOTS."""

    roots: Tuple[Root, ...]
    constants: Dict[Tuple[int, int], Tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.roots)

    def index(self, alpha: Root) -> int:
        return self.roots.index(tuple(alpha))

    def bracket_index(self, i: int, j: int) -> Optional[Tuple[int, int]]:
        """(k, N) with [X_i, X_j] = N X_k, or None when the bracket vanishes."""
        return self.constants.get((i, j))

    def constant(self, alpha: Root, beta: Root) -> int:
        entry = self.constants.get((self.index(alpha), self.index(beta)))
        return 0 if entry is None else entry[1]

    def relation_count(self) -> int:
        return len(self.constants) // 2


@lru_cache(maxsize=None)
def d4_structure_constants() -> D4Table:
    """
    The commutator table of the positive unipotent radical of D4.

    Raises:
        StructureConstantError: If the root list disagrees with the D4 root
            system, a relation does not add up to a root, or some pair of
            positive roots summing to a root is missing from the relations.
    """
    rs = build_root_system("D", 4)
    if sorted(rs.positive_roots) != sorted(POSITIVE_ROOTS):
        raise StructureConstantError("positive root list is not the D4 positive system")
    index = {alpha: i for i, alpha in enumerate(POSITIVE_ROOTS)}

    constants: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for alpha, beta in RELATIONS:
        total = _add(alpha, beta)
        if total not in index:
            raise StructureConstantError(f"{root_label(alpha)} + {root_label(beta)} is not a root")
        i, j, k = index[alpha], index[beta], index[total]
        if (i, j) in constants or (j, i) in constants:
            raise StructureConstantError(f"relation ({root_label(alpha)}, {root_label(beta)}) listed twice")
        constants[(i, j)] = (k, 1)
        constants[(j, i)] = (k, -1)

    for i, alpha in enumerate(POSITIVE_ROOTS):
        for j, beta in enumerate(POSITIVE_ROOTS):
            if _add(alpha, beta) in index and (i, j) not in constants:
                raise StructureConstantError(
                    f"no relation for ({root_label(alpha)}, {root_label(beta)})")
    logger.debug("D4 table: %d relations over %d positive roots", len(RELATIONS), len(POSITIVE_ROOTS))
    return D4Table(roots=POSITIVE_ROOTS, constants=constants)
