"""
Quotients of lattices.

A lattice is given by a basis written as the columns of an IntegerMatrix. A
sublattice is given by generators (columns) in the same ambient coordinates;
they are rewritten in the lattice basis by exact rational solving and the
torsion of the quotient is read off the Smith normal form.
"""

import logging
from typing import List, Tuple

from sympy import Matrix, Integer

from src.utilities.exceptions import InputError, NonIntegralError

from .matrix import IntegerMatrix
from .smith import smith_normal_form

logger = logging.getLogger(__name__)


def solve_integral(basis: IntegerMatrix, vectors: IntegerMatrix) -> IntegerMatrix:
    """
    Express each column of vectors in the basis given by the columns of basis.

    Args:
        basis: Ambient basis, columns linearly independent.
        vectors: Columns to rewrite, same number of rows as basis.

    Returns:
        The coordinate matrix C with basis·C == vectors.

    Raises:
        InputError: If the basis columns are dependent or the row counts differ.
        NonIntegralError: If some column is outside the rational span or has a
            non-integral coordinate.
    """
    if basis.shape[0] != vectors.shape[0]:
        raise InputError("basis and vectors must live in the same ambient space")
    B = Matrix(basis.to_list())
    if B.rank() != basis.shape[1]:
        raise InputError("ambient basis columns are linearly dependent")

    coordinates: List[List[int]] = []
    for column in vectors.columns:
        try:
            solution, params = B.gauss_jordan_solve(Matrix(column))
        except ValueError:
            raise NonIntegralError(f"vector {list(column)} is not in the span of the ambient basis")
        if params.shape[0]:
            raise InputError("ambient basis does not determine unique coordinates")
        if any(not isinstance(x, Integer) for x in solution):
            raise NonIntegralError(
                f"vector {list(column)} has non-integral coordinates {list(solution)}"
            )
        coordinates.append([int(x) for x in solution])
    return IntegerMatrix.from_columns(coordinates)


def quotient_invariants(ambient_basis: IntegerMatrix,
                        sub_generators: IntegerMatrix) -> Tuple[Tuple[int, ...], int]:
    """
    Torsion invariant factors and free rank of span(ambient) / span(sub).

    Returns:
        (torsion factors > 1, free rank of the quotient)
    """
    coords = solve_integral(ambient_basis, sub_generators)
    snf = smith_normal_form(coords)
    free_rank = ambient_basis.shape[1] - snf.rank
    logger.debug("quotient: torsion %s, free rank %d", snf.torsion, free_rank)
    return snf.torsion, free_rank


def quotient_torsion(ambient_basis: IntegerMatrix, sub_generators: IntegerMatrix) -> List[int]:
    """
    Invariant factors of the torsion subgroup of L/M.

    Args:
        ambient_basis: Basis of L as columns.
        sub_generators: Generators of M as columns, in the same coordinates.

    Returns:
        The invariant factors greater than one; empty when L/M is torsion-free.

    Raises:
        NonIntegralError: If a generator is not integral in the basis of L.
    """
    torsion, _ = quotient_invariants(ambient_basis, sub_generators)
    return list(torsion)
