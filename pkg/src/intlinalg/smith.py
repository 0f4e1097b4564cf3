"""
Smith normal form over the integers.

The reduction pivots on the entry of minimal absolute value, clears the pivot
row and column by Euclidean steps and repairs divisibility by folding an
offending row into the pivot row. Unimodular row and column transforms are
accumulated alongside, so callers get D = U·M·V back.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from sympy import primefactors

from .matrix import IntegerMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmithResult:
    """
    Outcome of a Smith normal form computation.

    Attributes:
        invariant_factors: The nonzero diagonal entries d1 | d2 | ... | dk, all positive.
        rank: Number of nonzero invariant factors.
        U: Unimodular row transform.
        V: Unimodular column transform.
        D: The diagonal form, D = U·M·V.
    """

    invariant_factors: Tuple[int, ...]
    rank: int
    U: IntegerMatrix
    V: IntegerMatrix
    D: IntegerMatrix

    @property
    def torsion(self) -> Tuple[int, ...]:
        """Invariant factors greater than one."""
        return tuple(d for d in self.invariant_factors if d > 1)

    def check(self, M: IntegerMatrix) -> bool:
        """Return True if U·M·V reproduces D."""
        return self.U @ M @ self.V == self.D


def _identity(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


class _Reducer:
    """Mutable working state of one reduction."""

    def __init__(self, M: IntegerMatrix) -> None:
        self.A = M.to_list()
        self.m, self.n = M.shape
        self.U = _identity(self.m)
        self.V = _identity(self.n)

    def swap_rows(self, i: int, j: int) -> None:
        if i != j:
            self.A[i], self.A[j] = self.A[j], self.A[i]
            self.U[i], self.U[j] = self.U[j], self.U[i]

    def swap_cols(self, i: int, j: int) -> None:
        if i != j:
            for row in self.A:
                row[i], row[j] = row[j], row[i]
            for row in self.V:
                row[i], row[j] = row[j], row[i]

    def add_row(self, target: int, source: int, factor: int) -> None:
        """row[target] += factor * row[source]"""
        for mat in (self.A, self.U):
            src = mat[source]
            mat[target] = [a + factor * b for a, b in zip(mat[target], src)]

    def add_col(self, target: int, source: int, factor: int) -> None:
        """col[target] += factor * col[source]"""
        for mat in (self.A, self.V):
            for row in mat:
                row[target] += factor * row[source]

    def negate_row(self, i: int) -> None:
        self.A[i] = [-a for a in self.A[i]]
        self.U[i] = [-a for a in self.U[i]]

    def min_entry(self, t: int, cross_only: bool) -> Optional[Tuple[int, int]]:
        """Position of the nonzero entry of least absolute value at or below/right of (t, t)."""
        best: Optional[Tuple[int, int, int]] = None
        if cross_only:
            cells = [(i, t) for i in range(t, self.m)] + [(t, j) for j in range(t + 1, self.n)]
        else:
            cells = [(i, j) for i in range(t, self.m) for j in range(t, self.n)]
        for i, j in cells:
            value = abs(self.A[i][j])
            if value and (best is None or value < best[0]):
                best = (value, i, j)
        return None if best is None else (best[1], best[2])

    def move_to_pivot(self, t: int, pos: Tuple[int, int]) -> None:
        self.swap_rows(t, pos[0])
        self.swap_cols(t, pos[1])

    def clear_cross(self, t: int) -> bool:
        """Euclidean step on row t and column t; True if both are now clear."""
        pivot = self.A[t][t]
        clear = True
        for i in range(t + 1, self.m):
            q = self.A[i][t] // pivot
            if q:
                self.add_row(i, t, -q)
            if self.A[i][t]:
                clear = False
        for j in range(t + 1, self.n):
            q = self.A[t][j] // pivot
            if q:
                self.add_col(j, t, -q)
            if self.A[t][j]:
                clear = False
        return clear

    def first_non_divisible_row(self, t: int) -> Optional[int]:
        pivot = self.A[t][t]
        for i in range(t + 1, self.m):
            for j in range(t + 1, self.n):
                if self.A[i][j] % pivot:
                    return i
        return None

    def run(self) -> int:
        t = 0
        while t < min(self.m, self.n):
            pos = self.min_entry(t, cross_only=False)
            if pos is None:
                break
            self.move_to_pivot(t, pos)
            while True:
                if not self.clear_cross(t):
                    self.move_to_pivot(t, self.min_entry(t, cross_only=True))
                    continue
                bad_row = self.first_non_divisible_row(t)
                if bad_row is None:
                    break
                self.add_row(t, bad_row, 1)
            if self.A[t][t] < 0:
                self.negate_row(t)
            t += 1
        return t


def smith_normal_form(M: IntegerMatrix) -> SmithResult:
    """
    Compute the Smith normal form of an integer matrix.

    Args:
        M: The input matrix (positive dimensions).

    Returns:
        A SmithResult whose invariant factors form a divisibility chain and
        whose transforms satisfy D = U·M·V.
    """
    reducer = _Reducer(M)
    rank = reducer.run()
    factors = tuple(reducer.A[i][i] for i in range(rank))
    logger.debug("SNF of %sx%s matrix: rank %d, factors %s", *M.shape, rank, factors)
    return SmithResult(
        invariant_factors=factors,
        rank=rank,
        U=IntegerMatrix.from_rows(reducer.U),
        V=IntegerMatrix.from_rows(reducer.V),
        D=IntegerMatrix.from_rows(reducer.A),
    )


def torsion_primes_of(factors: Tuple[int, ...]) -> List[int]:
    """Sorted primes dividing some invariant factor."""
    primes = set()
    for d in factors:
        primes.update(primefactors(d))
    return sorted(primes)
