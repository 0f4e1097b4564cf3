"""
Exact integer matrices.

IntegerMatrix is an immutable rows-of-ints value with just the arithmetic the
lattice code needs. Entries are Python ints, so there is no overflow.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from src.utilities.exceptions import InputError


@dataclass(frozen=True)
class IntegerMatrix:
    """An immutable integer matrix stored row-major."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows or not self.rows[0]:
            raise InputError("integer matrices must have positive dimensions")
        width = len(self.rows[0])
        if any(len(row) != width for row in self.rows):
            raise InputError("integer matrix rows have different lengths")
        if any(not isinstance(x, int) for row in self.rows for x in row):
            raise InputError("integer matrix entries must be ints")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntegerMatrix":
        """Build a matrix from any nested iterable of ints."""
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntegerMatrix":
        """Build a matrix whose columns are the given vectors."""
        return cls.from_rows(zip(*columns))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def columns(self) -> List[Tuple[int, ...]]:
        return [tuple(col) for col in zip(*self.rows)]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix.from_rows(zip(*self.rows))

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.shape[1] != other.shape[0]:
            raise InputError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns
        return IntegerMatrix.from_rows(
            [sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows
        )

    def to_list(self) -> List[List[int]]:
        return [list(row) for row in self.rows]
