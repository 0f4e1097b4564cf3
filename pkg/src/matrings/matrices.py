"""
Matrices over finite rings.

Matrices are numpy arrays of element codes with shape (..., n, n); every
operation broadcasts over leading batch axes, so enumerations run as a few
table lookups per entry. GroupElement and LieElement wrap a single matrix
with a flavor and enforce its invariants.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from src.utilities.exceptions import FlavorError, MatrixLiteralError, RingSpecError

from .rings import FiniteRing

logger = logging.getLogger(__name__)

GROUP_FLAVORS = ("GL", "SL", "PGL")
LIE_FLAVORS = ("gl", "sl", "pgl")


# -- batched arithmetic -----------------------------------------------------------


def identity(R: FiniteRing, n: int) -> np.ndarray:
    return scalar(R, R.one, n)


def scalar(R: FiniteRing, c: int, n: int) -> np.ndarray:
    M = np.zeros((n, n), dtype=np.int64)
    np.fill_diagonal(M, c)
    return M


def mat_add(R: FiniteRing, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return R.add_table[A, B]


def mat_sub(R: FiniteRing, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return R.add_table[A, R.neg_table[B]]


def mat_scale(R: FiniteRing, c, A: np.ndarray) -> np.ndarray:
    """c·A; c is a code or an array of codes over the batch axes."""
    c = np.asarray(c, dtype=np.int64)
    return R.mul_table[c[..., None, None], A]


def mat_mul(R: FiniteRing, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    acc = R.mul_table[A[..., :, 0, None], B[..., None, 0, :]]
    for k in range(1, A.shape[-1]):
        acc = R.add_table[acc, R.mul_table[A[..., :, k, None], B[..., None, k, :]]]
    return acc


def mat_pow(R: FiniteRing, A: np.ndarray, e: int) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[-1]
    result = np.broadcast_to(identity(R, n), A.shape).copy()
    base = A
    while e:
        if e & 1:
            result = mat_mul(R, result, base)
        e >>= 1
        if e:
            base = mat_mul(R, base, base)
    return result


def add_scalar(R: FiniteRing, A: np.ndarray, c) -> np.ndarray:
    """A + c·I, with c a code or an array of codes over the batch axes."""
    A = np.array(A, dtype=np.int64, copy=True)
    c = np.asarray(c, dtype=np.int64)
    for i in range(A.shape[-1]):
        A[..., i, i] = R.add_table[A[..., i, i], c]
    return A


def trace(R: FiniteRing, A: np.ndarray) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    total = A[..., 0, 0]
    for i in range(1, A.shape[-1]):
        total = R.add_table[total, A[..., i, i]]
    return total


def charpoly(R: FiniteRing, A: np.ndarray) -> np.ndarray:
    """
    Coefficients [1, c_1, ..., c_n] of det(t·I - A), highest degree first.

    Berkowitz's division-free recursion, so it is valid over any commutative
    ring. Batched over leading axes.
    """
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[-1]
    batch = A.shape[:-2]
    ones = np.full(batch, R.one, dtype=np.int64)
    zeros = np.zeros(batch, dtype=np.int64)
    poly = [ones, R.neg_table[A[..., n - 1, n - 1]]]
    for r in range(n - 2, -1, -1):
        m = n - 1 - r
        row = A[..., r, None, r + 1:]
        sub = A[..., r + 1:, r + 1:]
        w = A[..., r + 1:, r, None]
        toeplitz = [ones, R.neg_table[A[..., r, r]]]
        for _ in range(m):
            toeplitz.append(R.neg_table[mat_mul(R, row, w)[..., 0, 0]])
            w = mat_mul(R, sub, w)
        new = []
        for i in range(m + 2):
            acc = zeros
            for j in range(max(0, i - m - 1), min(i, m) + 1):
                acc = R.add_table[acc, R.mul_table[toeplitz[i - j], poly[j]]]
            new.append(acc)
        poly = new
    return np.stack(poly, axis=-1)


def det(R: FiniteRing, A: np.ndarray) -> np.ndarray:
    n = np.asarray(A).shape[-1]
    c_n = charpoly(R, A)[..., n]
    return R.neg_table[c_n] if n % 2 else c_n


def inverse(R: FiniteRing, A: np.ndarray):
    """
    Batched inverse by Cayley-Hamilton.

    Returns:
        (inverses, invertible mask); entries of non-invertible matrices are
        meaningless.
    """
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[-1]
    poly = charpoly(R, A)
    B = np.broadcast_to(identity(R, n), A.shape).copy()
    for k in range(1, n):
        B = add_scalar(R, mat_mul(R, B, A), poly[..., k])
    c_n = poly[..., n]
    mask = R.unit_mask[c_n]
    factor = R.neg_table[np.where(mask, R.inv_table[c_n], 0)]
    return mat_scale(R, factor, B), mask


def pgl_canonical(R: FiniteRing, M: np.ndarray) -> np.ndarray:
    """
    Canonical representative modulo unit scalars.

    On each local factor of R, the first unit entry in row-major order is
    scaled to 1. Matrices with no unit entry in a factor are left alone there.
    """
    M = np.asarray(M, dtype=np.int64)
    shape = M.shape
    flat = M.reshape(-1, shape[-2] * shape[-1])
    rows = np.arange(flat.shape[0])
    parts = []
    for (ring, _), comp in zip(R.components, R.split(flat)):
        unit = ring.unit_mask[comp]
        pivot = comp[rows, unit.argmax(axis=1)]
        factor = np.where(unit.any(axis=1), ring.inv_table[pivot], ring.one)
        parts.append(ring.mul_table[factor[:, None], comp])
    return R.join(parts).reshape(shape)


def all_matrices(R: FiniteRing, n: int, start: int = 0, stop: Optional[int] = None) -> np.ndarray:
    """Matrices number start..stop-1 in the base-|R| enumeration of M_n(R)."""
    total = R.order ** (n * n)
    stop = total if stop is None else min(stop, total)
    index = np.arange(start, stop, dtype=np.int64)
    place = R.order ** np.arange(n * n, dtype=np.int64)
    return ((index[:, None] // place[None, :]) % R.order).reshape(-1, n, n)


def random_matrices(R: FiniteRing, n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    return rng.integers(0, R.order, size=(count, n, n), dtype=np.int64)


def random_group_elements(R: FiniteRing, n: int, count: int, rng: np.random.Generator,
                          flavor: str = "SL") -> np.ndarray:
    """Uniform samples of GL_n(R) by rejection; SL samples rescale the first row."""
    found: List[np.ndarray] = []
    have = 0
    while have < count:
        batch = random_matrices(R, n, max(4 * count, 16), rng)
        keep = batch[R.unit_mask[det(R, batch)]]
        found.append(keep)
        have += len(keep)
    G = np.concatenate(found)[:count]
    if flavor == "SL":
        d = det(R, G)
        G[:, 0, :] = R.mul_table[R.inv_table[d][:, None], G[:, 0, :]]
    elif flavor == "PGL":
        G = pgl_canonical(R, G)
    return G


# -- literals ---------------------------------------------------------------------


def _split_top(text: str, sep: str) -> List[str]:
    parts, depth, current = [], 0, []
    for ch in text:
        if ch in "(<":
            depth += 1
        elif ch in ")>":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return parts


def parse_matrix(R: FiniteRing, text: str) -> np.ndarray:
    """
    Parse "1,1;0,1": rows separated by ';', entries by ','.

    Entries are element literals of R (see FiniteRing.parse_element).

    Raises:
        MatrixLiteralError: For ragged or non-square input, or bad entries.
    """
    rows = [_split_top(row, ",") for row in _split_top(text.strip(), ";")]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise MatrixLiteralError(f"matrix literal {text!r} must be square")
    try:
        return np.array([[R.parse_element(x) for x in row] for row in rows], dtype=np.int64)
    except RingSpecError as e:
        raise MatrixLiteralError(f"bad entry in {text!r}: {e}")


def format_matrix(R: FiniteRing, M: np.ndarray) -> str:
    return ";".join(",".join(R.format_element(x) for x in row) for row in np.asarray(M))


# -- wrapped elements ------------------------------------------------------------


def _frozen(M: np.ndarray) -> np.ndarray:
    M = np.array(M, dtype=np.int64, copy=True)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise MatrixLiteralError(f"expected a non-empty square matrix, got shape {M.shape}")
    M.setflags(write=False)
    return M


@dataclass(frozen=True, eq=False)
class GroupElement:
    """
    An element of GL_n, SL_n or PGL_n over a finite ring.

    PGL elements hold their canonical representative, so equality of
    matrices is equality of cosets.
    """

    ring: FiniteRing
    matrix: np.ndarray
    flavor: str = "SL"

    def __post_init__(self) -> None:
        if self.flavor not in GROUP_FLAVORS:
            raise FlavorError(f"group flavor must be one of {GROUP_FLAVORS}, got {self.flavor!r}")
        M = _frozen(self.matrix)
        d = int(det(self.ring, M))
        if not self.ring.is_unit(d):
            raise MatrixLiteralError(f"{format_matrix(self.ring, M)} is not invertible")
        if self.flavor == "SL" and d != self.ring.one:
            raise MatrixLiteralError(
                f"{format_matrix(self.ring, M)} has determinant {self.ring.format_element(d)}, not 1")
        if self.flavor == "PGL":
            M = _frozen(pgl_canonical(self.ring, M))
        object.__setattr__(self, "matrix", M)

    @classmethod
    def parse(cls, ring: FiniteRing, text: str, flavor: str = "SL") -> "GroupElement":
        return cls(ring, parse_matrix(ring, text), flavor)

    @classmethod
    def identity(cls, ring: FiniteRing, n: int, flavor: str = "SL") -> "GroupElement":
        return cls(ring, identity(ring, n), flavor)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GroupElement) and other.ring is self.ring
                and other.flavor == self.flavor and np.array_equal(other.matrix, self.matrix))

    def __hash__(self) -> int:
        return hash((self.ring.name, self.flavor, self.matrix.tobytes()))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.ring, mat_mul(self.ring, self.matrix, other.matrix), self.flavor)

    def inverse(self) -> "GroupElement":
        inv, _ = inverse(self.ring, self.matrix)
        return GroupElement(self.ring, inv, self.flavor)

    def power(self, e: int) -> "GroupElement":
        if e < 0:
            return self.inverse().power(-e)
        return GroupElement(self.ring, mat_pow(self.ring, self.matrix, e), self.flavor)

    def conjugate_by(self, h: "GroupElement") -> "GroupElement":
        """h·g·h^-1."""
        return h * self * h.inverse()

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.matrix, identity(self.ring, self.n)))

    def to_literal(self) -> str:
        return format_matrix(self.ring, self.matrix)


@dataclass(frozen=True, eq=False)
class LieElement:
    """
    An element of gl_n, sl_n or pgl_n over a finite ring.

    pgl elements are cosets modulo scalars, held as the trace-zero
    representative when n is a unit and with a zero (1,1) entry otherwise.
    """

    ring: FiniteRing
    matrix: np.ndarray
    flavor: str = "sl"

    def __post_init__(self) -> None:
        if self.flavor not in LIE_FLAVORS:
            raise FlavorError(f"Lie flavor must be one of {LIE_FLAVORS}, got {self.flavor!r}")
        R = self.ring
        M = _frozen(self.matrix)
        if self.flavor == "sl" and int(trace(R, M)) != R.zero:
            raise FlavorError(f"{format_matrix(R, M)} is not trace zero")
        if self.flavor == "pgl":
            n_code = R.from_int(M.shape[0])
            if R.is_unit(n_code):
                shift = R.mul(trace(R, M), R.inv(n_code))
            else:
                shift = M[0, 0]
            M = _frozen(add_scalar(R, M, R.neg(shift)))
        object.__setattr__(self, "matrix", M)

    @classmethod
    def parse(cls, ring: FiniteRing, text: str, flavor: str = "sl") -> "LieElement":
        return cls(ring, parse_matrix(ring, text), flavor)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, LieElement) and other.ring is self.ring
                and other.flavor == self.flavor and np.array_equal(other.matrix, self.matrix))

    def __hash__(self) -> int:
        return hash((self.ring.name, self.flavor, self.matrix.tobytes()))

    def __add__(self, other: "LieElement") -> "LieElement":
        return LieElement(self.ring, mat_add(self.ring, self.matrix, other.matrix), self.flavor)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return LieElement(self.ring, mat_sub(self.ring, self.matrix, other.matrix), self.flavor)

    def bracket(self, other: "LieElement") -> "LieElement":
        R = self.ring
        XY = mat_mul(R, self.matrix, other.matrix)
        YX = mat_mul(R, other.matrix, self.matrix)
        return LieElement(R, mat_sub(R, XY, YX), self.flavor)

    def to_literal(self) -> str:
        return format_matrix(self.ring, self.matrix)
