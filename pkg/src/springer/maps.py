"""
Type-A Springer maps rho(1 + e) = a_1 e + a_2 e^2 + ... + a_n e^n on SL_{n+1}.

Coefficients are codes of a FiniteRing. rho is an isomorphism from the
unipotent variety onto the nilpotent variety exactly when a_1 is a unit; its
inverse is 1 + b_1 X + ... + b_n X^n with b the compositional inverse of the
series a.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.matrings.matrices import GroupElement, LieElement, add_scalar, identity, mat_mul, mat_scale, mat_sub
from src.matrings.rings import FiniteRing
from src.matrings.unipotent import is_unipotent
from src.utilities.exceptions import CoefficientError, InputError, NotUnipotentError
from src.utilities.validation import validate_positive

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DescentData:
    """
    The quasi-split twist: an involution of the coefficient ring and
    psi(g) = w (g^T)^-1 w^-1 with w anti-diagonal of alternating signs.
    """

    involution: str
    table: np.ndarray = field(repr=False)
    w: np.ndarray = field(repr=False)

    def apply(self, A: np.ndarray) -> np.ndarray:
        return self.table[np.asarray(A, dtype=np.int64)]


@dataclass(frozen=True)
class SpringerCoefficients:
    """
    a_1..a_n for SL_{n+1} over ring, optionally with descent data.

    Attributes:
        n: Matrix size minus one.
        ring: Coefficient ring (the extension ring for quasi-split maps).
        coeffs: Codes of a_1..a_n.
        descent: Involution and w for the quasi-split form.
    """

    n: int
    ring: FiniteRing
    coeffs: Tuple[int, ...]
    descent: Optional[DescentData] = None

    def __post_init__(self) -> None:
        validate_positive(self.n, "n")
        if len(self.coeffs) != self.n:
            raise CoefficientError(f"SL_{self.n + 1} needs {self.n} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def size(self) -> int:
        return self.n + 1

    @property
    def valid(self) -> bool:
        """rho is an isomorphism iff a_1 is a unit."""
        return self.ring.is_unit(self.coeffs[0])

    def literals(self) -> List[str]:
        return [self.ring.format_element(c) for c in self.coeffs]

    def with_coeffs(self, coeffs: Sequence[int]) -> "SpringerCoefficients":
        return SpringerCoefficients(self.n, self.ring, tuple(coeffs), self.descent)

    def describe(self) -> Dict[str, object]:
        info: Dict[str, object] = {
            "n": self.n,
            "ring": self.ring.name,
            "coefficients": self.literals(),
            "valid": self.valid,
        }
        if self.descent is not None:
            info["involution"] = self.descent.involution
        return info


def parse_coefficients(ring: FiniteRing, n: int, text: Optional[str]) -> SpringerCoefficients:
    """
    Coefficients from a ';'-separated list of element literals, padded with zeros.

    Raises:
        CoefficientError: For more than n entries.
    """
    values: List[int] = []
    if text:
        values = [ring.parse_element(part) for part in text.split(";") if part.strip()]
    if len(values) > n:
        raise CoefficientError(f"at most {n} coefficients for SL_{n + 1}, got {len(values)}")
    if not values:
        values = [ring.one]
    values += [ring.zero] * (n - len(values))
    return SpringerCoefficients(n, ring, tuple(values))


def springer_batch(coeffs: SpringerCoefficients, G: np.ndarray) -> np.ndarray:
    """rho on a batch of matrices, by Horner in e = g - 1."""
    R = coeffs.ring
    E = mat_sub(R, G, identity(R, coeffs.size))
    P = np.broadcast_to(identity(R, coeffs.size), E.shape)
    P = mat_scale(R, coeffs.coeffs[-1], P)
    for a in reversed(coeffs.coeffs[:-1]):
        P = add_scalar(R, mat_mul(R, E, P), a)
    return mat_mul(R, E, P)


def apply_springer(coeffs: SpringerCoefficients, g: GroupElement) -> LieElement:
    """
    rho(g) = sum a_i (g - 1)^i.

    Raises:
        InputError: If g is not in SL_{n+1} over the coefficient ring.
        NotUnipotentError: If g is not unipotent.
    """
    if g.ring is not coeffs.ring:
        raise InputError(f"element over {g.ring.name}, coefficients over {coeffs.ring.name}")
    if g.n != coeffs.size or g.flavor == "PGL":
        raise InputError(f"rho is defined on SL_{coeffs.size}, got a {g.flavor} element of size {g.n}")
    if not is_unipotent(g):
        raise NotUnipotentError(f"{g.to_literal()} is not unipotent")
    return LieElement(coeffs.ring, springer_batch(coeffs, g.matrix), "sl")


def solve_split(n: int, ring: FiniteRing, a1: Optional[int] = None,
                rest: Optional[Sequence[int]] = None) -> SpringerCoefficients:
    """
    Split-form coefficients: any unit a_1, a_2..a_n free (default 0).

    Raises:
        CoefficientError: If a_1 is not a unit.
    """
    a1 = ring.one if a1 is None else int(a1)
    if not ring.is_unit(a1):
        raise CoefficientError(f"a_1 = {ring.format_element(a1)} is not a unit of {ring.name}")
    tail = list(rest or [])
    if len(tail) > n - 1:
        raise CoefficientError(f"at most {n - 1} further coefficients for SL_{n + 1}")
    tail += [ring.zero] * (n - 1 - len(tail))
    return SpringerCoefficients(n, ring, (a1, *tail))


def _series_mul(R: FiniteRing, f: Sequence[int], g: Sequence[int], degree: int) -> List[int]:
    """Product of power series truncated above degree, index = exponent."""
    out = [R.zero] * (degree + 1)
    for i, a in enumerate(f):
        if a == R.zero:
            continue
        for j, b in enumerate(g[:degree + 1 - i]):
            out[i + j] = int(R.add(out[i + j], R.mul(a, b)))
    return out


def _compose(R: FiniteRing, a: Sequence[int], b: Sequence[int], degree: int) -> List[int]:
    """Coefficients of a(b(X)) up to X^degree, both series without constant term."""
    series_b = [R.zero] + list(b)
    power = list(series_b)
    total = [R.zero] * (degree + 1)
    for coefficient in a:
        for k in range(degree + 1):
            total[k] = int(R.add(total[k], R.mul(coefficient, power[k] if k < len(power) else R.zero)))
        power = _series_mul(R, power, series_b, degree)
    return total


def inverse_coefficients(coeffs: SpringerCoefficients) -> Tuple[int, ...]:
    """
    b_1..b_n with a(b(X)) = X mod X^(n+1).

    Raises:
        CoefficientError: If a_1 is not a unit.
    """
    R, n = coeffs.ring, coeffs.n
    if not coeffs.valid:
        raise CoefficientError("rho has no inverse unless a_1 is a unit")
    a1_inv = int(R.inv(coeffs.coeffs[0]))
    b = [a1_inv]
    for k in range(2, n + 1):
        c_k = _compose(R, coeffs.coeffs, b + [R.zero], k)[k]
        b.append(int(R.neg(R.mul(a1_inv, c_k))))
    return tuple(b)


def inverse_springer_batch(coeffs: SpringerCoefficients, X: np.ndarray) -> np.ndarray:
    """rho^-1(X) = 1 + sum b_i X^i on a batch of nilpotent matrices."""
    inverse = SpringerCoefficients(coeffs.n, coeffs.ring, inverse_coefficients(coeffs))
    R = coeffs.ring
    return add_scalar(R, springer_batch(inverse, add_scalar(R, X, R.one)), R.one)
