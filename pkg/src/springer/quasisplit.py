"""
Quasi-split type-A coefficients.

Over a quadratic extension R'/R with involution a -> a-bar, rho descends to
the unitary form twisted by psi(g) = w (g^T)^-1 w^-1 iff for i = 1..n

    (-1)^i sum_{j=1}^{i} C(i-1, j-1) a_j = -a_i-bar.

The case i = 1 puts a_1 in R. Given a_1..a_m, the case i = m+1 reads
a_{m+1} + a_{m+1}-bar = f_m for m odd and a_{m+1} - a_{m+1}-bar = f_m for m
even, solved with the trace and with Hilbert 90 respectively.
"""

import logging
from math import comb
from typing import List, Optional, Union

import numpy as np
from pydantic import BaseModel

from src.matrings.matrices import inverse, mat_mul, mat_scale
from src.matrings.rings import FiniteRing
from src.utilities.exceptions import CoefficientError, DescentError
from src.utilities.validation import validate_positive

from .maps import DescentData, SpringerCoefficients

logger = logging.getLogger(__name__)


class DescentObstruction(BaseModel):
    """No coefficients exist: the step at which the recurrence has no solution."""

    n: int
    base: str
    extension: str
    involution: str
    step: int
    reason: str


def anti_diagonal_w(R: FiniteRing, size: int) -> np.ndarray:
    """The anti-diagonal matrix with entries 1, -1, 1, ... from the top row."""
    w = np.zeros((size, size), dtype=np.int64)
    minus_one = int(R.neg(R.one))
    for i in range(size):
        w[i, size - 1 - i] = R.one if i % 2 == 0 else minus_one
    return w


def psi_batch(R: FiniteRing, w: np.ndarray, G: np.ndarray) -> np.ndarray:
    """psi(g) = w (g^T)^-1 w^-1 on a batch of invertible matrices."""
    w_inv, _ = inverse(R, w)
    G_inv, _ = inverse(R, np.swapaxes(G, -1, -2))
    return mat_mul(R, mat_mul(R, w, G_inv), w_inv)


def dpsi_batch(R: FiniteRing, w: np.ndarray, X: np.ndarray) -> np.ndarray:
    """The differential X -> -w X^T w^-1."""
    w_inv, _ = inverse(R, w)
    image = mat_mul(R, mat_mul(R, w, np.swapaxes(X, -1, -2)), w_inv)
    return mat_scale(R, R.neg(R.one), image)


def recurrence_holds(coeffs: SpringerCoefficients, sigma: np.ndarray) -> List[bool]:
    """For each i, whether the descent recurrence holds."""
    R = coeffs.ring
    a = coeffs.coeffs
    result = []
    for i in range(1, coeffs.n + 1):
        total = R.sum([R.mul(R.from_int(comb(i - 1, j - 1)), a[j - 1]) for j in range(1, i + 1)])
        lhs = total if i % 2 == 0 else int(R.neg(total))
        result.append(int(lhs) == int(R.neg(sigma[a[i - 1]])))
    return result


def _involution(base: FiniteRing, extension: FiniteRing) -> str:
    if not (base.is_field and extension.is_field) or base.p != extension.p:
        raise CoefficientError(
            f"quasi-split descent needs fields of one characteristic, not {base.name} and {extension.name}")
    f, k = base.field_degree, extension.field_degree
    if k == 2 * f:
        return f"frob^{f}"
    if k == f:
        return "id"
    raise CoefficientError(f"{extension.name} is neither {base.name} nor its quadratic extension")


def solve_quasisplit_typeA(n: int, base: FiniteRing, extension: FiniteRing,
                           a1: Optional[int] = None) -> Union[SpringerCoefficients, DescentObstruction]:
    """
    Solve the descent recurrence for SL_{n+1} over extension/base.

    With extension equal to base the involution is trivial; that degenerate
    case can have no solution (characteristic 2, n >= 2) and is then reported
    as a DescentObstruction.

    Raises:
        CoefficientError: If a_1 is not a unit fixed by the involution, or the
            rings do not form a quadratic extension.
        DescentError: If a step of a proper quadratic extension fails.
    """
    validate_positive(n, "n")
    spec = _involution(base, extension)
    R = extension
    sigma = R.automorphism(spec)
    a1 = R.one if a1 is None else int(a1)
    if not R.is_unit(a1) or int(sigma[a1]) != a1:
        raise CoefficientError(f"a_1 = {R.format_element(a1)} must be a unit of the base field {base.name}")

    codes = R.elements()
    plus = R.add_table[codes, sigma]
    minus = R.add_table[codes, R.neg_table[sigma]]
    a = [a1]
    for m in range(1, n):
        s_m = R.sum([R.mul(R.from_int(comb(m, j - 1)), a[j - 1]) for j in range(1, m + 1)])
        f_m = int(R.neg(s_m))
        hits = np.flatnonzero((plus if m % 2 else minus) == f_m)
        if not len(hits):
            relation = "a + a-bar" if m % 2 else "a - a-bar"
            reason = f"no a_{m + 1} in {R.name} with {relation} = {R.format_element(f_m)}"
            if spec == "id":
                logger.info("quasi-split obstruction at step %d over %s", m + 1, R.name)
                return DescentObstruction(n=n, base=base.name, extension=R.name, involution=spec,
                                          step=m + 1, reason=reason)
            raise DescentError(reason)
        a.append(int(hits[0]))
    descent = DescentData(spec, sigma, anti_diagonal_w(R, n + 1))
    coeffs = SpringerCoefficients(n, R, tuple(a), descent)
    logger.debug("quasi-split coefficients over %s/%s: %s", R.name, base.name, coeffs.literals())
    return coeffs
