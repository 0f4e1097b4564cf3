"""Regularity tests for type-A matrix groups and Lie algebras over finite fields."""

import logging
from typing import List, Optional, Union

import numpy as np
from pydantic import BaseModel

from src.utilities.environment_manager import get_environment_manager
from src.utilities.exceptions import FlavorError, InputError

from .centralizers import lie_centralizer
from .matrices import GroupElement, LieElement, charpoly, mat_mul, mat_sub, random_matrices
from .rings import FiniteRing

logger = logging.getLogger(__name__)


def is_regular_typeA(g: Union[GroupElement, LieElement]) -> bool:
    """
    Whether g (or X) is regular in SL_n / sl_n over a finite field.

    Regular means every eigenvalue has a single Jordan block, which is the
    case exactly when the commutant of the matrix in M_n has dimension n.

    Raises:
        InputError: If the coefficients are not a field.
    """
    if not g.ring.is_field:
        raise InputError(f"regularity needs field coefficients, not {g.ring.name}")
    commutant = lie_centralizer(g, "gl")
    logger.debug("commutant of %s has dimension %s", g.to_literal(), commutant.dimension)
    return commutant.dimension == g.n


class ChevalleyRegularity(BaseModel):
    """Outcome of the Chevalley regularity test for one element."""

    element: str
    flavor: str
    regular: bool
    rank: int
    coefficient: int
    trailing_degree: int
    sample_min_trailing_degree: int
    ad_charpoly: List[int]


def _basis(R: FiniteRing, n: int, flavor: str) -> np.ndarray:
    """gl: E_ab row-major; sl: off-diagonal E_ab row-major, then E_ii - E_nn."""
    mats = []
    for a in range(n):
        for b in range(n):
            if flavor == "gl" or a != b:
                M = np.zeros((n, n), dtype=np.int64)
                M[a, b] = R.one
                mats.append(M)
    if flavor == "sl":
        for i in range(n - 1):
            M = np.zeros((n, n), dtype=np.int64)
            M[i, i] = R.one
            M[n - 1, n - 1] = R.neg(R.one)
            mats.append(M)
    return np.array(mats)


def _coordinates(Y: np.ndarray, flavor: str) -> np.ndarray:
    n = Y.shape[-1]
    if flavor == "gl":
        return Y.reshape(*Y.shape[:-2], n * n)
    off = ~np.eye(n, dtype=bool)
    diag = np.arange(n - 1)
    return np.concatenate([Y[..., off], Y[..., diag, diag]], axis=-1)


def _ad_charpolys(R: FiniteRing, X: np.ndarray, flavor: str) -> np.ndarray:
    """Characteristic polynomials of ad X on the flavor algebra, batched over X."""
    basis = _basis(R, X.shape[-1], flavor)
    Xb = X[..., None, :, :]
    images = mat_sub(R, mat_mul(R, Xb, basis), mat_mul(R, basis, Xb))
    ad = np.swapaxes(_coordinates(images, flavor), -1, -2)
    return charpoly(R, ad)


def _trailing_degree(poly: np.ndarray) -> np.ndarray:
    N = poly.shape[-1] - 1
    nonzero = poly != 0
    last = N - np.argmax(nonzero[..., ::-1], axis=-1)
    return N - last


def chevalley_regular(X: LieElement, samples: Optional[int] = None,
                      seed: Optional[int] = None) -> ChevalleyRegularity:
    """
    Whether the coefficient c_r(X) of t^r in det(t - ad X) is non-zero.

    r is the nilpotent rank of the algebra: the smallest trailing degree of
    the ad-characteristic polynomial, estimated over X and a seeded random
    sample and bounded below by the rank (n for gl, n-1 for sl).

    Raises:
        InputError: If the coefficients are not a field.
        FlavorError: For pgl.
    """
    R = X.ring
    if not R.is_field:
        raise InputError(f"Chevalley regularity needs field coefficients, not {R.name}")
    if X.flavor not in ("gl", "sl"):
        raise FlavorError(f"Chevalley regularity is computed on gl or sl, not {X.flavor}")
    env = get_environment_manager()
    samples = samples if samples is not None else env.get_var_as_int("SPRINGER_SAMPLES", 100)
    seed = seed if seed is not None else env.get_var_as_int("SPRINGER_SEED", 42)
    n = X.n

    rng = np.random.default_rng(seed)
    sample = random_matrices(R, n, samples, rng)
    if X.flavor == "sl":
        diag = np.zeros(samples, dtype=np.int64)
        for i in range(n - 1):
            diag = R.add_table[diag, sample[:, i, i]]
        sample[:, n - 1, n - 1] = R.neg_table[diag]
    sample_min = int(_trailing_degree(_ad_charpolys(R, sample, X.flavor)).min())

    poly = _ad_charpolys(R, np.asarray(X.matrix), X.flavor)
    N = len(poly) - 1
    known = n if X.flavor == "gl" else n - 1
    own = int(_trailing_degree(poly))
    r = max(known, min(sample_min, own))
    coefficient = int(poly[N - r])
    logger.debug("ad charpoly of %s: %s, rank %d", X.to_literal(), poly.tolist(), r)
    return ChevalleyRegularity(
        element=X.to_literal(),
        flavor=X.flavor,
        regular=coefficient != R.zero,
        rank=r,
        coefficient=coefficient,
        trailing_degree=own,
        sample_min_trailing_degree=sample_min,
        ad_charpoly=[int(c) for c in poly],
    )
