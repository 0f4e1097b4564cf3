"""
Centralizers in matrix groups over finite rings.

Two point-set solvers are provided. The brute-force scan runs through all of
M_n(R) in chunks spread over a thread pool; the linear solver treats
h·T = c·T·h as F_p-linear equations in the entries of h, one system per
scalar c (only c = 1 outside PGL), and filters the kernel for invertible
solutions. Both return the same sorted set.

lie_centralizer computes the tangent side: the kernel of Ad(g) - 1 or ad X
inside gl_n, sl_n or pgl_n, as an F_p-space.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

import numpy as np

from src.utilities.environment_manager import get_environment_manager
from src.utilities.exceptions import BudgetExceededError, FlavorError, InputError

from .linalg import complement_mod_p, kernel_mod_p, rank_mod_p, row_basis_mod_p, span_vectors
from .matrices import (
    GroupElement,
    LieElement,
    all_matrices,
    det,
    format_matrix,
    mat_mul,
    mat_scale,
    mat_sub,
    pgl_canonical,
    trace,
)
from .rings import FiniteRing

logger = logging.getLogger(__name__)

_CHUNK = 1 << 14

Target = Union[GroupElement, LieElement]


@dataclass
class CentralizerPoints:
    """
    A centralizer as a sorted array of matrices.

    Attributes:
        ring: Coefficient ring.
        flavor: GL, SL or PGL; PGL points are canonical coset representatives.
        points: Shape (count, n, n), sorted lexicographically by entries.
        method: "bruteforce" or "linear".
        candidates: Matrices examined.
    """

    ring: FiniteRing
    flavor: str
    points: np.ndarray
    method: str
    candidates: int

    @property
    def count(self) -> int:
        return int(len(self.points))

    def keys(self) -> set:
        return {m.tobytes() for m in self.points}

    def same_points(self, other: "CentralizerPoints") -> bool:
        return np.array_equal(self.points, other.points)

    def literals(self) -> List[str]:
        return [format_matrix(self.ring, m) for m in self.points]


def _unique_sorted(M: np.ndarray, n: int) -> np.ndarray:
    if len(M) == 0:
        return np.zeros((0, n, n), dtype=np.int64)
    return np.unique(M.reshape(len(M), -1), axis=0).reshape(-1, n, n)


def _flavor_filter(R: FiniteRing, H: np.ndarray, flavor: str) -> np.ndarray:
    d = det(R, H)
    if flavor == "SL":
        return H[d == R.one]
    H = H[R.unit_mask[d]]
    if flavor == "PGL":
        H = H[np.all(pgl_canonical(R, H) == H, axis=(1, 2))]
    return H


def commutes_with(R: FiniteRing, H: np.ndarray, T: np.ndarray, flavor: str) -> np.ndarray:
    """Mask of the rows h of H with h·T = T·h (up to a scalar for PGL)."""
    HT = mat_mul(R, H, T)
    TH = mat_mul(R, T, H)
    if flavor == "PGL":
        HT, TH = pgl_canonical(R, HT), pgl_canonical(R, TH)
    return np.all(HT == TH, axis=(-2, -1))


def _scan(R: FiniteRing, T: np.ndarray, flavor: str, start: int, stop: int) -> np.ndarray:
    H = _flavor_filter(R, all_matrices(R, T.shape[0], start, stop), flavor)
    return H[commutes_with(R, H, T, flavor)]


def _target(g: Target, flavor: Optional[str]) -> Tuple[FiniteRing, np.ndarray, str]:
    if isinstance(g, GroupElement):
        flavor = flavor or g.flavor
    elif flavor is None:
        raise FlavorError("centralizers of Lie elements need a group flavor")
    if flavor not in ("GL", "SL", "PGL"):
        raise FlavorError(f"group flavor must be GL, SL or PGL, got {flavor!r}")
    if flavor == "PGL" and isinstance(g, LieElement):
        raise FlavorError("the PGL adjoint action on Lie elements is not supported")
    return g.ring, np.asarray(g.matrix, dtype=np.int64), flavor


def centralizer_bruteforce(g: Target, flavor: Optional[str] = None, budget: Optional[int] = None,
                           workers: Optional[int] = None) -> CentralizerPoints:
    """
    Scan M_n(R) for the flavor group elements commuting with g.

    The enumeration is cut into chunks handed to a thread pool; results are
    concatenated in chunk order and sorted, so the output is deterministic.

    Raises:
        BudgetExceededError: If |R|^(n^2) exceeds the budget.
    """
    env = get_environment_manager()
    budget = budget if budget is not None else env.get_var_as_int("SPRINGER_BUDGET", 1 << 24)
    workers = workers if workers is not None else env.get_var_as_int("SPRINGER_WORKERS", 4)
    R, T, flavor = _target(g, flavor)
    n = T.shape[0]
    total = R.order ** (n * n)
    if total > budget:
        raise BudgetExceededError(f"{total} candidates over {R.name} exceed the budget {budget}")
    R.warm()
    ranges = [(s, min(s + _CHUNK, total)) for s in range(0, total, _CHUNK)]
    logger.debug("centralizer scan: %d candidates in %d chunks, %d workers", total, len(ranges), workers)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        chunks = list(executor.map(lambda r: _scan(R, T, flavor, *r), ranges))
    points = _unique_sorted(np.concatenate(chunks), n)
    return CentralizerPoints(R, flavor, points, "bruteforce", total)


def _linear_map_rows(R: FiniteRing, images: np.ndarray) -> np.ndarray:
    """F_p coordinates of a batch of image matrices, one row per basis input."""
    return R.coords[images].reshape(len(images), -1)


def _gl_basis(R: FiniteRing, n: int) -> np.ndarray:
    """F_p basis of M_n(R): E_ij times p^l, ordered (i, j, l)."""
    basis = np.zeros((n * n * R.dim, n, n), dtype=np.int64)
    k = 0
    for i in range(n):
        for j in range(n):
            for code in R.p ** np.arange(R.dim):
                basis[k, i, j] = code
                k += 1
    return basis


def _from_coords(R: FiniteRing, vectors: np.ndarray, n: int) -> np.ndarray:
    return R.encode(np.asarray(vectors).reshape(len(vectors), n, n, R.dim))


def centralizer_linear(g: Target, flavor: Optional[str] = None,
                       budget: Optional[int] = None) -> CentralizerPoints:
    """
    Solve h·T = c·T·h over F_p for each admissible scalar c, then filter.

    Raises:
        BudgetExceededError: If some solution space has more than budget points.
    """
    budget = budget if budget is not None else get_environment_manager().get_var_as_int("SPRINGER_BUDGET", 1 << 24)
    R, T, flavor = _target(g, flavor)
    n = T.shape[0]
    basis = _gl_basis(R, n)
    scalars = R.units() if flavor == "PGL" else np.array([R.one])
    found, candidates = [], 0
    for c in scalars:
        images = mat_sub(R, mat_mul(R, basis, T), mat_scale(R, c, mat_mul(R, T, basis)))
        kernel = kernel_mod_p(_linear_map_rows(R, images).T, R.p)
        size = R.p ** len(kernel)
        if size > budget:
            raise BudgetExceededError(f"solution space of size {size} exceeds the budget {budget}")
        candidates += size
        H = _from_coords(R, span_vectors(kernel, R.p), n)
        H = _flavor_filter(R, pgl_canonical(R, H) if flavor == "PGL" else H, flavor)
        found.append(H)
    points = _unique_sorted(np.concatenate(found), n)
    logger.debug("linear centralizer over %s: %d scalars, %d candidates, %d points",
                 R.name, len(scalars), candidates, len(points))
    return CentralizerPoints(R, flavor, points, "linear", candidates)


def centralizer_points(g: Target, flavor: Optional[str] = None, method: str = "auto",
                       budget: Optional[int] = None, workers: Optional[int] = None) -> CentralizerPoints:
    """
    All h in the flavor group over R with h·g·h^-1 = g.

    For PGL the equation holds up to a unit scalar. A LieElement target
    gives the centralizer under the adjoint action (flavor GL or SL).

    Args:
        g: The element to centralize.
        flavor: Group flavor; defaults to that of g.
        method: "bruteforce", "linear", or "auto" (brute force while the
            candidate count fits the budget).
        budget: Enumeration cap; SPRINGER_BUDGET when None.
        workers: Threads for the brute-force scan; SPRINGER_WORKERS when None.

    Raises:
        BudgetExceededError: If the chosen method would exceed the budget.
        InputError: For an unknown method.
    """
    budget = budget if budget is not None else get_environment_manager().get_var_as_int("SPRINGER_BUDGET", 1 << 24)
    if method == "auto":
        n = g.n
        method = "bruteforce" if g.ring.order ** (n * n) <= budget else "linear"
    if method == "bruteforce":
        return centralizer_bruteforce(g, flavor, budget, workers)
    if method == "linear":
        return centralizer_linear(g, flavor, budget)
    raise InputError(f"unknown centralizer method {method!r}; use auto, bruteforce or linear")


def noncommuting_pair(points: CentralizerPoints) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    """The first pair (h1, h2) of points with h1·h2 != h2·h1, or None."""
    R, H = points.ring, points.points
    for i in range(len(H) - 1):
        others = H[i + 1:]
        bad = ~commutes_with(R, others, H[i], points.flavor)
        if bad.any():
            return H[i], others[int(bad.argmax())]
    return None


# -- Lie centralizers ------------------------------------------------------------


@dataclass
class LieCentralizer:
    """
    An F_p basis of a Lie centralizer.

    Attributes:
        flavor: gl, sl or pgl.
        basis: Shape (dim_fp, n, n). For pgl these are gl representatives
            whose classes form a basis of the quotient by the scalars.
        dimension_fp: Dimension over F_p; always len(basis).
        dimension: Dimension over the coefficient field, None for non-fields.
    """

    ring: FiniteRing
    flavor: str
    basis: np.ndarray
    dimension_fp: int
    dimension: Optional[int]

    def _rows(self) -> np.ndarray:
        return self.ring.coords[self.basis].reshape(len(self.basis), -1)

    def same_space(self, other: "LieCentralizer") -> bool:
        a, b = self._rows(), other._rows()
        if len(a) != len(b):
            return False
        if self.flavor == "pgl":
            scalars = _scalar_rows(self.ring, self.basis.shape[-1])
            a = np.concatenate([scalars, a])
            return rank_mod_p(np.concatenate([a, b]), self.ring.p) == rank_mod_p(a, self.ring.p)
        return rank_mod_p(np.concatenate([a, b]), self.ring.p) == len(a)


def _scalar_rows(R: FiniteRing, n: int) -> np.ndarray:
    """F_p coordinates of c·1 for c running over an F_p basis of R."""
    unit_basis = R.p ** np.arange(R.dim)
    return _linear_map_rows(R, mat_scale(R, unit_basis, np.eye(n, dtype=np.int64) * R.one))


def _lie_flavor(flavor: str) -> str:
    flavor = {"GL": "gl", "SL": "sl", "PGL": "pgl"}.get(flavor, flavor)
    if flavor not in ("gl", "sl", "pgl"):
        raise FlavorError(f"Lie flavor must be gl, sl or pgl, got {flavor!r}")
    return flavor


def lie_centralizer(g: Target, flavor: Optional[str] = None) -> LieCentralizer:
    """
    ker(Ad(g) - 1) for a group element, or ker(ad X) for a Lie element.

    The kernel is taken inside gl_n, inside the trace-zero matrices for sl,
    and for pgl as {Y : g·Y - Y·g in R·g} (resp. [X, Y] in R·1) modulo the
    scalar matrices. The pgl basis holds representatives of a basis of that
    quotient; the scalars themselves are not in it.
    """
    R = g.ring
    flavor = _lie_flavor(flavor or g.flavor)
    T = np.asarray(g.matrix, dtype=np.int64)
    n = T.shape[0]
    d = R.dim
    basis = _gl_basis(R, n)
    N = len(basis)
    # both cases are kernels of Y -> T·Y - Y·T
    images = _linear_map_rows(R, mat_sub(R, mat_mul(R, T, basis), mat_mul(R, basis, T)))

    if flavor == "pgl":
        unit_basis = R.p ** np.arange(d)
        direction = T if isinstance(g, GroupElement) else np.eye(n, dtype=np.int64) * R.one
        extra = _linear_map_rows(R, R.neg_table[mat_scale(R, unit_basis, direction)])
        system = np.concatenate([images, extra]).T
        kernel = kernel_mod_p(system, R.p)[:, :N]
        projected = row_basis_mod_p(kernel, R.p)
        vectors = complement_mod_p(projected, _scalar_rows(R, n), R.p)
        dimension_fp = len(vectors)
    else:
        system = images.T
        if flavor == "sl":
            traces = R.coords[trace(R, basis)]
            system = np.concatenate([system, traces.T])
        vectors = kernel_mod_p(system, R.p)
        dimension_fp = len(vectors)

    dimension = dimension_fp // R.field_degree if R.is_field else None
    logger.debug("lie centralizer in %s over %s: dim_fp=%d", flavor, R.name, dimension_fp)
    return LieCentralizer(R, flavor, _from_coords(R, vectors, n), dimension_fp, dimension)
