"""Exact kernels and ranks over GF(p) and QQ through sympy's DomainMatrix."""

import logging
from typing import List, Sequence

import numpy as np
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)


def _rref(rows: Sequence[Sequence], ncols: int, domain):
    dm = DomainMatrix([[domain.convert(x) for x in row] for row in rows], (len(rows), ncols), domain)
    reduced, pivots = dm.rref()
    return reduced.to_Matrix(), list(pivots)


def nullspace(rows: Sequence[Sequence], ncols: int, domain=QQ) -> List[list]:
    """
    Basis of {v : rows · v = 0}, one list per vector, as sympy numbers.

    The basis is the standard one read off the reduced row echelon form: one
    vector per free column, with a 1 in that column.
    """
    if ncols == 0:
        return []
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = _rref(rows, ncols, domain)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = -reduced[i, f]
        basis.append(v)
    return basis


def kernel_mod_p(rows: np.ndarray, p: int) -> np.ndarray:
    """Kernel of an integer matrix over GF(p), as the rows of a (dim, ncols) array."""
    rows = np.asarray(rows, dtype=np.int64) % p
    ncols = rows.shape[1]
    basis = nullspace(rows.tolist(), ncols, GF(p))
    logger.debug("kernel over GF(%d): %d x %d -> dim %d", p, rows.shape[0], ncols, len(basis))
    if not basis:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.array([[int(x) % p for x in v] for v in basis], dtype=np.int64)


def rank_mod_p(rows: np.ndarray, p: int) -> int:
    rows = np.asarray(rows, dtype=np.int64) % p
    if rows.size == 0:
        return 0
    _, pivots = _rref(rows.tolist(), rows.shape[1], GF(p))
    return len(pivots)


def rank_over(rows: Sequence[Sequence], ncols: int, domain=QQ) -> int:
    if not rows or ncols == 0:
        return 0
    _, pivots = _rref(rows, ncols, domain)
    return len(pivots)


def span_vectors(basis: np.ndarray, p: int) -> np.ndarray:
    """Every F_p-combination of the basis rows, shape (p**dim, ncols)."""
    basis = np.asarray(basis, dtype=np.int64)
    dim, ncols = basis.shape
    if dim == 0:
        return np.zeros((1, ncols), dtype=np.int64)
    codes = np.arange(p ** dim, dtype=np.int64)
    coeffs = (codes[:, None] // p ** np.arange(dim)[None, :]) % p
    return (coeffs @ basis) % p


def row_basis_mod_p(rows: np.ndarray, p: int) -> np.ndarray:
    """The non-zero rows of the reduced row echelon form: a basis of the row space."""
    rows = np.asarray(rows, dtype=np.int64) % p
    if rows.size == 0:
        return np.zeros((0, rows.shape[-1] if rows.ndim == 2 else 0), dtype=np.int64)
    reduced, pivots = _rref(rows.tolist(), rows.shape[1], GF(p))
    return np.array([[int(reduced[i, j]) % p for j in range(rows.shape[1])]
                     for i in range(len(pivots))], dtype=np.int64).reshape(len(pivots), rows.shape[1])


def complement_mod_p(rows: np.ndarray, subspace: np.ndarray, p: int) -> np.ndarray:
    """
    Rows of `rows` that extend a basis of `subspace`, greedily in order.

    Their images form a basis of span(rows) / subspace when subspace lies in
    span(rows).
    """
    rows = np.asarray(rows, dtype=np.int64) % p
    current = np.asarray(subspace, dtype=np.int64).reshape(-1, rows.shape[1]) % p
    rank = rank_mod_p(current, p)
    chosen = []
    for row in rows:
        extended = np.concatenate([current, row[None, :]])
        if rank_mod_p(extended, p) > rank:
            current, rank = extended, rank + 1
            chosen.append(row)
    if not chosen:
        return np.zeros((0, rows.shape[1]), dtype=np.int64)
    return np.array(chosen, dtype=np.int64)
