"""
Unipotence, nilpotence and Jordan decomposition for matrices over finite rings.
"""

import logging
from math import lcm
from typing import Optional, Tuple

import numpy as np
from sympy.ntheory.modular import crt

from src.utilities.environment_manager import get_environment_manager
from src.utilities.exceptions import BudgetExceededError, FlavorError, InputError

from .matrices import (
    GroupElement,
    LieElement,
    add_scalar,
    all_matrices,
    charpoly,
    det,
    identity,
    inverse,
    mat_mul,
    mat_pow,
    mat_sub,
    pgl_canonical,
    random_group_elements,
    trace,
)
from .rings import FiniteRing

logger = logging.getLogger(__name__)

_CHUNK = 1 << 14


def _is_t_power(poly: np.ndarray) -> np.ndarray:
    """Mask of characteristic polynomials equal to t^n."""
    return np.all(poly[..., 1:] == 0, axis=-1)


def nilpotent_mask(R: FiniteRing, X: np.ndarray) -> np.ndarray:
    """det(t·I - X) == t^n, batched. By Cayley-Hamilton this forces X^n = 0."""
    return _is_t_power(charpoly(R, X))


def unipotent_mask(R: FiniteRing, G: np.ndarray) -> np.ndarray:
    n = np.asarray(G).shape[-1]
    return nilpotent_mask(R, mat_sub(R, G, identity(R, n)))


def is_unipotent(g: GroupElement) -> bool:
    """
    Whether (g - 1)^n = 0 and det(t·I - (g - 1)) = t^n.

    Raises:
        FlavorError: For PGL elements; cosets are handled by lifting.
    """
    if g.flavor == "PGL":
        raise FlavorError("unipotence of a PGL coset is decided by lifting to GL")
    R, n = g.ring, g.n
    N = mat_sub(R, g.matrix, identity(R, n))
    power_zero = bool(np.all(mat_pow(R, N, n) == 0))
    poly_ok = bool(nilpotent_mask(R, N))
    if R.is_field and power_zero != poly_ok:
        logger.warning("nilpotence tests disagree for %s over %s", g.to_literal(), R.name)
    return power_zero and poly_ok


def is_nilpotent(X: LieElement) -> bool:
    """
    Whether det(t·I - X) = t^n.

    Raises:
        FlavorError: For pgl elements.
    """
    if X.flavor == "pgl":
        raise FlavorError("nilpotence in pgl is only checked through the PGL2 suite")
    return bool(nilpotent_mask(X.ring, X.matrix))


def element_order(g: GroupElement, limit: Optional[int] = None) -> int:
    """Order of g in its group, by walking powers."""
    R, n = g.ring, g.n
    limit = limit if limit is not None else R.order ** (n * n)
    one = identity(R, n)
    current = g.matrix
    for k in range(1, limit + 1):
        if np.array_equal(current, one):
            return k
        current = mat_mul(R, current, g.matrix)
        if g.flavor == "PGL":
            current = pgl_canonical(R, current)
    raise BudgetExceededError(f"order of {g.to_literal()} exceeds {limit}")


def is_semisimple(g: GroupElement) -> bool:
    """
    Whether g is diagonalizable over the algebraic closure of F_q.

    The eigenvalues of an n x n matrix lie in F_(q^k) for some k <= n, so g is
    semisimple exactly when g^(q^N) = g with N = lcm(1..n).

    Raises:
        InputError: If the coefficients are not a field.
        FlavorError: For PGL elements.
    """
    R = g.ring
    if not R.is_field:
        raise InputError(f"semisimplicity is only decided over fields, not {R.name}")
    if g.flavor == "PGL":
        raise FlavorError("semisimplicity of a PGL coset is decided by lifting to GL")
    return g.power(R.order ** lcm(*range(1, g.n + 1))) == g


def jordan_decomposition(g: GroupElement) -> Tuple[GroupElement, GroupElement]:
    """
    Split g = t·u with t of order prime to p and u of p-power order.

    With |g| = p^a·m and e = 0 mod p^a, e = 1 mod m (CRT), t = g^e and
    u = g^(1-e) are powers of g, so they commute.

    Raises:
        InputError: If the coefficients are not a field.
    """
    R = g.ring
    if not R.is_field:
        raise InputError(f"Jordan decomposition needs field coefficients, not {R.name}")
    order = element_order(g)
    p_part = 1
    rest = order
    while rest % R.p == 0:
        rest //= R.p
        p_part *= R.p
    e = int(crt([p_part, rest], [0, 1])[0]) if p_part > 1 and rest > 1 else (0 if rest == 1 else 1)
    t = g.power(e)
    u = g.power((1 - e) % order)
    logger.debug("jordan: |g|=%d, p-part %d, exponent %d", order, p_part, e)
    return t, u


def enumerate_nilpotents(R: FiniteRing, n: int, budget: Optional[int] = None) -> np.ndarray:
    """
    Every nilpotent n x n matrix over R, in enumeration order.

    Raises:
        BudgetExceededError: If |R|^(n^2) exceeds the budget.
    """
    budget = budget if budget is not None else get_environment_manager().get_var_as_int("SPRINGER_BUDGET", 1 << 24)
    total = R.order ** (n * n)
    if total > budget:
        raise BudgetExceededError(f"{total} candidate matrices over {R.name} exceed the budget {budget}")
    found = []
    for start in range(0, total, _CHUNK):
        block = all_matrices(R, n, start, start + _CHUNK)
        found.append(block[nilpotent_mask(R, block)])
    result = np.concatenate(found)
    logger.debug("%d nilpotent %dx%d matrices over %s", len(result), n, n, R.name)
    return result


def enumerate_unipotents(R: FiniteRing, n: int, budget: Optional[int] = None) -> np.ndarray:
    """Every unipotent element of SL_n(R): 1 + N for N nilpotent."""
    return add_scalar(R, enumerate_nilpotents(R, n, budget), R.one)


def random_unipotents(R: FiniteRing, n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Conjugates of random upper unitriangular matrices by random SL_n(R) elements."""
    U = np.zeros((count, n, n), dtype=np.int64)
    iu = np.triu_indices(n, 1)
    U[:, iu[0], iu[1]] = rng.integers(0, R.order, size=(count, len(iu[0])))
    U = add_scalar(R, U, R.one)
    H = random_group_elements(R, n, count, rng, "SL")
    H_inv, _ = inverse(R, H)
    return mat_mul(R, mat_mul(R, H, U), H_inv)


def count_unipotents(n: int, q: int) -> int:
    """|unipotents of SL_n(F_q)| = q^(n(n-1))."""
    return q ** (n * (n - 1))


def projective_point_counts(R: FiniteRing) -> dict:
    """
    Point counts behind the PGL2 unipotent variety P^2 minus the conic a^2 = bc.

    Counts points of P^2(F_q), of the conic, and the unipotent cosets of
    PGL2(F_q) (cosets with a repeated eigenvalue, i.e. tr^2 = 4 det),
    all by enumeration.
    """
    if not R.is_field:
        raise InputError(f"projective counts need a finite field, not {R.name}")
    q = R.order
    codes = np.arange(q ** 3, dtype=np.int64)
    vec = np.stack([codes % q, (codes // q) % q, codes // (q * q)], axis=1)
    nonzero = vec.any(axis=1)
    unit = R.unit_mask[vec]
    first = unit.argmax(axis=1)
    lead = vec[np.arange(len(vec)), first]
    normalized = nonzero & (lead == R.one)
    points = vec[normalized]
    a, b, c = points[:, 0], points[:, 1], points[:, 2]
    on_conic = R.mul_table[a, a] == R.mul_table[b, c]

    G = all_matrices(R, 2)
    d = det(R, G)
    G = G[R.unit_mask[d]]
    G = np.unique(pgl_canonical(R, G).reshape(len(G), -1), axis=0).reshape(-1, 2, 2)
    tr = trace(R, G)
    four_det = R.mul_table[R.from_int(4), det(R, G)]
    unipotent = R.mul_table[tr, tr] == four_det
    counts = {
        "q": q,
        "projective_plane": int(len(points)),
        "conic": int(on_conic.sum()),
        "complement": int((~on_conic).sum()),
        "pgl2_unipotents": int(unipotent.sum()),
    }
    logger.debug("projective counts over %s: %s", R.name, counts)
    return counts
