"""
Checks on type-A Springer maps.

Each check records one CheckRecord on the recorder it is given and returns
whether it passed. verify_springer bundles them for one coefficient vector;
springer_suite runs the fixed grid of sizes and fields.
"""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import factorint

from src.matrings.centralizers import centralizer_points, lie_centralizer, noncommuting_pair
from src.matrings.matrices import (
    GroupElement,
    LieElement,
    add_scalar,
    format_matrix,
    identity,
    inverse,
    mat_mul,
    mat_sub,
    random_group_elements,
)
from src.matrings.rings import FiniteRing, make_ring
from src.matrings.unipotent import enumerate_nilpotents, enumerate_unipotents, nilpotent_mask, random_unipotents
from src.reporting import CheckRecord, CheckRecorder
from src.utilities.environment_manager import get_environment_manager
from src.utilities.exceptions import CoefficientError, InputError, SpringerIsoError

from .maps import SpringerCoefficients, inverse_springer_batch, solve_split, springer_batch
from .quasisplit import (
    DescentObstruction,
    anti_diagonal_w,
    dpsi_batch,
    psi_batch,
    recurrence_holds,
    solve_quasisplit_typeA,
)

logger = logging.getLogger(__name__)

SUITE_GRID: Tuple[Tuple[int, int], ...] = ((1, 2), (1, 3), (2, 2), (2, 3), (2, 4), (3, 3))


def field_spec(q: int) -> str:
    """Ring spec of F_q."""
    factors = factorint(q) if q > 1 else {}
    if len(factors) != 1:
        raise InputError(f"q must be a prime power, got {q}")
    (p, k), = factors.items()
    return f"F({p})" if k == 1 else f"F({p},{k})"


def jordan_block(R: FiniteRing, size: int) -> np.ndarray:
    """The regular unipotent: ones on the diagonal and the superdiagonal."""
    J = identity(R, size)
    J[np.arange(size - 1), np.arange(1, size)] = R.one
    return J


def _sample_unipotents(R: FiniteRing, size: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """The Jordan block followed by count - 1 random unipotents."""
    rest = random_unipotents(R, size, max(count - 1, 0), rng) if count > 1 else np.zeros((0, size, size), np.int64)
    return np.concatenate([jordan_block(R, size)[None], rest])


def _first_mismatch(R: FiniteRing, G: np.ndarray, left: np.ndarray, right: np.ndarray) -> Optional[str]:
    bad = ~np.all(left == right, axis=(-2, -1))
    if not bad.any():
        return None
    return format_matrix(R, G[int(bad.argmax())])


def _defaults(samples: Optional[int], seed: Optional[int]) -> Tuple[int, int]:
    env = get_environment_manager()
    samples = samples if samples is not None else env.get_var_as_int("SPRINGER_SAMPLES", 100)
    seed = seed if seed is not None else env.get_var_as_int("SPRINGER_SEED", 42)
    return samples, seed


def bijection_check(rec: CheckRecorder, coeffs: SpringerCoefficients, tag: str,
                    budget: Optional[int] = None, samples: Optional[int] = None,
                    seed: Optional[int] = None) -> bool:
    """
    rho maps the unipotents of SL_{n+1}(R) bijectively onto the nilpotents.

    Exhaustive while |R|^((n+1)^2) fits the budget; otherwise rho^-1(rho(g)) = g
    and rho(rho^-1(X)) = X are checked on samples.
    """
    budget = budget if budget is not None else get_environment_manager().get_var_as_int("SPRINGER_BUDGET", 1 << 24)
    samples, seed = _defaults(samples, seed)
    R, size = coeffs.ring, coeffs.size
    anchor = "rho is a bijection from unipotents onto nilpotents iff a_1 is a unit"
    if R.order ** (size * size) <= budget:
        N = enumerate_nilpotents(R, size, budget)
        images = springer_batch(coeffs, add_scalar(R, N, R.one))
        flat = np.unique(images.reshape(len(images), -1), axis=0)
        expected = np.unique(N.reshape(len(N), -1), axis=0)
        bijective = bool(nilpotent_mask(R, images).all()) and np.array_equal(flat, expected)
        return rec.record(f"springer.bijection.{tag}", anchor, bijective == coeffs.valid,
                          mode="exhaustive", nilpotents=len(N), images=len(flat), a1_unit=coeffs.valid)
    if not coeffs.valid:
        return rec.record(f"springer.bijection.{tag}", anchor, False, mode="sampled",
                          reason="a_1 is not a unit")
    rng = np.random.default_rng(seed)
    G = _sample_unipotents(R, size, samples, rng)
    X = springer_batch(coeffs, G)
    back = inverse_springer_batch(coeffs, X)
    nilpotents = mat_sub(R, random_unipotents(R, size, samples, rng), identity(R, size))
    forth = springer_batch(coeffs, inverse_springer_batch(coeffs, nilpotents))
    ok = (bool(nilpotent_mask(R, X).all()) and np.array_equal(back, G) and np.array_equal(forth, nilpotents))
    return rec.record(f"springer.bijection.{tag}", anchor, ok, mode="sampled", samples=len(G),
                      counterexample=_first_mismatch(R, G, back, G))


def equivariance_check(rec: CheckRecorder, coeffs: SpringerCoefficients, tag: str,
                       samples: Optional[int] = None, seed: Optional[int] = None) -> bool:
    """rho(h g h^-1) = h rho(g) h^-1 for sampled h in SL_{n+1} and unipotent g."""
    samples, seed = _defaults(samples, seed)
    R, size = coeffs.ring, coeffs.size
    rng = np.random.default_rng(seed)
    G = _sample_unipotents(R, size, samples, rng)
    H = random_group_elements(R, size, len(G), rng, "SL")
    H_inv, _ = inverse(R, H)
    left = springer_batch(coeffs, mat_mul(R, mat_mul(R, H, G), H_inv))
    right = mat_mul(R, mat_mul(R, H, springer_batch(coeffs, G)), H_inv)
    return rec.record(f"springer.equivariance.{tag}", "rho is equivariant for the conjugation action of SL_{n+1}",
                      bool(np.array_equal(left, right)), samples=len(G),
                      counterexample=_first_mismatch(R, G, left, right))


def _twisted_sides(coeffs: SpringerCoefficients, G: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    R, descent = coeffs.ring, coeffs.descent
    left = springer_batch(coeffs, psi_batch(R, descent.w, descent.apply(G)))
    right = dpsi_batch(R, descent.w, descent.apply(springer_batch(coeffs, G)))
    return left, right


def twisted_equivariance_check(rec: CheckRecorder, coeffs: SpringerCoefficients, tag: str,
                               samples: Optional[int] = None, seed: Optional[int] = None) -> bool:
    """
    rho(psi(sigma(g))) = dpsi(sigma(rho(g))) on sampled unipotents.

    Raises:
        InputError: If the coefficients carry no descent data.
    """
    if coeffs.descent is None:
        raise InputError("twisted equivariance needs quasi-split coefficients")
    samples, seed = _defaults(samples, seed)
    R = coeffs.ring
    G = _sample_unipotents(R, coeffs.size, samples, np.random.default_rng(seed))
    left, right = _twisted_sides(coeffs, G)
    return rec.record(f"springer.twisted.{tag}", "rho commutes with psi composed with the involution",
                      bool(np.array_equal(left, right)), samples=len(G), coefficients=coeffs.literals(),
                      counterexample=_first_mismatch(R, G, left, right))


def recurrence_check(rec: CheckRecorder, coeffs: SpringerCoefficients, tag: str) -> bool:
    holds = recurrence_holds(coeffs, coeffs.descent.table)
    return rec.record(f"springer.recurrence.{tag}", "(-1)^i sum C(i-1,j-1) a_j = -conj(a_i) for every i",
                      all(holds), coefficients=coeffs.literals(), holds=holds)


def corrupt_coefficients(coeffs: SpringerCoefficients, index: int) -> SpringerCoefficients:
    """
    Add to a_{index+1} an element d with sigma(d) != d and d + sigma(d) != 0.

    Without descent data d = 1.

    Raises:
        CoefficientError: For index 0 or out of range.
    """
    if not 1 <= index < coeffs.n:
        raise CoefficientError(f"only a_2..a_{coeffs.n} may be corrupted, got index {index}")
    R = coeffs.ring
    delta = R.one
    if coeffs.descent is not None:
        sigma = coeffs.descent.table
        codes = R.elements()
        moved = (sigma != codes) & (R.add_table[codes, sigma] != R.zero)
        if not moved.any():
            raise CoefficientError(f"the involution of {R.name} moves no suitable element")
        delta = int(np.argmax(moved))
    values = list(coeffs.coeffs)
    values[index] = int(R.add(values[index], delta))
    return coeffs.with_coeffs(values)


def negative_control_check(rec: CheckRecorder, coeffs: SpringerCoefficients, tag: str,
                           samples: Optional[int] = None, seed: Optional[int] = None) -> bool:
    """Corrupting any a_i with i >= 2 breaks twisted equivariance on the samples."""
    samples, seed = _defaults(samples, seed)
    R = coeffs.ring
    G = _sample_unipotents(R, coeffs.size, samples, np.random.default_rng(seed))
    detected = []
    for index in range(1, coeffs.n):
        left, right = _twisted_sides(corrupt_coefficients(coeffs, index), G)
        detected.append(not np.array_equal(left, right))
    return rec.record(f"springer.negative-control.{tag}",
                      "coefficients violating the recurrence break twisted equivariance",
                      all(detected), detected=detected)


def centralizer_match_check(rec: CheckRecorder, coeffs: SpringerCoefficients, tag: str,
                            budget: Optional[int] = None, workers: Optional[int] = None) -> bool:
    """Z(u) = Z(rho(u)) as point sets and as Lie centralizers for the regular block."""
    R, size = coeffs.ring, coeffs.size
    u = GroupElement(R, jordan_block(R, size), "SL")
    X = LieElement(R, springer_batch(coeffs, u.matrix), "sl")
    Zu = centralizer_points(u, budget=budget, workers=workers)
    ZX = centralizer_points(X, "SL", budget=budget, workers=workers)
    points_ok = rec.record(f"springer.centralizer-points.{tag}", "Z_G(u) = Z_G(X) for X = rho(u)",
                           Zu.same_points(ZX), points=Zu.count, method=Zu.method)
    Lu, LX = lie_centralizer(u, "sl"), lie_centralizer(X, "sl")
    commutant = lie_centralizer(u, "gl")
    toeplitz = all(_is_upper_toeplitz(B) for B in commutant.basis)
    lie_ok = rec.record(f"springer.centralizer-lie.{tag}",
                        "Lie centralizers of u and rho(u) agree; the commutant has constant diagonal and superdiagonals",
                        Lu.same_space(LX) and toeplitz and commutant.dimension_fp == size * R.dim,
                        dimension_fp=Lu.dimension_fp, commutant_dimension_fp=commutant.dimension_fp)
    return points_ok and lie_ok


def _is_upper_toeplitz(B: np.ndarray) -> bool:
    size = B.shape[0]
    if np.any(B[np.tril_indices(size, -1)]):
        return False
    return all(len(set(np.diagonal(B, k).tolist())) <= 1 for k in range(size))


def uniqueness_check(rec: CheckRecorder, coeffs: SpringerCoefficients, tag: str) -> bool:
    """rho(u) on the regular block determines a_1..a_n: (u - 1)^i fill disjoint superdiagonals."""
    R, size = coeffs.ring, coeffs.size
    X = springer_batch(coeffs, jordan_block(R, size))
    recovered = [int(X[0, i]) for i in range(1, size)]
    return rec.record(f"springer.uniqueness.{tag}", "a Springer map is determined by its value at u",
                      recovered == list(coeffs.coeffs), recovered=[R.format_element(c) for c in recovered])


def upper_triangular_check(rec: CheckRecorder, coeffs: SpringerCoefficients, tag: str,
                           samples: Optional[int] = None, seed: Optional[int] = None) -> bool:
    """rho sends upper unitriangular matrices to strictly upper-triangular ones."""
    samples, seed = _defaults(samples, seed)
    R, size = coeffs.ring, coeffs.size
    rng = np.random.default_rng(seed)
    U = np.zeros((samples, size, size), dtype=np.int64)
    iu = np.triu_indices(size, 1)
    U[:, iu[0], iu[1]] = rng.integers(0, R.order, size=(samples, len(iu[0])))
    X = springer_batch(coeffs, add_scalar(R, U, R.one))
    lower = np.tril_indices(size)
    return rec.record(f"springer.borel.{tag}", "rho restricts to U -> Lie U",
                      not np.any(X[:, lower[0], lower[1]]), samples=samples)


def psi_demonstration(rec: CheckRecorder, p: int = 3) -> bool:
    """u -> u - 1 commutes with psi on SL2(F_p) but not on SL3(F_p)."""
    R = make_ring(f"F({p})")
    commutes = {}
    for size in (2, 3):
        coeffs = solve_split(size - 1, R)
        U = enumerate_unipotents(R, size)
        w = anti_diagonal_w(R, size)
        left = springer_batch(coeffs, psi_batch(R, w, U))
        right = dpsi_batch(R, w, springer_batch(coeffs, U))
        commutes[f"SL{size}"] = bool(np.array_equal(left, right))
    return rec.record(f"springer.psi-demo.F{p}", "u -> u - 1 is psi-equivariant for SL2 only",
                      commutes["SL2"] and not commutes["SL3"], **commutes)


def commutativity_equivalence_check(rec: CheckRecorder, group: str, q: int,
                                    budget: Optional[int] = None, workers: Optional[int] = None) -> bool:
    """
    Z_G(u) is commutative over F_q and F_q[e] iff p does not divide |pi_1(G)|.

    group is SL<k> or PGL<k>; pi_1 is trivial for SL_k and of order k for PGL_k.

    Raises:
        InputError: For an unknown group name.
    """
    name = group.upper()
    flavor = "PGL" if name.startswith("PGL") else "SL" if name.startswith("SL") else None
    if flavor is None or not name[len(flavor):].isdigit():
        raise InputError(f"group must be SL<k> or PGL<k>, got {group!r}")
    size = int(name[len(flavor):])
    base = field_spec(q)
    R0 = make_ring(base)
    pi1 = size if flavor == "PGL" else 1
    expected = pi1 % R0.p != 0
    witness = {}
    commutative = True
    for spec in (base, f"{base}[e]/e^2"):
        R = make_ring(spec)
        u = GroupElement(R, jordan_block(R, size), flavor)
        Z = centralizer_points(u, budget=budget, workers=workers)
        pair = noncommuting_pair(Z)
        witness[spec] = {"points": Z.count, "method": Z.method,
                         "noncommuting_pair": None if pair is None else [format_matrix(R, h) for h in pair]}
        commutative = commutative and pair is None
    return rec.record(f"springer.commutativity.{name}.q{q}",
                      "Z_G(u) is commutative over all rings iff p does not divide |pi_1(G)|",
                      commutative == expected, pi1=pi1, p=R0.p, commutative=commutative, rings=witness)


def verify_springer(coeffs: SpringerCoefficients, samples: Optional[int] = None, seed: Optional[int] = None,
                    budget: Optional[int] = None, workers: Optional[int] = None, timings: bool = False,
                    tag: Optional[str] = None) -> List[CheckRecord]:
    """All checks for one coefficient vector; descent checks when it is quasi-split."""
    tag = tag or f"n{coeffs.n}.{coeffs.ring.name}"
    rec = CheckRecorder("springer", timings)
    rec.record(f"springer.valid.{tag}", "rho is an isomorphism iff a_1 is a unit", coeffs.valid,
               **coeffs.describe())
    bijection_check(rec, coeffs, tag, budget, samples, seed)
    if not coeffs.valid:
        return rec.checks
    equivariance_check(rec, coeffs, tag, samples, seed)
    uniqueness_check(rec, coeffs, tag)
    upper_triangular_check(rec, coeffs, tag, samples, seed)
    try:
        centralizer_match_check(rec, coeffs, tag, budget, workers)
    except SpringerIsoError as e:
        rec.record(f"springer.centralizer-points.{tag}", "Z_G(u) = Z_G(X) for X = rho(u)", False, error=str(e))
    if coeffs.descent is not None:
        recurrence_check(rec, coeffs, tag)
        twisted_equivariance_check(rec, coeffs, tag, samples, seed)
        if coeffs.n > 1:
            negative_control_check(rec, coeffs, tag, samples, seed)
    return rec.checks


def quasisplit_bundle(n: int, q: int, samples: Optional[int] = None, seed: Optional[int] = None,
                      timings: bool = False) -> List[CheckRecord]:
    """Solve over F_{q^2}/F_q and check recurrence, twisted equivariance and the negative control."""
    base = make_ring(field_spec(q))
    p, k = base.p, base.field_degree
    extension = make_ring(f"F({p},{2 * k})")
    rec = CheckRecorder("springer", timings)
    tag = f"n{n}.q{q}.quasisplit"
    solved = solve_quasisplit_typeA(n, base, extension)
    if isinstance(solved, DescentObstruction):
        rec.record(f"springer.recurrence.{tag}", "quadratic descent coefficients exist", False,
                   obstruction=solved.reason)
        return rec.checks
    recurrence_check(rec, solved, tag)
    twisted_equivariance_check(rec, solved, tag, samples, seed)
    if n > 1:
        negative_control_check(rec, solved, tag, samples, seed)
    return rec.checks


def obstruction_check(rec: CheckRecorder, n: int = 2) -> bool:
    """With trivial involution in characteristic 2 there are no descent coefficients for n >= 2."""
    F2 = make_ring("F(2)")
    solved = solve_quasisplit_typeA(n, F2, F2)
    obstructed = isinstance(solved, DescentObstruction)
    return rec.record(f"springer.obstruction.n{n}", "no coefficients exist in characteristic 2 with trivial involution",
                      obstructed, reason=solved.reason if obstructed else None)


def springer_suite(samples: Optional[int] = None, seed: Optional[int] = None, budget: Optional[int] = None,
                   workers: Optional[int] = None, timings: bool = False,
                   grid: Sequence[Tuple[int, int]] = SUITE_GRID) -> List[CheckRecord]:
    """Split and quasi-split checks over the grid of (n, q), the obstruction and the psi demonstration."""
    checks: List[CheckRecord] = []
    for n, q in grid:
        R = make_ring(field_spec(q))
        tag = f"n{n}.q{q}"
        checks.extend(verify_springer(solve_split(n, R), samples, seed, budget, workers, timings, tag))
        checks.extend(quasisplit_bundle(n, q, samples, seed, timings))
    rec = CheckRecorder("springer", timings)
    obstruction_check(rec)
    psi_demonstration(rec)
    try:
        solve_split(2, make_ring("F(2)"), 0)
        rec.record("springer.split-rejects-nonunit", "a_1 = 0 gives no isomorphism", False)
    except CoefficientError:
        rec.record("springer.split-rejects-nonunit", "a_1 = 0 gives no isomorphism", True)
    checks.extend(rec.checks)
    logger.info("springer suite: %d checks", len(checks))
    return checks


def commutativity_suite(budget: Optional[int] = None, workers: Optional[int] = None,
                        timings: bool = False) -> List[CheckRecord]:
    """Commutativity of regular unipotent centralizers against |pi_1|."""
    rec = CheckRecorder("commutativity", timings)
    for group, q in (("SL2", 2), ("SL2", 4), ("PGL2", 2), ("SL3", 3), ("PGL3", 3)):
        try:
            commutativity_equivalence_check(rec, group, q, budget, workers)
        except SpringerIsoError as e:
            rec.record(f"springer.commutativity.{group}.q{q}",
                       "Z_G(u) is commutative over all rings iff p does not divide |pi_1(G)|", False, error=str(e))
    return rec.checks
