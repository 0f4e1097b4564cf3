"""
Verification suites built on the ring and matrix layer.

  - nilpotent_translate_check: the nilpotent cone of sl_n is stable under
    adding scalars from ker[p^m], and those are the only scalars that keep a
    nilpotent nilpotent.
  - center_character_check: exterior-power characters of SL_{r+1} are
    constant on the infinitesimal part of the centre.
  - pgl2_char2_suite: unipotents, centralizers and commutativity for SL2
    and PGL2 in characteristic 2.
  - jordan_suite: Jordan parts of every element of SL2(F_q), and the
    centralizer of g as the centralizer of u inside that of t.
"""

import logging
from math import comb
from typing import List, Optional, Sequence

import numpy as np

from src.reporting import CheckRecord, CheckRecorder
from src.utilities.environment_manager import get_environment_manager
from src.utilities.exceptions import InputError
from src.utilities.validation import validate_index, validate_positive, validate_prime

from .centralizers import centralizer_points, commutes_with, noncommuting_pair
from .matrices import (
    GroupElement,
    add_scalar,
    all_matrices,
    det,
    format_matrix,
    identity,
    mat_sub,
    pgl_canonical,
    trace,
)
from .rings import make_ring
from .unipotent import (
    enumerate_nilpotents,
    is_semisimple,
    is_unipotent,
    jordan_decomposition,
    nilpotent_mask,
    projective_point_counts,
    random_unipotents,
    unipotent_mask,
)

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 1 << 16
TORSOR_CHUNK = 1 << 10

_U = [[1, 1], [0, 1]]


def _p_power(n: int, p: int) -> int:
    m = 0
    while n % p == 0:
        n //= p
        m += 1
    return m


def nilpotent_translate_check(n: int, p: int, samples: Optional[int] = None, seed: Optional[int] = None,
                              exhaustive_limit: int = EXHAUSTIVE_LIMIT,
                              timings: bool = False) -> List[CheckRecord]:
    """
    Check that X + a·1 stays nilpotent over F_p[a]/(a^(p^m)), p^m exactly dividing n.

    When |R|^(n^2) is within exhaustive_limit every nilpotent over the whole
    ring R is enumerated. Otherwise nilpotents with F_p entries are taken
    exhaustively (if p^(n^2) fits) and random conjugates of strictly
    upper-triangular matrices over R are added. For every matrix in the set
    each scalar c is tried: X + c·1 must be nilpotent exactly when c^(p^m) = 0.

    Raises:
        InputError: If p does not divide n.
    """
    validate_prime(p)
    validate_positive(n, "n")
    if n % p:
        raise InputError(f"{p} does not divide {n}")
    env = get_environment_manager()
    samples = samples if samples is not None else env.get_var_as_int("SPRINGER_SAMPLES", 100)
    seed = seed if seed is not None else env.get_var_as_int("SPRINGER_SEED", 42)
    m = _p_power(n, p)
    pm = p ** m
    R = make_ring(f"F({p})[a]/a^{pm}")
    a = R.symbols["a"]
    rec = CheckRecorder("translate", timings)
    tag = f"n{n}.p{p}"

    nonvanishing = [i for i in range(1, pm) if comb(n, i) % p]
    rec.record(f"translate.binomial.{tag}", "C(n,i) = 0 mod p for 0 < i < p^m when p^m divides n",
               not nonvanishing, n=n, p=p, m=m, nonvanishing=nonvanishing)

    exhaustive = R.order ** (n * n) <= exhaustive_limit
    if exhaustive:
        X = enumerate_nilpotents(R, n, budget=exhaustive_limit)
        enumerated = R.name
    else:
        rng = np.random.default_rng(seed)
        parts = []
        enumerated = None
        if p ** (n * n) <= exhaustive_limit:
            parts.append(enumerate_nilpotents(make_ring(f"F({p})"), n, budget=exhaustive_limit))
            enumerated = f"F({p})"
        jordan = np.zeros((1, n, n), dtype=np.int64)
        jordan[0, np.arange(n - 1), np.arange(1, n)] = R.one
        parts.append(jordan)
        parts.append(mat_sub(R, random_unipotents(R, n, samples, rng), identity(R, n)))
        X = np.concatenate(parts)

    shifted = add_scalar(R, X, a)
    ok = nilpotent_mask(R, shifted)
    failures = X[~ok][:3]
    rec.record(f"translate.stable.{tag}", "nilpotent X gives nilpotent X + a over F_p[a]/(a^(p^m))",
               bool(ok.all()) and bool(nilpotent_mask(R, X).all()),
               ring=R.name, checked=len(X), exhaustive=exhaustive, enumerated_over=enumerated,
               counterexamples=[format_matrix(R, x) for x in failures])

    killed = np.array([R.power(int(c), pm) == R.zero for c in R.elements()])
    mismatches = 0
    for start in range(0, len(X), TORSOR_CHUNK):
        block = X[start:start + TORSOR_CHUNK]
        translates = add_scalar(R, np.repeat(block, R.order, axis=0), np.tile(R.elements(), len(block)))
        hits = nilpotent_mask(R, translates).reshape(len(block), R.order)
        mismatches += int(np.count_nonzero(hits != killed))
    rec.record(f"translate.torsor.{tag}",
               "nilpotents equal modulo scalars differ by a point of ker[p^m]",
               mismatches == 0, checked=len(X), exhaustive=exhaustive, mismatches=mismatches,
               kernel_points=int(killed.sum()))
    logger.debug("translate check n=%d p=%d over %s: %d matrices", n, p, R.name, len(X))
    return rec.checks


def center_character_check(r: int, p: int, i: int) -> CheckRecord:
    """
    Constancy of the i-th exterior-power character on mu_{p^k} inside SL_{r+1}.

    The centre acts on the i-th exterior power by zeta^i, so the character is
    C(r+1, i)·zeta^i. It is evaluated at the generic point zeta = 1 + z of
    F_p[z]/(z^(p^k)), p^k exactly dividing r+1, and compared with the
    arithmetic criterion (p^k | i or p | C(r+1, i)). The coefficient C(r, i)
    is evaluated too and reported separately.

    Raises:
        InputError: If p does not divide r+1 or i is out of range.
    """
    validate_prime(p)
    validate_positive(r, "r")
    validate_index(i, r)
    if (r + 1) % p:
        raise InputError(f"{p} does not divide {r + 1}")
    pk = p ** _p_power(r + 1, p)
    R = make_ring(f"F({p})[z]/z^{pk}")
    zeta = int(R.add(R.one, R.symbols["z"]))
    moved = int(R.sub(R.power(zeta, i), R.one))

    def constant_with(binomial: int) -> bool:
        return int(R.mul(R.from_int(binomial), moved)) == R.zero

    dimension = comb(r + 1, i)
    constant = constant_with(dimension)
    predicted = i % pk == 0 or dimension % p == 0
    return CheckRecord(
        id=f"center.r{r}.p{p}.i{i}",
        anchor="exterior-power characters of SL_{r+1} are constant on the identity component of the centre",
        passed=constant and constant == predicted,
        witness={
            "ring": R.name,
            "dimension": dimension,
            "constant": constant,
            "criterion": predicted,
            "printed_coefficient": comb(r, i),
            "constant_with_printed_coefficient": constant_with(comb(r, i)),
        },
    )


def center_character_suite(r: int, p: int) -> List[CheckRecord]:
    return [center_character_check(r, p, i) for i in range(1, r + 1)]


def _pgl2_equation_set(R) -> np.ndarray:
    """Invertible PGL2 cosets with c^2 = 0 and a^2 = ad + bc + ac."""
    M = all_matrices(R, 2)
    M = M[R.unit_mask[det(R, M)]]
    M = M[np.all(pgl_canonical(R, M) == M, axis=(1, 2))]
    a, b, c, d = M[:, 0, 0], M[:, 0, 1], M[:, 1, 0], M[:, 1, 1]
    mul, add = R.mul_table, R.add_table
    rhs = add[add[mul[a, d], mul[b, c]], mul[a, c]]
    keep = (mul[c, c] == R.zero) & (mul[a, a] == rhs)
    return np.unique(M[keep].reshape(-1, 4), axis=0).reshape(-1, 2, 2)


def pgl2_char2_suite(qs: Sequence[int] = (2, 4, 8), dual_qs: Sequence[int] = (2, 4),
                     budget: Optional[int] = None, workers: Optional[int] = None,
                     timings: bool = False) -> List[CheckRecord]:
    """
    SL2 and PGL2 in characteristic 2.

    For each q: unipotents of SL2(F_q) are the trace-zero elements; PGL2(F_q)
    has q^2 unipotent cosets, the points of P^2 off the conic a^2 = bc; the
    centralizer of u = [[1,1],[0,1]] in PGL2(F_q) is commutative. Over
    F_2[e] the PGL2 centralizer is cut out by c^2 = 0, a^2 = ad + bc + ac and
    is not commutative, while SL2 centralizers stay commutative over F_q and
    F_q[e].
    """
    rec = CheckRecorder("pgl2", timings)
    for q in qs:
        k = q.bit_length() - 1
        if 2 ** k != q:
            raise InputError(f"q must be a power of 2, got {q}")
        R = make_ring(f"F(2,{k})" if k > 1 else "F(2)")
        M = all_matrices(R, 2)
        S = M[det(R, M) == R.one]
        unip = unipotent_mask(R, S)
        trace_zero = trace(R, S) == R.zero
        rec.record(f"pgl2.sl2-unipotents.q{q}", "unipotents of SL2 in characteristic 2 are the trace-zero elements",
                   bool(np.array_equal(unip, trace_zero)), q=q, unipotents=int(unip.sum()))

        counts = projective_point_counts(R)
        rec.record(f"pgl2.unipotent-count.q{q}", "PGL2 unipotent variety is P^2 minus the conic a^2 = bc",
                   counts["pgl2_unipotents"] == q * q == counts["complement"], **counts)

        u = GroupElement(R, np.array(_U) * R.one, "PGL")
        Z = centralizer_points(u, budget=budget, workers=workers)
        pair = noncommuting_pair(Z)
        rec.record(f"pgl2.field-commutative.q{q}",
                   "at field points the PGL2 unipotent centralizer is commutative",
                   pair is None, q=q, points=Z.count)

    R = make_ring("F(2)[e]/e^2")
    u = GroupElement(R, np.array(_U) * R.one, "PGL")
    Z = centralizer_points(u, budget=budget, workers=workers)
    expected = _pgl2_equation_set(R)
    rec.record("pgl2.dual-equations", "Z_PGL2(u)(F_2[e]) = {c^2 = 0, a^2 = ad + bc + ac}",
               bool(np.array_equal(Z.points, expected)), points=Z.count, equation_points=len(expected))
    pair = noncommuting_pair(Z)
    rec.record("pgl2.dual-noncommutative", "Z_PGL2(u)(F_2[e]) contains a non-commuting pair",
               pair is not None,
               pair=[format_matrix(R, h) for h in pair] if pair is not None else None)

    for q in dual_qs:
        k = q.bit_length() - 1
        base = f"F(2,{k})" if k > 1 else "F(2)"
        for spec in (base, f"{base}[e]/e^2"):
            R = make_ring(spec)
            u = GroupElement(R, np.array(_U) * R.one, "SL")
            Z = centralizer_points(u, budget=budget, workers=workers)
            rec.record(f"pgl2.sl2-commutative.{spec}", "Z_SL2(u) is commutative since pi_1(SL2) is trivial",
                       noncommuting_pair(Z) is None, ring=spec, points=Z.count)
    return rec.checks


def _sl_points(R, n: int) -> List[GroupElement]:
    M = all_matrices(R, n)
    return [GroupElement(R, g, "SL") for g in M[det(R, M) == R.one]]


def jordan_suite(specs: Sequence[str] = ("F(3)", "F(2,2)"), centralizer_specs: Sequence[str] = ("F(3)",),
                 budget: Optional[int] = None, workers: Optional[int] = None,
                 timings: bool = False) -> List[CheckRecord]:
    """
    Jordan decomposition over every element of SL2(F_q).

    For each g = t·u the parts must commute, multiply back to g, and be
    semisimple and unipotent respectively. Over centralizer_specs the
    centralizer of g must be the centralizer of u inside Z(t).
    """
    rec = CheckRecorder("jordan", timings)
    for spec in specs:
        R = make_ring(spec)
        bad = []
        elements = _sl_points(R, 2)
        for g in elements:
            t, u = jordan_decomposition(g)
            if not (t * u == g and t * u == u * t and is_unipotent(u) and is_semisimple(t)):
                bad.append(g.to_literal())
        rec.record(f"jordan.parts.{spec}", "g = t·u with t semisimple, u unipotent and t·u = u·t",
                   not bad, ring=R.name, elements=len(elements), failures=bad[:3])

    for spec in centralizer_specs:
        R = make_ring(spec)
        bad = []
        elements = _sl_points(R, 2)
        for g in elements:
            t, u = jordan_decomposition(g)
            Zg = centralizer_points(g, budget=budget, workers=workers)
            Zt = centralizer_points(t, budget=budget, workers=workers)
            inside = Zt.points[commutes_with(R, Zt.points, u.matrix, "SL")]
            if not np.array_equal(Zg.points, inside):
                bad.append(g.to_literal())
        rec.record(f"jordan.centralizer.{spec}", "Z_G(g) = Z_{Z_G(t)}(u) for g = t·u",
                   not bad, ring=R.name, elements=len(elements), failures=bad[:3])
    logger.debug("jordan suite over %s", ", ".join(specs))
    return rec.checks
