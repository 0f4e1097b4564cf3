"""The D4 verification suite run by `verify-d4`."""

import logging
from typing import List

from src.reporting import CheckRecord, CheckRecorder
from src.utilities.exceptions import SpringerIsoError

from .algebra import (
    LieUVector,
    ad_square_vanishes,
    ad_u_action,
    ad_u_matrix,
    coefficient_field,
    e_basis,
    expected_triality_on_e,
    fixed_space_basis,
    identity_matrix,
    jacobi_failures,
    matmul,
    nilpotency_degree,
    regular_u,
    triality_matrix,
    triality_on_e,
)
from .descent import DESCENT_CASES, solve_descent
from .table import A1, A2, A3, A4, HIGHEST, d4_structure_constants, root_label

logger = logging.getLogger(__name__)

FIXED_SPACE_CHARACTERISTICS = (0, 3, 5, 7)
JACOBI_CHARACTERISTICS = (0, 5)


def _field_name(p: int) -> str:
    return "Q" if p == 0 else f"F{p}"


def verify_d4(timings: bool = False, descent_q: int = 3) -> List[CheckRecord]:
    """Every D4 check: table, brackets, Ad(u), fixed space, triality and descent."""
    rec = CheckRecorder("d4", timings)
    try:
        table = d4_structure_constants()
        rec.record("d4.table.complete", "the 16 commutator relations cover every pair of positive roots summing to a root",
                   table.relation_count() == 16, relations=table.relation_count())
        rec.record("d4.table.examples", "[X_a1, X_a2] = X_a1+a2, [X_a2+a4, X_a1+a2+a3] = X_highest, [X_a1, X_a3] = 0",
                   table.constant(A1, A2) == 1 and table.constant((0, 1, 0, 1), (1, 1, 1, 0)) == 1
                   and table.constant(A1, A3) == 0 and table.constant(A2, A1) == -1)
    except SpringerIsoError as e:
        rec.record("d4.table.complete", "the 16 commutator relations are a complete table", False, error=str(e))
        return rec.checks

    for p in JACOBI_CHARACTERISTICS:
        K = coefficient_field(p)
        failures = jacobi_failures(K)
        rec.record(f"d4.jacobi.{_field_name(p)}", "the bracket on Lie U satisfies the Jacobi identity",
                   not failures, failures=[list(f) for f in failures[:5]])

    Q = coefficient_field(0)
    rec.record("d4.ad-square", "(ad X_alpha)^2 X_beta = 0 for alpha != beta", ad_square_vanishes(Q))

    step = ad_u_action([(A1, 1)], LieUVector.root_vector(Q, A2))
    expected = LieUVector.from_terms(Q, {A2: 1, (1, 1, 0, 0): 1})
    rec.record("d4.root-group", "Ad(x_a1(1)) X_a2 = X_a2 + X_a1+a2", step == expected, image=step.terms())

    word = regular_u()
    rec.record("d4.regular-u", "u = x_a1(1) x_a3(1) x_a4(1) x_a2(1)",
               [alpha for alpha, _ in word] == [A1, A3, A4, A2] and all(t == 1 for _, t in word),
               word=[root_label(alpha) for alpha, _ in word])

    Ad = ad_u_matrix(Q, word)
    degree = nilpotency_degree(Q, Ad)
    rec.record("d4.ad-u-unipotent", "Ad(u) is unipotent on Lie U", degree > 0, nilpotency_degree=degree)

    fixed = [ad_u_action(word, e) == e for e in e_basis(Q)]
    rec.record("d4.e-fixed", "Ad(u) fixes E1, E2, E3 and E4", all(fixed), fixed=fixed)

    for p in FIXED_SPACE_CHARACTERISTICS:
        K = coefficient_field(p)
        try:
            basis = fixed_space_basis(K)
            rec.record(f"d4.fixed-space.{_field_name(p)}", "Lie Z_U(u) is free of rank 4 with basis E1..E4",
                       True, dimension=len(basis))
        except SpringerIsoError as e:
            rec.record(f"d4.fixed-space.{_field_name(p)}", "Lie Z_U(u) is free of rank 4 with basis E1..E4",
                       False, error=str(e))

    for p in (0, 7):
        K = coefficient_field(p)
        for name in ("lambda", "mu"):
            try:
                ok = triality_on_e(K, name) == expected_triality_on_e(K, name)
                error = None
            except SpringerIsoError as e:
                ok, error = False, str(e)
            rec.record(f"d4.triality.{name}.{_field_name(p)}",
                       f"{name} acts on E1..E4 by the displayed matrix", ok, error=error)

    try:
        lam, mu = triality_matrix(Q, "lambda"), triality_matrix(Q, "mu")
        one = identity_matrix(Q)
        mu3 = matmul(Q, mu, matmul(Q, mu, mu))
        conj = matmul(Q, lam, matmul(Q, mu, lam))
        rec.record("d4.triality.orders", "lambda^2 = 1, mu^3 = 1 and lambda mu lambda = mu^-1",
                   matmul(Q, lam, lam) == one and mu3 == one and matmul(Q, conj, mu) == one)
        fixed_highest = all(triality_matrix(Q, n)[11][11] == Q.one for n in ("lambda", "mu"))
        rec.record("d4.triality.highest", "both triality maps fix X_highest", fixed_highest,
                   highest=root_label(HIGHEST))
    except SpringerIsoError as e:
        rec.record("d4.triality.orders", "lambda and mu are bracket automorphisms", False, error=str(e))

    for case in DESCENT_CASES:
        try:
            solved = solve_descent(case, descent_q)
            rec.record(f"d4.descent.{case}", "descended coefficients satisfy the relation system exactly",
                       solved.valid, algebra=solved.algebra, coefficients=solved.coefficients,
                       **solved.details)
        except SpringerIsoError as e:
            rec.record(f"d4.descent.{case}", "descended coefficients satisfy the relation system exactly",
                       False, error=str(e))
    logger.info("d4 suite: %d checks", len(rec.checks))
    return rec.checks
