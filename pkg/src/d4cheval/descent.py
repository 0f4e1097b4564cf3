"""
Coefficients a1 E1 + a2 E2 + a3 E3 + a4 E4 that descend along a Galois algebra.

The Galois algebra R' over F_q carries generators acting on R' (Frobenius
powers, the factor swap) and an image of each generator among the triality
automorphisms lambda and mu. Writing phi(E_j) = sum_i M[i][j] E_i, the
coefficients descend when a_i = sum_j M[i][j] g(a_j) for every generator g.

  - split: R' = F_q with no generators; every coefficient vector descends.
  - c2: R' = F_{q^2}, tau = Frobenius^f, tau -> lambda.
  - c3: R' = F_{q^3}, sigma = Frobenius^f, sigma -> mu.
  - s3: R' = F_{q^3} x F_{q^3}, sigma = (F, F^-1), tau = swap,
    sigma -> mu, tau -> lambda.
"""

import logging
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, Field
from sympy import factorint

from src.matrings.rings import FiniteRing, make_ring
from src.utilities.exceptions import CoefficientError, DescentError, InputError

from .algebra import coefficient_field, to_fraction, triality_on_e

logger = logging.getLogger(__name__)

DESCENT_CASES = ("split", "c2", "c3", "s3")


class RelationCheck(BaseModel):
    """One coordinate of the descent condition for one generator."""

    generator: str
    image: str
    index: int
    lhs: str
    rhs: str
    holds: bool


class DescentCase(BaseModel):
    """
    A D4 descent problem and, once solved, its coefficients.

    Attributes:
        case: split, c2, c3 or s3.
        q: Order of the base field.
        algebra: Ring spec of the Galois algebra R'.
        generators: Automorphism spec on R' per generator name.
        images: Triality image per generator name.
        coefficients: a1..a4 as element literals of R', empty until solved.
        relations: Every coordinate of the descent condition, evaluated.
        details: Case-specific facts about the solution.
    """

    case: str
    q: int
    algebra: str
    generators: Dict[str, str]
    images: Dict[str, str]
    coefficients: List[str] = Field(default_factory=list)
    a1_unit: bool = False
    relations: List[RelationCheck] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)
    valid: bool = False


def _field_spec(p: int, k: int) -> str:
    return f"F({p})" if k == 1 else f"F({p},{k})"


def _odd_prime_power(q: int):
    factors = factorint(q) if q > 1 else {}
    if len(factors) != 1:
        raise CoefficientError(f"q must be a prime power, got {q}")
    (p, f), = factors.items()
    if p == 2:
        raise CoefficientError("descent needs q odd so that 2 is invertible")
    return int(p), int(f)


def descent_skeleton(case: str, q: int = 3) -> DescentCase:
    """
    The Galois algebra and automorphism images for a case.

    Raises:
        InputError: For an unknown case.
        CoefficientError: If q is not an odd prime power.
    """
    p, f = _odd_prime_power(q)
    field3 = _field_spec(p, 3 * f)
    if case == "split":
        return DescentCase(case=case, q=q, algebra=_field_spec(p, f), generators={}, images={})
    if case == "c2":
        return DescentCase(case=case, q=q, algebra=_field_spec(p, 2 * f),
                           generators={"tau": f"frob^{f}"}, images={"tau": "lambda"})
    if case == "c3":
        return DescentCase(case=case, q=q, algebra=field3,
                           generators={"sigma": f"frob^{f}"}, images={"sigma": "mu"})
    if case == "s3":
        return DescentCase(case=case, q=q, algebra=f"{field3}x{field3}",
                           generators={"sigma": f"(frob^{f},frob^-{f})", "tau": "swap"},
                           images={"sigma": "mu", "tau": "lambda"})
    raise InputError(f"unknown descent case {case!r}; use one of {', '.join(DESCENT_CASES)}")


def _image_matrix(R: FiniteRing, name: str) -> List[List[int]]:
    K = coefficient_field(R.p)
    M = triality_on_e(K, name)
    return [[R.from_int(int(to_fraction(K, x))) for x in row] for row in M]


def verify_relations(case: DescentCase, R: FiniteRing, tables: Dict[str, np.ndarray],
                     coeffs: List[int]) -> List[RelationCheck]:
    """Evaluate a_i against sum_j M[i][j] g(a_j) for every generator g and every i."""
    checks = []
    for name, table in tables.items():
        image = case.images[name]
        M = _image_matrix(R, image)
        moved = [int(table[a]) for a in coeffs]
        for i in range(4):
            rhs = R.sum([R.mul(M[i][j], moved[j]) for j in range(4)])
            checks.append(RelationCheck(generator=name, image=image, index=i + 1,
                                        lhs=R.format_element(coeffs[i]), rhs=R.format_element(rhs),
                                        holds=int(coeffs[i]) == int(rhs)))
    return checks


def _fixed_by_all(tables: Dict[str, np.ndarray], code: int) -> bool:
    return all(int(t[code]) == code for t in tables.values())


def _trace_preimage(R: FiniteRing, sigma: np.ndarray, target: int, mask: Optional[np.ndarray] = None) -> int:
    """Least code c (within mask) with c + sigma(c) + sigma^2(c) = target."""
    codes = R.elements()
    add = R.add_table
    traces = add[add[codes, sigma[codes]], sigma[sigma[codes]]]
    hits = traces == target
    if mask is not None:
        hits &= mask
    if not hits.any():
        raise DescentError(f"no element of {R.name} has trace {R.format_element(target)}")
    return int(np.argmax(hits))


def d4_descent_solve(case: DescentCase, a1: str = "1", a4: str = "0", a2: str = "0",
                     a3: str = "0") -> DescentCase:
    """
    Solve the descent condition for a skeleton from descent_skeleton.

    a1 and a4 must be fixed by the Galois action and a1 must be a unit. In the
    split case a2 and a3 are taken as given. In the c2 case a2 is free and
    a3 = tau(a2). In the c3 and s3 cases a3 is a trace preimage of -a1/2
    (taken in the tau.sigma-fixed subring for s3) and a2 = sigma(a3).

    Raises:
        CoefficientError: If a1 is not a fixed unit or a4 is not fixed.
        DescentError: If the trace equation has no solution.
    """
    R = make_ring(case.algebra)
    tables = {name: R.automorphism(spec) for name, spec in case.generators.items()}
    c1, c4 = R.parse_element(a1), R.parse_element(a4)
    if not R.is_unit(c1) or not _fixed_by_all(tables, c1):
        raise CoefficientError(f"a1 = {a1} must be a unit of the base field F_{case.q}")
    if not _fixed_by_all(tables, c4):
        raise CoefficientError(f"a4 = {a4} must lie in the base field F_{case.q}")

    details: Dict[str, Any] = {}
    if case.case == "split":
        c2, c3 = R.parse_element(a2), R.parse_element(a3)
    elif case.case == "c2":
        c2 = R.parse_element(a2)
        c3 = int(tables["tau"][c2])
    else:
        sigma = tables["sigma"]
        target = R.neg(R.mul(R.inv(R.from_int(2)), c1))
        mask = None
        if case.case == "s3":
            tau_sigma = tables["tau"][sigma]
            mask = tau_sigma == R.elements()
        c3 = _trace_preimage(R, sigma, target, mask)
        c2 = int(sigma[c3])
        details["trace_target"] = R.format_element(target)
        details["trace"] = R.format_element(R.sum([c3, int(sigma[c3]), int(sigma[sigma[c3]])]))
        if case.case == "s3":
            details["a3_fixed_by_tau_sigma"] = bool(int(tables["tau"][sigma[c3]]) == c3)

    coeffs = [int(c1), int(c2), int(c3), int(c4)]
    relations = verify_relations(case, R, tables, coeffs)
    solved = case.model_copy(update={
        "coefficients": [R.format_element(c) for c in coeffs],
        "a1_unit": R.is_unit(c1),
        "relations": relations,
        "details": details,
        "valid": all(r.holds for r in relations) and R.is_unit(c1),
    })
    logger.debug("descent %s over %s: %s", case.case, R.name, solved.coefficients)
    return solved


def solve_descent(case: str, q: int = 3, a1: str = "1", a4: str = "0", a2: str = "0",
                  a3: str = "0") -> DescentCase:
    return d4_descent_solve(descent_skeleton(case, q), a1=a1, a4=a4, a2=a2, a3=a3)
