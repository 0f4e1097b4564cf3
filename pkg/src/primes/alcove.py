"""
Subsystems attached to the vertices of the fundamental alcove.

The vertex v_i is cut out by alpha_j(v_i) = 0 for j != i and alpha_i(v_i) =
1/n_i. A root beta = sum p_m alpha_m is integral at v_i exactly when n_i
divides p_i, i.e. p_i is 0 or +-n_i, and these roots form the subsystem with
base (Delta minus alpha_i) plus the lowest root.
"""

import logging
from math import prod
from typing import List

from pydantic import BaseModel
from sympy import primefactors

from src.intlinalg import IntegerMatrix, quotient_torsion
from src.rootdata import RootSystem, dual_highest_root_coeffs, highest_root_coeffs

from .subsystems import subsystem_from_base

logger = logging.getLogger(__name__)


class AlcoveVertex(BaseModel):
    """Data for one alcove vertex; vertex is the 1-based node index."""

    vertex: int
    subsystem: str
    positive_roots: int
    n: int
    n_dual: int
    root_quotient: List[int]
    coroot_quotient: List[int]
    cyclic: bool
    order_matches: bool
    dual_order_matches: bool
    dual_divides: bool
    integral_roots_match: bool
    coroot_primes_divide_n: bool

    @property
    def passed(self) -> bool:
        return (self.cyclic and self.order_matches and self.dual_order_matches
                and self.dual_divides and self.integral_roots_match
                and self.coroot_primes_divide_n)


def alcove_vertex_subsystems(rs: RootSystem) -> List[AlcoveVertex]:
    """
    The integral subsystem of every alcove vertex, with its lattice quotients.

    For each vertex the torsion of ZPhi/ZPhi_i must be cyclic of order n_i and
    the coroot quotient must have order n_i^vee dividing n_i. The coroot
    quotient is also the quotient X_*/ZPhi_i^vee of the simply connected
    datum, so its primes must divide n_i.
    """
    theta = highest_root_coeffs(rs)
    theta_dual = dual_highest_root_coeffs(rs)
    lowest = tuple(-x for x in theta)
    ambient = IntegerMatrix.identity(rs.rank)
    vertices = []
    for i in range(rs.rank):
        base = [rs.simple_root(j) for j in range(rs.rank) if j != i] + [lowest]
        sub = subsystem_from_base(rs, base, (f"alcove:{i + 1}",))

        root_q = quotient_torsion(ambient, IntegerMatrix.from_columns(base))
        coroot_q = quotient_torsion(
            ambient, IntegerMatrix.from_columns([rs.coroot_coefficients(b) for b in base]))

        integral = {k for k, beta in enumerate(rs.positive_roots) if beta[i] % theta[i] == 0}
        n, n_dual = theta[i], theta_dual[i]
        vertex = AlcoveVertex(
            vertex=i + 1,
            subsystem=sub.label,
            positive_roots=len(sub.positive),
            n=n,
            n_dual=n_dual,
            root_quotient=root_q,
            coroot_quotient=coroot_q,
            cyclic=len(root_q) <= 1,
            order_matches=prod(root_q) == n,
            dual_order_matches=prod(coroot_q) == n_dual,
            dual_divides=n % n_dual == 0,
            integral_roots_match=integral == set(sub.positive),
            coroot_primes_divide_n=all(n % p == 0 for p in primefactors(prod(coroot_q))),
        )
        logger.debug("alcove vertex %d of %s: %s, quotient %s", i + 1, rs.label, sub.label, root_q)
        vertices.append(vertex)
    return vertices
