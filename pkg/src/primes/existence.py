"""Existence of Springer isomorphisms for a root datum in a given characteristic."""

import logging
from typing import List

from pydantic import BaseModel

from src.utilities.validation import validate_characteristic

from .classify import bad_primes
from .datum import RootDatum, fundamental_group_order

logger = logging.getLogger(__name__)


class SpringerExistence(BaseModel):
    """Decision on the existence of a Springer isomorphism in characteristic p."""

    root_type: str
    isogeny: str
    p: int
    exists: bool
    fundamental_group_order: int
    bad_primes: List[int]
    reasons: List[str]


def springer_exists(rd: RootDatum, p: int) -> SpringerExistence:
    """
    Decide existence of a Springer isomorphism over a base of characteristic p.

    It exists iff |pi_1| is invertible (p does not divide it) and p is zero or
    good for the root system. The central torus rank plays no part.

    Args:
        rd: The root datum.
        p: A prime, or 0 for characteristic zero.

    Raises:
        InputError: If p is neither zero nor prime.
    """
    validate_characteristic(p)
    rs = rd.root_system
    order = fundamental_group_order(rd)
    bad = bad_primes(rs)
    reasons = []
    if p and order % p == 0:
        reasons.append(f"{p} divides |pi_1| = {order}")
    if p and p in bad:
        reasons.append(f"{p} is a bad prime for {rs.label}")
    logger.debug("existence for %s/%s at p=%d: %s", rs.label, rd.isogeny, p, reasons or "ok")
    return SpringerExistence(
        root_type=rs.label,
        isogeny=rd.isogeny,
        p=p,
        exists=not reasons,
        fundamental_group_order=order,
        bad_primes=bad,
        reasons=reasons,
    )
