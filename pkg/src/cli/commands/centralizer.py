"""
Centralizer command for elements of GL_n, SL_n and PGL_n over finite rings.
"""

import re
from typing import Optional, Tuple

import numpy as np
import typer

from src.cli.common import fail, format_output, get_global_context
from src.matrings import (
    GroupElement,
    LieElement,
    centralizer_points,
    format_matrix,
    identity,
    is_regular_typeA,
    lie_centralizer,
    make_ring,
    noncommuting_pair,
)
from src.utilities.exceptions import FlavorError

_GROUP_RE = re.compile(r"^\s*(GL|SL|PGL)\s*(\d+)\s*$", re.IGNORECASE)

MAX_LISTED_POINTS = 256


def parse_group(text: str) -> Tuple[str, int]:
    """
    "SL2" -> ("SL", 2).

    Raises:
        FlavorError: For anything but GL, SL or PGL with a positive size.
    """
    match = _GROUP_RE.match(text)
    if not match or int(match.group(2)) < 1:
        raise FlavorError(f"cannot parse group {text!r}; use e.g. SL2, GL3 or PGL2")
    return match.group(1).upper(), int(match.group(2))


def centralizer(
    group: str = typer.Option("SL2", "--group", "-g", help="GL<n>, SL<n> or PGL<n>"),
    ring: str = typer.Option("F(2)", "--ring", "-r", help="Ring spec, e.g. 'F(2)[e]/e^2'"),
    elem: Optional[str] = typer.Option(
        None, "--elem", "-e", help="Matrix literal '1,1;0,1'; the regular unipotent by default"),
    lie: bool = typer.Option(False, "--lie", help="Treat the element as a Lie algebra element"),
    method: str = typer.Option("auto", "--method", help="auto, bruteforce or linear"),
):
    """
    Compute the centralizer of an element as a point set and as a Lie algebra.

    Reports the number of points, whether they commute, the F_p-dimension of
    the Lie centralizer and, over fields, regularity.
    """
    ctx = get_global_context()
    try:
        flavor, n = parse_group(group)
        R = make_ring(ring)
        if elem is None:
            M = np.full((n, n), R.zero, dtype=np.int64) if lie else identity(R, n).copy()
            M[np.arange(n - 1), np.arange(1, n)] = R.one
            literal = format_matrix(R, M)
        else:
            literal = elem
        target = (LieElement.parse(R, literal, flavor.lower()) if lie
                  else GroupElement.parse(R, literal, flavor))
        if target.n != n:
            raise FlavorError(f"element has size {target.n}, group {group} has size {n}")
        points = centralizer_points(target, flavor, method=method,
                                    budget=ctx.budget, workers=ctx.workers)
        pair = noncommuting_pair(points)
        tangent = lie_centralizer(target)
        regular = is_regular_typeA(target) if R.is_field else None
    except Exception as e:
        fail(e)
    format_output({
        "group": f"{flavor}{n}",
        "ring": R.name,
        "element": target.to_literal(),
        "lie": lie,
        "method": points.method,
        "candidates": points.candidates,
        "count": points.count,
        "commutative": pair is None,
        "noncommuting_pair": None if pair is None else [format_matrix(R, h) for h in pair],
        "points": points.literals() if points.count <= MAX_LISTED_POINTS else None,
        "lie_flavor": tangent.flavor,
        "lie_dimension_fp": tangent.dimension_fp,
        "lie_dimension": tangent.dimension,
        "regular": regular,
    }, title=f"Centralizer in {flavor}{n}({R.name})")
