"""
Diagram folding command.
"""

from typing import List, Optional

import typer

from src.cli.common import fail, format_output
from src.rootdata import DiagramAutomorphism, fold as fold_root_system, named_automorphisms, root_system
from src.utilities.exceptions import AutomorphismError


def _permutation(text: str) -> DiagramAutomorphism:
    try:
        images = [int(x) - 1 for x in text.split(",")]
    except ValueError:
        raise AutomorphismError(f"cannot parse permutation {text!r}; use 1-based images like '1,2,4,3'")
    return DiagramAutomorphism(tuple(images), text)


def fold(
    root_type: str = typer.Argument(..., help="Root system type, e.g. D4"),
    auto: Optional[List[str]] = typer.Option(
        None, "--auto", "-a", help="Named automorphism: flip, rot3, lambda, mu, s3 (repeatable)"),
    perm: Optional[List[str]] = typer.Option(
        None, "--perm", help="Explicit 1-based node permutation such as '1,2,4,3' (repeatable)"),
):
    """
    Fold a root system along the group generated by diagram automorphisms.

    With neither --auto nor --perm the flip is used.
    """
    try:
        rs = root_system(root_type)
        autos = []
        for name in auto or ([] if perm else ["flip"]):
            autos.extend(named_automorphisms(rs, name))
        autos.extend(_permutation(text) for text in perm or [])
        result = fold_root_system(rs, autos)
    except Exception as e:
        fail(e)
    format_output(result, title=f"{root_type} folded to {result.folded_type}")
