"""
Coefficient solvers: split and quasi-split type A, and the D4 descent cases.
"""

from typing import Optional

import typer

from src.cli.common import EXIT_FAILURE, fail, format_output
from src.d4cheval import DESCENT_CASES, solve_descent as solve_d4_descent
from src.matrings import make_ring
from src.springer import DescentObstruction, field_spec, solve_quasisplit_typeA, solve_split
from src.utilities.exceptions import InputError

TYPE_A_CASES = ("split", "c2")


def _solve_type_a(case: str, n: int, q: int, a1: Optional[str]) -> dict:
    base = make_ring(field_spec(q))
    if case == "split":
        coeffs = solve_split(n, base, base.parse_element(a1) if a1 is not None else None)
        return {"type": "A", "case": case, "q": q, **coeffs.describe()}
    extension = make_ring(f"F({base.p},{2 * base.field_degree})")
    solved = solve_quasisplit_typeA(n, base, extension, extension.parse_element(a1) if a1 is not None else None)
    if isinstance(solved, DescentObstruction):
        return {"type": "A", "case": case, "q": q, "valid": False, "obstruction": solved.model_dump()}
    return {"type": "A", "case": case, "q": q, "base": base.name, **solved.describe()}


def solve_descent(
    root_type: str = typer.Option("D4", "--type", "-t", help="A or D4"),
    case: str = typer.Option("split", "--case", "-c", help="split, c2, c3 or s3 (type A: split or c2)"),
    q: int = typer.Option(3, "--q", help="Order of the base field"),
    n: int = typer.Option(2, "--n", help="Type A: matrix size minus one"),
    a1: Optional[str] = typer.Option(None, "--a1", help="a_1, a unit of the base field"),
    a2: str = typer.Option("0", "--a2", help="D4 split and c2 cases: a_2"),
    a3: str = typer.Option("0", "--a3", help="D4 split case: a_3"),
    a4: str = typer.Option("0", "--a4", help="D4: a_4, an element of the base field"),
):
    """
    Solve for Springer coefficients that descend to a form over F_q.

    Type A covers the split form and the quasi-split unitary form (c2).
    D4 covers the split form and descent along cyclic groups of order 2 and
    3 and along S3.
    """
    try:
        kind = root_type.strip().upper()
        if kind == "A":
            if case not in TYPE_A_CASES:
                raise InputError(f"type A descends only in the cases {', '.join(TYPE_A_CASES)}, not {case!r}")
            result = _solve_type_a(case, n, q, a1)
        elif kind == "D4":
            if case not in DESCENT_CASES:
                raise InputError(f"unknown D4 case {case!r}; use one of {', '.join(DESCENT_CASES)}")
            result = {"type": "D4", **solve_d4_descent(case, q, a1=a1 or "1", a4=a4, a2=a2, a3=a3).model_dump()}
        else:
            raise InputError(f"descent is solved for types A and D4, not {root_type!r}")
    except Exception as e:
        fail(e)
    format_output(result, title=f"{kind} descent, case {case}, q = {q}")
    if not result.get("valid", False):
        raise typer.Exit(code=EXIT_FAILURE)
