"""
Prime-classification commands: classify, table1 and exists.
"""

import typer

from src.cli.common import EXIT_FAILURE, fail, format_output, format_rows
from src.primes import RootDatum, classification_table, springer_exists, table1_rows
from src.rootdata import root_system


def classify(
    root_type: str = typer.Argument(..., help="Root system type, e.g. E6"),
    isogeny: str = typer.Option("sc", "--isogeny", "-i", help="sc, adj or weight generators like '1,0,1'"),
    method: str = typer.Option("auto", "--method", help="Subsystem enumeration: auto, extended or bruteforce"),
    torus_rank: int = typer.Option(0, "--torus-rank", help="Rank of a central torus"),
):
    """
    Classify the bad, torsion and singular primes of a root system.

    The fundamental group and centre invariants are those of the datum
    selected with --isogeny.
    """
    try:
        rs = root_system(root_type)
        datum = RootDatum.from_descriptor(rs, isogeny, torus_rank)
        report = classification_table(rs, datum, method=method)
    except Exception as e:
        fail(e)
    format_output(report, title=f"Primes of {report.root_type}")


def table1():
    """
    Bad, torsion and singular primes for the representative types.

    Exits with code 1 if any row disagrees with the reference table.
    """
    try:
        rows = table1_rows()
    except Exception as e:
        fail(e)
    passed = all(row.matches and row.torsion_in_bad for row in rows)
    format_rows([row.model_dump() for row in rows], title="Bad, torsion and singular primes",
                extra={"passed": passed})
    if not passed:
        raise typer.Exit(code=EXIT_FAILURE)


def exists(
    root_type: str = typer.Argument(..., help="Root system type, e.g. D4"),
    isogeny: str = typer.Argument(..., help="sc, adj or weight generators like '1,0,1'"),
    p: int = typer.Argument(..., help="A prime, or 0 for characteristic zero"),
    torus_rank: int = typer.Option(0, "--torus-rank", help="Rank of a central torus"),
):
    """
    Decide whether a Springer isomorphism exists in characteristic p.
    """
    try:
        decision = springer_exists(RootDatum.from_descriptor(root_system(root_type), isogeny, torus_rank), p)
    except Exception as e:
        fail(e)
    format_output(decision, title=f"Springer isomorphism for {root_type} ({isogeny}) at p = {p}")
