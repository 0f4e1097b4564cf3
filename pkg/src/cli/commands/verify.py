"""
Verification commands: verify-d4, verify-springer and verify-all.

verify-all runs the suites in a fixed order and prints one report with a
section per suite.
"""

import logging
from typing import Callable, Dict, List, Optional

import typer

from src.cli.common import GlobalContext, emit_report, fail, get_global_context
from src.d4cheval import verify_d4 as run_d4_suite
from src.matrings import (
    center_character_suite,
    jordan_suite,
    make_ring,
    nilpotent_translate_check,
    pgl2_char2_suite,
)
from src.primes import alcove_suite, subsystems_suite, table1_suite
from src.reporting import CheckRecord, CheckRecorder, SuiteSection, build_report
from src.rootdata import folding_suite, weyl_suite
from src.springer import (
    DescentObstruction,
    SpringerCoefficients,
    commutativity_suite,
    differential_check,
    kawanaka_check,
    kawanaka_suite,
    parse_coefficients,
    solve_quasisplit_typeA,
    springer_suite,
    verify_springer as run_springer_checks,
)
from src.utilities.exceptions import InputError, SpringerIsoError

logger = logging.getLogger(__name__)

TRANSLATE_CASES = ((2, 2), (3, 3), (4, 2))
CENTER_MAX_RANK = 7
CENTER_PRIMES = (2, 3, 5, 7)


def _translate(ctx: GlobalContext) -> List[CheckRecord]:
    checks: List[CheckRecord] = []
    for n, p in TRANSLATE_CASES:
        checks.extend(nilpotent_translate_check(n, p, ctx.samples, ctx.seed, timings=ctx.timings))
    return checks


def _center(ctx: GlobalContext) -> List[CheckRecord]:
    checks: List[CheckRecord] = []
    for r in range(1, CENTER_MAX_RANK + 1):
        for p in CENTER_PRIMES:
            if (r + 1) % p == 0:
                checks.extend(center_character_suite(r, p))
    return checks


def _commutativity(ctx: GlobalContext) -> List[CheckRecord]:
    return (pgl2_char2_suite(budget=ctx.budget, workers=ctx.workers, timings=ctx.timings)
            + jordan_suite(budget=ctx.budget, workers=ctx.workers, timings=ctx.timings)
            + commutativity_suite(ctx.budget, ctx.workers, ctx.timings))


SUITES: Dict[str, Callable[[GlobalContext], List[CheckRecord]]] = {
    "table1": lambda ctx: table1_suite(timings=ctx.timings),
    "subsystems": lambda ctx: subsystems_suite(timings=ctx.timings),
    "alcove": lambda ctx: alcove_suite(timings=ctx.timings),
    "weyl": lambda ctx: weyl_suite(ctx.timings),
    "folding": lambda ctx: folding_suite(ctx.timings),
    "d4": lambda ctx: run_d4_suite(ctx.timings),
    "springer": lambda ctx: springer_suite(ctx.samples, ctx.seed, ctx.budget, ctx.workers, ctx.timings),
    "kawanaka": lambda ctx: kawanaka_suite(ctx.samples, ctx.seed, ctx.timings),
    "commutativity": _commutativity,
    "translate": _translate,
    "center": _center,
}


def run_section(name: str, ctx: GlobalContext) -> SuiteSection:
    """Run one suite; an unexpected error becomes a single failed check."""
    try:
        checks = SUITES[name](ctx)
    except SpringerIsoError as e:
        logger.info("suite %s raised: %s", name, e)
        rec = CheckRecorder(name, ctx.timings)
        rec.record(f"{name}.error", "the suite runs to completion", False, error=str(e))
        checks = rec.checks
    return SuiteSection(suite=name, passed=all(c.passed for c in checks), checks=checks)


def verify_all(
    section: Optional[List[str]] = typer.Option(
        None, "--section", "-s", help=f"Run only these suites: {', '.join(SUITES)} (repeatable)"),
):
    """
    Run every verification suite and print one report.

    Suites run in a fixed order; the report passes iff every check passes.
    """
    ctx = get_global_context()
    try:
        names = list(SUITES) if not section else [s for s in SUITES if s in section]
        unknown = sorted(set(section or []) - set(SUITES))
        if unknown:
            raise InputError(f"unknown suite(s) {', '.join(unknown)}; use {', '.join(SUITES)}")
        sections = []
        for name in names:
            logger.info("running suite %s", name)
            sections.append(run_section(name, ctx))
        report = build_report("verify-all", ctx.seed, sections=sections)
    except Exception as e:
        fail(e)
    emit_report(report)


def verify_d4(
    q: int = typer.Option(3, "--q", help="Odd base field order for the descent cases"),
):
    """
    Run the D4 suite: commutator table, Jacobi identity, Ad(u) fixed space,
    triality and the descent solvers.
    """
    ctx = get_global_context()
    try:
        report = build_report("verify-d4", ctx.seed, checks=run_d4_suite(ctx.timings, q))
    except Exception as e:
        fail(e)
    emit_report(report)


def verify_springer(
    n: int = typer.Option(2, "--n", help="Matrix size minus one (SL_{n+1})"),
    ring: str = typer.Option("F(3)", "--ring", "-r", help="Coefficient ring, the base field with --quasisplit"),
    quasisplit: bool = typer.Option(False, "--quasisplit", help="Solve the quasi-split descent recurrence"),
    ext: Optional[str] = typer.Option(None, "--ext", help="Quadratic extension of --ring; F(p,2k) by default"),
    coeffs: Optional[str] = typer.Option(
        None, "--coeffs", help="';'-separated a_1..a_n; with --quasisplit only a_1 is used"),
    kawanaka: Optional[str] = typer.Option(
        None, "--kawanaka", help="Cocharacter exponents like '1,0,-1' for the filtration congruences"),
):
    """
    Check a type-A Springer map rho(1 + e) = a_1 e + ... + a_n e^n.

    Runs bijectivity, equivariance, uniqueness and centralizer matching; with
    --quasisplit also the recurrence, twisted equivariance and a negative
    control on corrupted coefficients.
    """
    ctx = get_global_context()
    try:
        R = make_ring(ring)
        if quasisplit:
            extension = make_ring(ext) if ext else make_ring(f"F({R.p},{2 * R.field_degree})")
            a1 = parse_coefficients(extension, n, coeffs).coeffs[0] if coeffs else None
            solved = solve_quasisplit_typeA(n, R, extension, a1)
        else:
            solved = parse_coefficients(R, n, coeffs)
        if isinstance(solved, DescentObstruction):
            rec = CheckRecorder("springer", ctx.timings)
            rec.record(f"springer.recurrence.n{n}.{solved.extension}", "quadratic descent coefficients exist",
                       False, obstruction=solved)
            checks = rec.checks
        else:
            checks = run_springer_checks(solved, ctx.samples, ctx.seed, ctx.budget, ctx.workers, ctx.timings)
            if kawanaka and solved.valid:
                checks = checks + _kawanaka_checks(solved, [int(w) for w in kawanaka.split(",")], ctx)
        report = build_report("verify-springer", ctx.seed, checks=checks)
    except ValueError as e:
        fail(InputError(str(e)))
    except Exception as e:
        fail(e)
    emit_report(report)


def _kawanaka_checks(coeffs: SpringerCoefficients, weights: List[int], ctx: GlobalContext) -> List[CheckRecord]:
    rec = CheckRecorder("kawanaka", ctx.timings)
    for m in (1, 2):
        for k in (1, 2):
            kawanaka_check(rec, coeffs, weights, m, k, ctx.samples, ctx.seed)
    differential_check(rec, coeffs)
    return rec.checks
