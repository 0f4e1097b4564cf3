"""
Verdict models shared by every verification suite.

Suites collect CheckRecords through a CheckRecorder; the CLI wraps them in a
VerdictReport. Witness data is normalized to plain JSON types when recorded so
that serialization is deterministic.
"""

import logging
import time
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src import __version__

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


def plain(value: Any) -> Any:
    """Convert numpy scalars and arrays, tuples and sets into JSON-ready values."""
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(plain(v) for v in value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    return value


class CheckRecord(BaseModel):
    """One verified statement: its id, the fact it anchors to, and the outcome."""

    id: str
    anchor: str
    passed: bool
    witness: Dict[str, Any] = Field(default_factory=dict)
    runtime_ms: Optional[float] = None


class SuiteSection(BaseModel):
    suite: str
    passed: bool
    checks: List[CheckRecord]


class VerdictReport(BaseModel):
    """
    The document every command prints.

    passed is true iff every check (and every section) passed.
    """

    model_config = ConfigDict(populate_by_name=True)

    schema_: int = Field(default=SCHEMA_VERSION, alias="schema")
    suite: str
    version: str = __version__
    seed: int
    passed: bool
    status: str
    checks: List[CheckRecord] = Field(default_factory=list)
    sections: List[SuiteSection] = Field(default_factory=list)

    def to_json_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True)


class CheckRecorder:
    """
    Collects check records for one suite.

    With timings enabled each record carries the wall time since the previous
    record (or since the recorder was created).
    """

    def __init__(self, suite: str, timings: bool = False) -> None:
        self.suite = suite
        self.timings = timings
        self.checks: List[CheckRecord] = []
        self._last = time.perf_counter()

    def record(self, id: str, anchor: str, passed: bool, **witness: Any) -> bool:
        now = time.perf_counter()
        runtime = round((now - self._last) * 1000.0, 3) if self.timings else None
        self._last = now
        check = CheckRecord(id=id, anchor=anchor, passed=bool(passed),
                            witness=plain(witness), runtime_ms=runtime)
        self.checks.append(check)
        if not check.passed:
            logger.info("%s: check %s failed", self.suite, id)
        return check.passed

    def extend(self, checks: List[CheckRecord]) -> None:
        self.checks.extend(checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def section(self) -> SuiteSection:
        return SuiteSection(suite=self.suite, passed=self.passed, checks=self.checks)


def build_report(suite: str, seed: int, checks: Optional[List[CheckRecord]] = None,
                 sections: Optional[List[SuiteSection]] = None) -> VerdictReport:
    checks = checks or []
    sections = sections or []
    passed = all(c.passed for c in checks) and all(s.passed for s in sections)
    return VerdictReport(suite=suite, seed=seed, passed=passed,
                         status="pass" if passed else "fail",
                         checks=checks, sections=sections)
