"""Verdict reports for the verification suites."""

from .models import (
    SCHEMA_VERSION,
    CheckRecord,
    CheckRecorder,
    SuiteSection,
    VerdictReport,
    build_report,
    plain,
)

__all__ = [
    'SCHEMA_VERSION',
    'CheckRecord',
    'CheckRecorder',
    'SuiteSection',
    'VerdictReport',
    'build_report',
    'plain',
]
