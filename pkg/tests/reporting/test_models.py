"""
Tests for check records and verdict reports.
"""

import json

import numpy as np

from src.reporting import SCHEMA_VERSION, CheckRecorder, SuiteSection, build_report, plain


class TestPlain:

    def test_numpy_values(self):
        assert plain({"a": np.int64(3), "b": np.bool_(True), "c": np.arange(3)}) == {"a": 3, "b": True, "c": [0, 1, 2]}

    def test_sets_are_sorted(self):
        assert plain({(2, 1), (1, 2)}) == [[1, 2], [2, 1]]

    def test_keys_become_strings(self):
        assert plain({2: "x"}) == {"2": "x"}


class TestCheckRecorder:

    def test_record_returns_outcome(self):
        rec = CheckRecorder("demo")
        assert rec.record("demo.one", "one holds", True, value=np.int64(1))
        assert not rec.record("demo.two", "two holds", False)
        assert not rec.passed
        assert rec.checks[0].witness == {"value": 1}
        assert rec.checks[0].runtime_ms is None

    def test_timings(self):
        rec = CheckRecorder("demo", timings=True)
        rec.record("demo.one", "one holds", True)
        assert rec.checks[0].runtime_ms is not None
        assert rec.checks[0].runtime_ms >= 0

    def test_section(self):
        rec = CheckRecorder("demo")
        rec.record("demo.one", "one holds", True)
        section = rec.section()
        assert section.suite == "demo"
        assert section.passed


class TestBuildReport:

    def test_passed_report(self):
        rec = CheckRecorder("demo")
        rec.record("demo.one", "one holds", True)
        report = build_report("demo", 42, checks=rec.checks)
        assert report.passed
        assert report.status == "pass"

    def test_failed_section_fails_report(self):
        good = CheckRecorder("good")
        good.record("good.one", "one holds", True)
        bad = CheckRecorder("bad")
        bad.record("bad.one", "one fails", False)
        report = build_report("all", 7, sections=[good.section(), bad.section()])
        assert not report.passed
        assert report.status == "fail"

    def test_json_document(self):
        report = build_report("demo", 5, sections=[SuiteSection(suite="s", passed=True, checks=[])])
        document = json.loads(json.dumps(report.to_json_dict()))
        assert document["schema"] == SCHEMA_VERSION
        assert document["seed"] == 5
        assert document["sections"][0]["suite"] == "s"
        assert "schema_" not in document
