#!/usr/bin/env python3
"""
Pruebas del registro de suites de verificación.

Solo se ejecutan suites baratas; las demás se corren con `main.py verify all`.
"""
import pytest

from app.classes import HalfspaceIntersection
from app.dimension import lvc_dim, vc_dim
from app.utils.error_handler import UnknownSuiteError
from app.verify import CheckResult, SUITES, VerifyReport, _dimension_cases, list_suites, verify, verify_many


class TestRegistry:
    """Lista de suites"""

    def test_fifteen_suites(self):
        names = list_suites()
        assert len(names) == 15
        assert names[0] == "dims"
        assert set(names) == set(SUITES)

    def test_unknown_suite(self):
        with pytest.raises(UnknownSuiteError):
            verify("nope", seed=1)

    def test_unknown_suite_in_batch(self):
        with pytest.raises(UnknownSuiteError):
            verify_many(["ssd-birthday", "nope"], seed=1, threads=1)

    def test_unknown_suite_is_a_key_error(self):
        with pytest.raises(KeyError):
            verify("nope", seed=1)


class TestReport:
    """VerifyReport agrega los checks"""

    def test_failures(self):
        ok = CheckResult(name="a", statement="s", expected="1", observed="1", passed=True)
        bad = CheckResult(name="b", statement="s", expected="1", observed="2", passed=False)
        report = VerifyReport(suite="dims", seed=1, checks=[ok, bad])
        assert not report.passed
        assert report.failures == [bad]

    def test_empty_report_passes(self):
        assert VerifyReport(suite="dims", seed=1).passed


class TestCheapSuites:
    """Suites que corren en segundos"""

    def test_birthday_suite(self):
        report = verify("ssd-birthday", seed=3)
        assert report.passed, [c.model_dump() for c in report.failures]
        assert len(report.checks) == 2
        assert report.seed == 3

    def test_default_seed_from_env(self, monkeypatch):
        monkeypatch.setenv("LVC_DEFAULT_SEED", "11")
        assert verify("ssd-birthday").seed == 11

    def test_batch_keeps_requested_order(self):
        reports = verify_many(["ssd-birthday", "ssd-birthday"], seed=5, threads=2)
        assert [r.suite for r in reports] == ["ssd-birthday", "ssd-birthday"]
        assert reports[0].checks == reports[1].checks

    def test_maximum_suite(self):
        report = verify("maximum", seed=2)
        assert report.passed, [c.model_dump() for c in report.failures]


class TestIntersectionIdentities:
    """vc = lvc = nk + 1 para intersecciones sobre la curva de momentos"""

    def test_expected_values(self):
        cases = [(C, S, expected) for _, C, S, expected in _dimension_cases() if isinstance(C, HalfspaceIntersection)]
        assert [expected for *_, expected in cases] == [3, 5, 5]
        for C, S, expected in cases:
            assert vc_dim(C, S) == lvc_dim(C, S) == expected
