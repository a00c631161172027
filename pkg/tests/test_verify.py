"""Verification-suite plumbing: dispatch rules, result formatting."""

import pytest

from splitoct.verify import (SUITE_NAMES, CheckResult, SuiteResult, run_suite,
                             verify_centralizers)


def test_suite_names():
    assert SUITE_NAMES == ("identities", "singular", "centralizers",
                           "classification", "orbits", "all")


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("nonesuch")


@pytest.mark.parametrize("suite", ["singular", "classification", "orbits"])
def test_f2_only_suites_reject_other_fields(suite):
    with pytest.raises(ValueError):
        run_suite(suite, 3)


def test_centralizers_field_restriction():
    with pytest.raises(ValueError):
        verify_centralizers(5)
    with pytest.raises(ValueError):
        run_suite("centralizers", 5)


def test_check_result_formatting():
    ok = CheckResult(name="thing", passed=True, checked=12,
                     counterexample=None)
    assert ok.line() == "  [ok] thing: 12 instances"
    bad = CheckResult(name="thing", passed=False, checked=3,
                      counterexample="x=0")
    assert "[FAIL]" in bad.line()
    assert "x=0" in bad.line()


def test_suite_result_aggregation():
    checks = [
        CheckResult(name="a", passed=True, checked=5, counterexample=None),
        CheckResult(name="b", passed=False, checked=2, counterexample="boom"),
    ]
    res = SuiteResult(suite="identities", field=2, checks=checks, elapsed=0.25)
    assert not res.passed
    assert res.total_checked == 7
    assert res.first_counterexample() == "b: boom"
    head = res.lines()[0]
    assert head.startswith("suite identities (field 2): FAIL")
    assert len(res.lines()) == 1 + len(checks)


def test_centralizers_suite_runs_quickly():
    results = run_suite("centralizers", 2)
    assert len(results) == 1
    (res,) = results
    assert res.passed
    assert res.field == 2
    assert res.total_checked > 250
    assert res.first_counterexample() is None
