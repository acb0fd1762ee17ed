"""
test_verify_paper.py
────────────────────
The acceptance suites, run through ``run_suite``.

Usage:
    pytest test_verify_paper.py            # s2 only
    pytest test_verify_paper.py -m slow    # every suite
"""

import pytest

from verify_paper import CHECKS, SCOPES, Check, SuiteReport, run_suite


def test_every_scope_has_checks():
    tags = {tag for tag, _, _ in CHECKS}
    assert tags == set(SCOPES)


def test_tilting_suite_passes():
    report = run_suite("s2")
    assert report.checks
    assert all(c.scope == "s2" for c in report.checks)
    assert report.passed, [c.detail for c in report.checks if not c.passed]


@pytest.mark.slow
@pytest.mark.parametrize("scope", ["s3", "s4", "s5"])
def test_suite_passes(scope):
    report = run_suite(scope)
    assert report.passed, [f"{c.name}: {c.detail}" for c in report.checks if not c.passed]


def test_unknown_scope():
    with pytest.raises(ValueError):
        run_suite("s9")


def test_report_rendering():
    report = SuiteReport("s2", [Check("one", "s2", True, 0.5), Check("two", "s2", False, 1.25, "why")])
    assert not report.passed
    assert repr(report) == "SuiteReport(s2: 1/2 passed)"
    assert "elapsed_s" not in report.to_dict()["checks"][0]
    assert report.to_dict(timing=True)["checks"][1]["elapsed_s"] == 1.25
    text = report.to_markdown()
    assert "| ❌ | s2 | two | 1.25s | why |" in text
    assert text.endswith("1/2 checks passed")
