"""The verification framework: report bookkeeping, rendering, suite registry,
and quick-mode subsetting. The heavy suites themselves run in the acceptance
tests and behind the CLI."""

from __future__ import annotations

import json

from matchgame import verify
from matchgame.verify import VerificationReport, verify_all


def test_report_accounting_and_failure_capture():
    rep = VerificationReport("demo", "claims add up")
    rep.check("first", 3, 3)
    rep.check("second", 3, 4)
    rep.check("third", "x", "x")
    assert not rep.passed
    assert len(rep.rows) == 3
    assert [row.instance for row in rep.failures] == ["second"]
    d = rep.to_dict()
    assert (d["checked"], d["failed"], d["passed"]) == (3, 1, False)
    assert json.dumps(d)  # serializable as-is


def test_report_rendering_modes():
    rep = VerificationReport("demo", "claims add up")
    rep.check("good", 1, 1)
    rep.check("bad", 1, 2)
    text = rep.render_text()
    assert "[FAIL]" in text and "bad" in text and "good" not in text
    verbose = rep.render_text(verbose=True)
    assert "good" in verbose
    ok = VerificationReport("demo2", "fine")
    ok.check("only", 0, 0)
    assert "[PASS]" in ok.render_text()


def test_registry_names_are_unique_and_complete():
    names = [name for name, _ in verify.ALL_SUITES]
    assert len(names) == len(set(names)) == 18
    for expected in ("recurrence", "paths", "tree-scan", "strategy-guarantees"):
        assert expected in names


def test_single_suite_selection():
    reports = verify_all(suites=("recurrence",))
    assert [r.suite for r in reports] == ["recurrence"]
    assert reports[0].passed
    assert reports[0].seconds >= 0.0


def test_unknown_suite_is_rejected():
    import pytest

    from matchgame.errors import InvalidInput

    with pytest.raises(InvalidInput):
        verify_all(suites=("no-such-suite",))


def test_quick_mode_runs_every_suite():
    reports = verify_all(quick=True)
    assert len(reports) == 18
    assert all(r.passed for r in reports), [r.suite for r in reports if not r.passed]
