"""
Tests for the self-test registry and report
"""

from pathlib import Path

import pytest

from tame_langlands import hooks
from tame_langlands.selftest import (
    CheckResult,
    SelftestBounds,
    calibration_modules,
    check_automorphism_groups,
    check_calibration,
    check_mu,
    load_checks,
    render_report,
)


def test_hooks_resolve():
    checks = load_checks()
    assert [path for path, _ in checks] == hooks.selftest_checks
    assert len(checks) == 7
    assert all(callable(check) for _, check in checks)


def test_hooks_indent_with_spaces():
    assert "\t" not in Path(hooks.__file__).read_text()


def test_render_report():
    results = [CheckResult("first", True, "3 fields"), CheckResult("second", False, "1 groups, failing [x]")]
    report = render_report(results, quick=True)
    lines = report.splitlines()
    assert lines[0] == "🔍 TAME LANGLANDS SELF-TEST (quick)"
    assert lines[2] == "✅ first: 3 fields"
    assert lines[3] == "❌ second: 1 groups, failing [x]"
    assert lines[-2] == "📊 SUMMARY: 1/2 checks passed"
    assert lines[-1] == "❌ COUNTEREXAMPLES FOUND"
    assert render_report(results[:1], quick=False).endswith("🎉 ALL CHECKS PASSED\n")


def test_quick_checks():
    bounds = SelftestBounds(quick=True)
    assert check_automorphism_groups(bounds).passed
    assert check_mu(bounds).passed


def test_calibration_modules_cover_the_weil_range():
    modules = calibration_modules(SelftestBounds())
    literals = [M.literal() for M in modules]
    assert len(literals) == len(set(literals))
    assert {M.p for M in modules} == {3, 5, 7}
    assert max(M.group.order for M in modules) == 24
    assert max(M.dimension for M in modules) == 6


def test_calibration_fails_on_skipped_modules(isolated_config):
    isolated_config.set_overrides(bound_dim=1)
    bounds = SelftestBounds(quick=True, bound_group_order=1)
    result = check_calibration(bounds)
    assert not result.passed
    assert f"{len(calibration_modules(bounds))} skipped" in result.detail


@pytest.mark.slow
def test_quick_calibration_has_no_skips():
    result = check_calibration(SelftestBounds(quick=True))
    assert result.passed
    assert ", 0 skipped" in result.detail
