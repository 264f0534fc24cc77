"""Acceptance gate: every criterion of the fixed checklist at its pinned
tolerance, one printed pass/fail line each.  Run with -s (or -v) to see the
lines; the suite fails if any criterion fails."""

import pytest

from hbq import acceptance


@pytest.mark.parametrize("number", range(1, 11))
def test_criterion(number):
    result = acceptance.run_criterion(number)
    print()
    print(result.line())
    for detail in result.details[:8]:
        print(f"    {detail}")
    assert result.passed, f"criterion {number} failed: {result.details}"
