"""Acceptance criteria, one test each; every run prints a PASS/FAIL line."""
from __future__ import annotations

import pytest

from qwsed.reproduce import CRITERIA, run_case


@pytest.mark.parametrize("case", CRITERIA, ids=lambda c: f"criterion_{c.index:02d}")
def test_criterion(case, capsys):
    result = run_case(case)
    with capsys.disabled():
        print(f"\ncriterion {case.index}: {'PASS' if result.passed else 'FAIL'} {case.name}: {result.detail}")
    assert result.passed, result.detail
