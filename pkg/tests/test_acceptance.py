"""Acceptance criteria 1-8, each at its stated tolerance.

Each criterion yields one ``[PASS]``/``[FAIL]`` line; ``conftest.py`` prints
them together at the end of the run.
"""
import pytest

from pi1red.suites import SUITES, TIME_LIMITS

RESULT_LINES = []


@pytest.mark.parametrize("number", sorted(SUITES))
def test_criterion(number):
    result = SUITES[number](seed=0)
    RESULT_LINES.append(result.line())
    assert result.passed, result.line()
    limit = TIME_LIMITS.get(number)
    if limit is not None:
        assert result.seconds <= limit, result.line()
