"""Acceptance suite: the ten cross-checks on their full grids.

Each test prints one ``criterion N name: PASS/FAIL`` line (run with -s to see
them inline; they also appear in the captured output on failure).
"""

import pytest

from borelschur import crosscheck


@pytest.mark.parametrize("number", range(1, 11))
def test_criterion(number):
    res = crosscheck.run_check(number, quick=False)
    print(res.line())
    assert res.passed, res.detail
