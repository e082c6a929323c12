"""End-to-end acceptance gate.

Each criterion recomputes its quantities along independent routes and demands
exact (zero-tolerance) agreement, pinned values included.  One line is
printed per criterion; run with ``pytest -s`` to watch them go by.
"""

import pytest

from cochar.hilbert import utn_mult_series
from cochar.hooks import utn_hook_mult_series
from cochar.verify import ACCEPTANCE_CHECKS


def test_catalog_is_complete():
    assert len(ACCEPTANCE_CHECKS) == 9


@pytest.mark.parametrize("check", ACCEPTANCE_CHECKS,
                         ids=[c.__name__ for c in ACCEPTANCE_CHECKS])
def test_criterion(check):
    result = check()
    line = f"{'PASS' if result.passed else 'FAIL'}  {result.name}: {result.detail}"
    print(line)
    assert result.passed, line


def test_headline_values():
    ut2 = utn_mult_series(2, 2, 8)
    assert ut2.coefficient((5, 2)) == 11
    assert ut2.coefficient((4, 3)) == 8
    ut3 = utn_mult_series(3, 2, 8)
    assert ut3.coefficient((4, 3)) == 14
    hooked = utn_hook_mult_series(2, 2, 3, 8)
    assert hooked.coefficient((4, 2, 1, 1)) == 38
    assert utn_hook_mult_series(3, 1, 1, 5).coefficient((3, 1, 1)) == 6
